#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "smdedge/postprocess.hpp"

using smdedge::EdgeMap;
using smdedge::eliminate_isolated;

TEST_CASE("a lone center pixel disappears") {
  EdgeMap map(3, 3);
  map.mark(1, 1);
  std::int64_t removed = 0;
  const auto out = eliminate_isolated(map, &removed);
  CHECK(out.edge_count() == 0);
  CHECK(removed == 1);
}

TEST_CASE("diagonal neighbours keep each other alive") {
  EdgeMap map(3, 3);
  map.mark(0, 0);
  map.mark(1, 1);
  const auto out = eliminate_isolated(map);
  CHECK(out.is_edge(0, 0));
  CHECK(out.is_edge(1, 1));
  CHECK(out.edge_count() == 2);
}

TEST_CASE("corner pixel with no neighbours disappears") {
  EdgeMap map(4, 4);
  map.mark(0, 3);
  map.mark(3, 0);
  const auto out = eliminate_isolated(map);
  CHECK(out.edge_count() == 0);
}

TEST_CASE("matches the double-loop oracle on random maps") {
  for (std::uint32_t seed = 0; seed < 100; ++seed) {
    const auto map = fixtures::random_edge_map(16, 16, seed, 0.12);
    const auto got = eliminate_isolated(map);
    const auto want = oracle::eliminate_isolated(map.values(), 16, 16);
    CHECK(got.values() == want);
  }
}

TEST_CASE("idempotent and monotone on random maps") {
  for (std::uint32_t seed = 100; seed < 200; ++seed) {
    const auto map = fixtures::random_edge_map(32, 32, seed, 0.08);
    const auto once = eliminate_isolated(map);
    const auto twice = eliminate_isolated(once);
    CHECK(once == twice);

    // Survivors are a subset of the input edges; nothing ever appears.
    for (int r = 0; r < 32; ++r)
      for (int c = 0; c < 32; ++c)
        if (once.is_edge(r, c)) CHECK(map.is_edge(r, c));
  }
}
