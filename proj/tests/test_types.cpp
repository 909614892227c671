#include <doctest.h>

#include <array>

#include "smdedge/types.hpp"

using smdedge::DetectorParams;
using smdedge::EdgeMap;
using smdedge::GrayImage;

TEST_CASE("GrayImage construction and round-trip") {
  const std::array<int, 11> row = {2, 2, 2, 2, 2, 5, 8, 8, 8, 8, 8};
  const auto img = GrayImage::from_values(1, 11, row);
  CHECK(img.rows() == 1);
  CHECK(img.cols() == 11);
  for (int c = 0; c < 11; ++c) CHECK(img.at(0, c) == row[static_cast<std::size_t>(c)]);

  const auto tiny = GrayImage::from_values(1, 1, std::array<int, 1>{0});
  CHECK(tiny.at(0, 0) == 0);
}

TEST_CASE("GrayImage rejects bad shapes and values") {
  CHECK_THROWS_AS(GrayImage(2, 3, std::vector<std::uint8_t>(4)), std::invalid_argument);
  CHECK_THROWS_AS(GrayImage(0, 3, std::vector<std::uint8_t>{}), std::invalid_argument);
  CHECK_THROWS_AS(GrayImage::from_values(1, 2, std::array<int, 2>{0, 256}),
                  std::invalid_argument);
  CHECK_THROWS_AS(GrayImage::from_values(1, 2, std::array<int, 2>{-1, 0}),
                  std::invalid_argument);
}

TEST_CASE("EdgeMap only accepts 0 and 255") {
  EdgeMap map(2, 2, {0, 255, 255, 0});
  CHECK(map.edge_count() == 2);
  CHECK(map.is_edge(0, 1));
  CHECK_FALSE(map.is_edge(0, 0));
  CHECK_THROWS_AS(EdgeMap(1, 2, {0, 254}), std::invalid_argument);
  CHECK_THROWS_AS(EdgeMap(1, 2, {1, 255}), std::invalid_argument);

  EdgeMap blank(3, 4);
  CHECK(blank.edge_count() == 0);
  blank.mark(2, 3);
  CHECK(blank.edge_count() == 1);
}

TEST_CASE("DetectorParams validation") {
  DetectorParams p;
  CHECK_NOTHROW(smdedge::validate(p));

  p.advance_on_edge = 2;
  CHECK_THROWS_AS(smdedge::validate(p), std::invalid_argument);
  p.advance_on_edge = 1;
  CHECK_NOTHROW(smdedge::validate(p));

  p.blur_kernel = 4;
  CHECK_THROWS_AS(smdedge::validate(p), std::invalid_argument);
  p.blur_kernel = 1;
  CHECK_NOTHROW(smdedge::validate(p));

  p.thres = -0.1;
  CHECK_THROWS_AS(smdedge::validate(p), std::invalid_argument);
}
