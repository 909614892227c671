#include <doctest.h>

#include <string>

#include "fixtures.hpp"
#include "smdedge/pgm.hpp"

using namespace smdedge;

namespace {

std::vector<std::uint8_t> bytes_of(const std::string& header,
                                   std::initializer_list<int> payload) {
  std::vector<std::uint8_t> out(header.begin(), header.end());
  for (int v : payload) out.push_back(static_cast<std::uint8_t>(v));
  return out;
}

}  // namespace

TEST_CASE("read_pgm decodes the documented layout") {
  const auto img = read_pgm(bytes_of("P5\n2 2\n255\n", {0, 64, 128, 255}));
  CHECK(img.rows() == 2);
  CHECK(img.cols() == 2);
  CHECK(img.at(0, 0) == 0);
  CHECK(img.at(0, 1) == 64);
  CHECK(img.at(1, 0) == 128);
  CHECK(img.at(1, 1) == 255);
}

TEST_CASE("read_pgm accepts header comments and loose whitespace") {
  const auto img =
      read_pgm(bytes_of("P5 # a comment\n# another\n 3\t1 # w\n255 ", {9, 8, 7}));
  CHECK(img.rows() == 1);
  CHECK(img.cols() == 3);
  CHECK(img.at(0, 2) == 7);
}

TEST_CASE("read_pgm rejects malformed input") {
  CHECK_THROWS_AS(read_pgm(bytes_of("P2\n2 2\n255\n", {0, 0, 0, 0})), FormatError);
  CHECK_THROWS_AS(read_pgm(bytes_of("P6\n2 2\n255\n", {0, 0, 0, 0})), FormatError);
  CHECK_THROWS_AS(read_pgm(bytes_of("garbage", {})), FormatError);
  CHECK_THROWS_AS(read_pgm(bytes_of("P5\n2 2\n255\n", {0, 0, 0})), FormatError);
  CHECK_THROWS_AS(read_pgm(bytes_of("P5\n2 2\n65535\n", {0, 0, 0, 0})), FormatError);
  CHECK_THROWS_AS(read_pgm(bytes_of("P5\n0 2\n255\n", {})), FormatError);
  CHECK_THROWS_AS(read_pgm(bytes_of("P5\n2 2\n", {})), FormatError);
}

TEST_CASE("write_pgm emits the canonical form") {
  const GrayImage img(1, 1, {0});
  const auto bytes = write_pgm(img);
  const std::string want = std::string("P5\n1 1\n255\n") + '\0';
  CHECK(std::string(bytes.begin(), bytes.end()) == want);
}

TEST_CASE("the worked sample row serializes to its own intensities") {
  const GrayImage img(1, 11, {2, 2, 2, 2, 2, 5, 8, 8, 8, 8, 8});
  const auto bytes = write_pgm(img);
  const std::string header = "P5\n11 1\n255\n";
  REQUIRE(bytes.size() == header.size() + 11);
  for (int c = 0; c < 11; ++c)
    CHECK(bytes[header.size() + static_cast<std::size_t>(c)] == img.at(0, c));
}

TEST_CASE("round-trip identity and canonical re-serialization") {
  for (std::uint32_t seed : {1u, 2u, 3u}) {
    const auto img = fixtures::random_image(17, 23, seed);
    const auto bytes = write_pgm(img);
    const auto back = read_pgm(bytes);
    CHECK(back == img);
    CHECK(write_pgm(back) == bytes);
  }

  // A messy but valid header re-serializes to the canonical form.
  const auto messy = bytes_of("P5  # c\n 2\n2  255\t", {1, 2, 3, 4});
  const auto canonical = write_pgm(read_pgm(messy));
  CHECK(std::string(canonical.begin(), canonical.begin() + 10) == "P5\n2 2\n255");
}
