#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <sstream>

#include "gersh/gershgorin.hpp"
#include "gersh/io.hpp"
#include "gersh/shifted.hpp"
#include "gersh/svg.hpp"
#include "support/generators.hpp"

using namespace gersh;
using gersh::io::json;
using testsupport::random_complex_matrix;

TEST_CASE("matrix JSON round-trips bit-identically") {
  std::mt19937_64 rng(777);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    const DenseMatrix a = random_complex_matrix(rng, n, 3.0);
    const std::string text = io::dump_report(io::matrix_to_json(a));
    const DenseMatrix back = io::matrix_from_json(io::parse_json_text(text));
    REQUIRE(back == a);
  }
}

TEST_CASE("certificate JSON round-trips through shortest decimals") {
  std::mt19937_64 rng(778);
  const DenseMatrix a = random_complex_matrix(rng, 4, 2.0);
  const Certificate cert = check_condition3(a, Complex{0.25, -1.5});
  const json j = io::certificate_to_json(cert);
  const json back = io::parse_json_text(io::dump_report(j));
  CHECK(back["verdict"].get<bool>() == cert.verdict);
  CHECK(back["rank_lower_bound"].get<int>() == cert.rank_lower_bound);
  const auto margins = back["row_margins"].get<std::vector<double>>();
  REQUIRE(margins.size() == cert.row_margins.size());
  for (std::size_t i = 0; i < margins.size(); ++i)
    REQUIRE(margins[i] == cert.row_margins[i]);  // bit-identical
  for (std::size_t i = 0; i < 4; ++i)
    REQUIRE(io::complex_from_json(back["shifts"]["row_shifts"][i]) ==
            cert.shifts.row_shifts[i]);
}

TEST_CASE("csv parsing") {
  SECTION("plain real matrix") {
    std::istringstream in("1, 2.5, -3\n0, 1e-3, 4\n");
    const DenseMatrix m = io::matrix_from_csv(in);
    REQUIRE(m.rows() == 2);
    REQUIRE(m.cols() == 3);
    CHECK(m.at(0, 1) == Complex{2.5, 0.0});
    CHECK(m.at(1, 1) == Complex{1e-3, 0.0});
    CHECK(m.is_real());
  }
  SECTION("ragged rows rejected") {
    std::istringstream in("1,2\n3\n");
    CHECK_THROWS_AS(io::matrix_from_csv(in), parse_error);
  }
  SECTION("junk rejected") {
    std::istringstream in("1,two\n");
    CHECK_THROWS_AS(io::matrix_from_csv(in), parse_error);
  }
  SECTION("empty input rejected") {
    std::istringstream in("");
    CHECK_THROWS_AS(io::matrix_from_csv(in), parse_error);
  }
}

TEST_CASE("point set JSON") {
  PointPairSet s;
  s.dimension = 2;
  s.epsilon = 0.125;
  s.pairs.emplace_back(std::vector<double>{1.0, 0.0}, std::vector<double>{-1.0, 0.0});
  s.pairs.emplace_back(std::vector<double>{0.0, 1.0}, std::vector<double>{0.0, -1.0});
  const auto text = io::dump_report(io::point_set_to_json(s));
  const PointPairSet back = io::point_set_from_json(io::parse_json_text(text));
  CHECK(back.dimension == 2);
  CHECK(back.epsilon == 0.125);
  REQUIRE(back.pairs.size() == 2);
  CHECK(back.pairs[1].first == std::vector<double>{0.0, 1.0});

  SECTION("dimension mismatch rejected") {
    json j = io::point_set_to_json(s);
    j["pairs"][0]["p"] = std::vector<double>{1.0};
    CHECK_THROWS_AS(io::point_set_from_json(j), parse_error);
  }
  SECTION("missing keys rejected") {
    CHECK_THROWS_AS(io::point_set_from_json(io::parse_json_text("{}")), parse_error);
  }
}

TEST_CASE("malformed matrix JSON is a parse error") {
  CHECK_THROWS_AS(io::parse_json_text("{not json"), parse_error);
  CHECK_THROWS_AS(io::matrix_from_json(io::parse_json_text("{\"rows\": 2}")), parse_error);
  CHECK_THROWS_AS(
      io::matrix_from_json(io::parse_json_text(
          "{\"rows\": 2, \"cols\": 1, \"entries\": [[0, 0]]}")),
      parse_error);
}

TEST_CASE("svg output is deterministic and timestamp-free") {
  const auto a = DenseMatrix::from_real({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
  const auto disks = classical_disks(a);
  const std::string one = svg::disks_svg(disks, {Complex{2, 0}, Complex{-1, 0}});
  const std::string two = svg::disks_svg(disks, {Complex{2, 0}, Complex{-1, 0}});
  CHECK(one == two);
  CHECK(one.find("<svg") != std::string::npos);
  CHECK(one.find("viewBox") != std::string::npos);
  CHECK(one.find("circle") != std::string::npos);
}
