#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "jf/forms.hpp"
#include "jf/series_io.hpp"

#include "random_series.hpp"

#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

using jf::QZSeries;
using jf::Rational;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), "missing file: " << path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("round-trip preserves structure and metadata") {
  std::mt19937_64 rng(0x10);
  for (int i = 0; i < 60; ++i) {
    QZSeries s = jftest::random_series(rng, i % 2 ? 1 : 4, 6, 9);
    if (i % 3 == 0) s.set_weight(4);
    if (i % 3 == 1) s.set_index(2);
    QZSeries back = jf::series_from_string(jf::series_to_string(s));
    CHECK(jftest::same_series(s, back));
  }
}

TEST_CASE("round-trip of catalog entries") {
  for (const char* name : {"E2", "Delta", "Theta1Sq", "PhiM2_1", "Phi10_1"}) {
    QZSeries s = jf::forms::build_form(name, Rational(8));
    QZSeries back = jf::series_from_string(jf::series_to_string(s));
    CHECK_MESSAGE(jftest::same_series(s, back), name);
  }
}

TEST_CASE("serialization is deterministic") {
  QZSeries s = jf::forms::build_form("Phi0_1", Rational(6));
  CHECK(jf::series_to_string(s) == jf::series_to_string(s));
}

TEST_CASE("exact polynomials serialize with order inf") {
  QZSeries poly = QZSeries::from_zeta_poly({{0, Rational(3)}});
  std::string text = jf::series_to_string(poly);
  CHECK(text.find("\"order\": \"inf\"") != std::string::npos);
  QZSeries back = jf::series_from_string(text);
  CHECK_FALSE(back.order().has_value());
}

TEST_CASE("zero series serializes to an empty coefficient list") {
  std::string text = jf::series_to_string(QZSeries::zero(1, Rational(5)));
  CHECK(text.find("\"coeffs\": []") != std::string::npos);
  QZSeries back = jf::series_from_string(text);
  CHECK(back.is_zero());
  CHECK(back.order() == Rational(5));
}

TEST_CASE("duplicate coefficient entries are rejected") {
  std::string text = R"({
    "gridDenom": 1, "order": "5/1", "weight": null, "index": null,
    "coeffs": [ {"n": 1, "r": 0, "v": "1/1"}, {"n": 1, "r": 0, "v": "2/1"} ]
  })";
  CHECK_THROWS_AS(jf::series_from_string(text), std::invalid_argument);
}

TEST_CASE("coefficients at or beyond the order bound are rejected") {
  std::string text = R"({
    "gridDenom": 1, "order": "2/1", "weight": null, "index": null,
    "coeffs": [ {"n": 3, "r": 0, "v": "1/1"} ]
  })";
  QZSeries s = jf::series_from_string(text);
  CHECK(s.is_zero());
}

TEST_CASE("restriction of the index-1 quasi Eisenstein series matches its frozen expansion") {
  QZSeries r = restrict_z0(jf::forms::build_form("E2_1", Rational(10)));
  std::string want = slurp(std::string(JF_DATA_DIR) + "/v1/E2_1.restrictz0.order10.json");
  CHECK(jf::series_to_string(r) == want);
}

TEST_CASE("file write and read back") {
  QZSeries s = jf::forms::build_form("E4_1", Rational(7));
  std::string path = "io_roundtrip_tmp.json";
  jf::write_series_file(path, s);
  QZSeries back = jf::read_series_file(path);
  CHECK(jftest::same_series(s, back));
  std::remove(path.c_str());
}
