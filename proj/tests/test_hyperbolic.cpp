#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <fstream>

#include "renorm/hyperbolic.hpp"
#include "renorm/json_io.hpp"
#include "renorm/random_gen.hpp"

using namespace renorm;

TEST_CASE("hexagon side on frozen oracle values") {
  // 40-digit evaluations of the defining identity
  CHECK(hexagon_side(1, 1, 1) == Catch::Approx(1.7049128323580137).epsilon(1e-13));
  CHECK(hexagon_side(1e-4, 1e-4, 1e-4) == Catch::Approx(19.806975109238923).epsilon(1e-12));
  CHECK(hexagon_side(40, 40, 40) == Catch::Approx(4.1223072448771157e-09).epsilon(1e-10));
  CHECK(hexagon_side(800, 3, 700) == Catch::Approx(0.09965653251644365).epsilon(1e-10));
  CHECK_THROWS_AS(hexagon_side(0.0, 1, 1), std::domain_error);
  CHECK_THROWS_AS(hexagon_side(1, -2, 1), std::domain_error);
}

TEST_CASE("hexagon side is symmetric in a and b") {
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    double a = random_weight(rng, 1e-3, 10), b = random_weight(rng, 1e-3, 10),
           c = random_weight(rng, 1e-3, 10);
    CHECK(hexagon_side(a, b, c) == hexagon_side(b, a, c));
  }
}

TEST_CASE("hexagon identity residual over [1e-3, 10]^3") {
  Rng rng(12);
  for (int i = 0; i < 4000; ++i) {
    double a = random_weight(rng, 1e-3, 10), b = random_weight(rng, 1e-3, 10),
           c = random_weight(rng, 1e-3, 10);
    double side = hexagon_side(a, b, c);
    double big = std::cosh(side) * std::sinh(a) * std::sinh(b);
    double residual = big - std::cosh(a) * std::cosh(b) - std::cosh(c);
    double scale = std::max({big, std::cosh(a) * std::cosh(b), std::cosh(c)});
    CHECK(std::abs(residual) <= 1e-10 * scale);
  }
}

TEST_CASE("small-side asymptotics stay within a fixed constant") {
  // -2 log(1e-4) = 18.4207; the gap to the exact value is about log 4
  CHECK(std::abs(hexagon_side(1e-4, 1e-4, 1e-4) - 18.420680743952366) < 2.0);
}

TEST_CASE("pants transversal values") {
  CHECK(pants_transversal(1, 1, 1) == Catch::Approx(2.8686951416198219).epsilon(1e-13));
  CHECK(pants_transversal(1e-3, 1e-3, 1) == Catch::Approx(16.649958921612901).epsilon(1e-12));
  CHECK(std::abs(pants_transversal(1e-3, 1e-3, 1) - 13.815510557964274) < 3.0);
  Rng rng(13);
  for (int i = 0; i < 100; ++i) {
    double a = random_weight(rng, 1e-4, 1), b = random_weight(rng, 1e-4, 1),
           c = random_weight(rng, 1e-4, 1);
    CHECK(pants_transversal(a, b, c) == pants_transversal(b, a, c));
  }
}

TEST_CASE("pants self-transversal values and monotonicity") {
  CHECK(pants_self_transversal(1, 1) == Catch::Approx(4.4029552948632570).epsilon(1e-13));
  CHECK(pants_self_transversal(1e-3, 1) == Catch::Approx(18.214622658983659).epsilon(1e-12));
  // longer cuff, shorter return path
  double prev = pants_self_transversal(0.05, 0.7);
  for (double a : {0.1, 0.2, 0.4, 0.8, 1.6}) {
    double cur = pants_self_transversal(a, 0.7);
    CHECK(cur < prev);
    prev = cur;
  }
}

TEST_CASE("asymptotic envelopes are finite and match the manifest") {
  EnvelopeMeasurement env = measure_envelopes();
  CHECK(std::isfinite(env.transversal));
  CHECK(std::isfinite(env.self_transversal));
  // principal terms: |transversal + log a + log b| and |self + 2 log a|
  CHECK(env.transversal < 5.0);
  CHECK(env.self_transversal < 6.0);

  Json manifest = load_json_file(std::string(RENORM_FIXTURE_DIR) + "/hyperbolic_constants.json");
  CHECK(std::abs(env.transversal - manifest.at("transversal_envelope").get<double>()) <= 1e-6);
  CHECK(std::abs(env.self_transversal -
                 manifest.at("self_transversal_envelope").get<double>()) <= 1e-6);
}

TEST_CASE("short arc diagram thresholds at epsilon0/2") {
  double eps0 = 0.1;
  std::map<std::string, double> lengths{
      {"short", std::exp(-5.0)}, {"long", 1.0}, {"boundary", eps0 / 2.0}};
  ShortArcDiagram m = short_arc_diagram(lengths, eps0);
  CHECK(m.weights.size() == 1);
  CHECK(m.weights.at("short") == Catch::Approx(5.0));
  CHECK_THROWS_AS(short_arc_diagram({{"bad", 0.0}}, eps0), std::domain_error);
  CHECK_THROWS_AS(short_arc_diagram({{"x", 1.0}}, 0.0), std::domain_error);
}

TEST_CASE("pairing is linear and ignores missing arcs") {
  IntersectionVector iv{{{"alpha", 1}, {"beta", 0}, {"gamma", 3}}};
  std::map<std::string, double> w1{{"alpha", 2.0}, {"beta", 3.0}};
  std::map<std::string, double> w2{{"gamma", 0.5}, {"delta", 9.0}};
  CHECK(pairing(w1, iv) == 2.0);
  CHECK(pairing(w2, iv) == 1.5);
  std::map<std::string, double> sum = w1;
  for (auto& [k, v] : w2) sum[k] += v;
  CHECK(pairing(sum, iv) == pairing(w1, iv) + pairing(w2, iv));
  CHECK(pairing(std::map<std::string, double>{}, iv) == 0.0);
}

TEST_CASE("length estimates") {
  ShortArcDiagram m;
  m.weights = {{"alpha", 7.0}};
  IntersectionVector iv{{{"alpha", 1}}};
  CHECK(peripheral_length_from_short_arcs(m, iv) == 14.0);
  CHECK(wad_weight_from_short_arc(kPi / 2.0) == Catch::Approx(1.0));
  CHECK(mod_from_length(kPi) == Catch::Approx(1.0));
  CHECK_THROWS_AS(mod_from_length(0.0), std::domain_error);
  // mod <-> length is an involution
  Rng rng(14);
  for (int i = 0; i < 100; ++i) {
    double len = random_weight(rng, 1e-3, 1e3);
    CHECK(mod_from_length(mod_from_length(len)) == Catch::Approx(len).epsilon(1e-14));
  }
}

TEST_CASE("strip width parameter checks") {
  CHECK_THROWS_AS(strip_width_check(0.7, 10, 128), ParameterError);
  CHECK_THROWS_AS(strip_width_check(0.2, 5, 128), ParameterError);
  CHECK_THROWS_AS(strip_width_check(0.2, 10, 32), ParameterError);
}

TEST_CASE("strip width is stable under doubling the truncation") {
  // the current through the far tails decays exponentially along the strip
  StripWidthResult t10 = strip_width_check(0.25, 10, 64);
  StripWidthResult t20 = strip_width_check(0.25, 20, 64);
  CHECK(std::abs(t20.estimate - t10.estimate) < 1e-3);
}

TEST_CASE("strip width at a coarse resolution tracks the principal term") {
  // d-dependence: estimates at two separations differ by roughly
  // (2/pi) log(d2/d1); the coarse grid keeps this test cheap.
  StripWidthResult lo = strip_width_check(0.1, 10, 64);
  StripWidthResult hi = strip_width_check(0.4, 10, 64);
  double measured = lo.estimate - hi.estimate;
  double expected = (2.0 / kPi) * std::log(hi.effective_d / lo.effective_d);
  CHECK(measured == Catch::Approx(expected).epsilon(0.10));
  CHECK(lo.principal == Catch::Approx(-(2.0 / kPi) * std::log(0.1)));
}
