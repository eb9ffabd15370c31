#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "renorm/domination.hpp"
#include "renorm/hubbard.hpp"
#include "renorm/json_io.hpp"
#include "renorm/random_gen.hpp"

using namespace renorm;

namespace {

DiskedTreeModel load_model(const std::string& name) {
  return model_from_json(load_json_file(std::string(RENORM_FIXTURE_DIR) + "/" + name));
}

Wad aligned(const DiskedTreeModel& m, std::map<std::string, double> w) {
  return Wad(tree_arc_system(m), std::move(w));
}

}  // namespace

TEST_CASE("shipped models validate") {
  for (const char* name : {"period2_basic.json", "period3_twoarc.json"}) {
    DiskedTreeModel m = load_model(name);
    ModelValidation v = validate_model(m);
    INFO(name);
    CHECK(v.valid);
  }
}

TEST_CASE("crafted invalid fixtures are rejected with the right axiom") {
  CHECK(validate_model(load_model("invalid_valence.json")).violated("valence"));
  CHECK(validate_model(load_model("invalid_periodic.json"))
            .violated("no-periodic-horizontal-arc"));
  CHECK(validate_model(load_model("invalid_notcg.json")).violated("tree-of-complete-graphs"));
  CHECK(validate_model(load_model("invalid_twocritical.json")).violated("critical-disk"));
  // and each fails only its own axiom
  CHECK_FALSE(validate_model(load_model("invalid_valence.json")).violated("critical-disk"));
  CHECK_FALSE(
      validate_model(load_model("invalid_notcg.json")).violated("no-periodic-horizontal-arc"));
}

TEST_CASE("transition matrix of the period-2 model") {
  DiskedTreeModel m = load_model("period2_basic.json");
  CHECK(transition_matrix(m, 1) == IntMatrix{{2}});
  CHECK(transition_matrix(m, 2) == IntMatrix{{4}});
  CHECK(transition_matrix(m, 0) == IntMatrix{{1}});
}

TEST_CASE("transition matrix of the two-arc model") {
  DiskedTreeModel m = load_model("period3_twoarc.json");
  CHECK(transition_matrix(m, 1) == IntMatrix{{0, 1}, {1, 1}});
  CHECK(transition_matrix(m, 2) == IntMatrix{{1, 1}, {1, 2}});
}

TEST_CASE("symbolic composition equals integer matrix powers, k <= 6") {
  for (const char* name : {"period2_basic.json", "period3_twoarc.json"}) {
    DiskedTreeModel m = load_model(name);
    IntMatrix m1 = transition_matrix(m, 1);
    for (int k = 0; k <= 6; ++k) {
      INFO(name << " k=" << k);
      CHECK(transition_matrix(m, k) == matrix_power(m1, k));
    }
  }
}

TEST_CASE("expansion row sums") {
  ExpansionReport r2 = expansion_check(load_model("period2_basic.json"));
  CHECK(r2.pass);
  CHECK(r2.rows[0].row_sum == 4);
  ExpansionReport r3 = expansion_check(load_model("period3_twoarc.json"));
  CHECK(r3.pass);  // M^3 row sums 3 and 5
  CHECK(r3.rows[0].row_sum == 3);
  CHECK(r3.rows[1].row_sum == 5);
  ExpansionReport bad = expansion_check(load_model("invalid_periodic.json"));
  CHECK_FALSE(bad.pass);
  CHECK(bad.rows[0].row_sum == 1);
}

TEST_CASE("subdivision chains") {
  DiskedTreeModel m = load_model("period2_basic.json");

  SECTION("r = 0 returns the original edges") {
    LevelData d = subdivide(m, 0);
    REQUIRE(d.chains.size() == 1);
    CHECK(d.chains[0].segment_images == std::vector<std::string>{"g"});
    CHECK(d.chains[0].disks.empty());
  }

  SECTION("r = 1 gives a length-2^p chain through new disks") {
    LevelData d = subdivide(m, 1);
    CHECK(d.chains[0].segment_images.size() == 4);  // row sum of M^2
    CHECK(d.chains[0].disks.size() == 3);
    for (const auto& disk : d.chains[0].disks) CHECK(disk.is_new);
  }

  SECTION("growth and good-disk counts for r <= 5") {
    for (const char* name : {"period2_basic.json", "period3_twoarc.json"}) {
      DiskedTreeModel model = load_model(name);
      for (int r = 1; r <= 5; ++r) {
        LevelData d = subdivide(model, r);
        for (const auto& chain : d.chains) {
          INFO(name << " r=" << r << " edge=" << chain.edge);
          CHECK(chain.segment_images.size() >= std::size_t(1) << r);
          int fresh = 0;
          for (const auto& disk : chain.disks) fresh += disk.is_new ? 1 : 0;
          CHECK(fresh >= (1 << (r - 1)));
          // chain disks sit between consecutive segments
          CHECK(chain.disks.size() + 1 == chain.segment_images.size());
        }
      }
    }
  }

  SECTION("depth cap") { CHECK_THROWS_AS(subdivide(m, 9), ResourceError); }
}

TEST_CASE("level first-appearance distribution doubles down the chain") {
  DiskedTreeModel m = load_model("period2_basic.json");
  LevelData d = subdivide(m, 2);  // level 4: first_level f carries 2^{f-1} disks
  std::map<int, int> histogram;
  for (const auto& disk : d.chains[0].disks) ++histogram[disk.first_level];
  CHECK(histogram == std::map<int, int>{{1, 1}, {2, 2}, {3, 4}, {4, 8}});
}

TEST_CASE("aligned circuits") {
  DiskedTreeModel m2 = load_model("period2_basic.json");
  UnpluggedCircuit u = aligned_circuit(m2, aligned(m2, {{"g", 3.0}}));
  Circuit c = u.plug("D0", "D1");
  CHECK(total_conductance(c) == Catch::Approx(3.0));

  DiskedTreeModel m3 = load_model("period3_twoarc.json");
  UnpluggedCircuit u3 = aligned_circuit(m3, aligned(m3, {{"g1", 2.0}, {"g2", 5.0}}));
  CHECK(u3.edges.size() == 2);

  CHECK_THROWS_AS(Wad(tree_arc_system(m2), std::map<std::string, double>{{"zz", 1.0}}),
                  MappingError);
  // an aligned wad over the wrong model is an alignment error
  Wad y3 = aligned(m3, {{"g1", 1.0}});
  CHECK_THROWS_AS(aligned_circuit(m2, y3), StructuralError);
}

TEST_CASE("yz bound on the single-arc fixture") {
  DiskedTreeModel m = load_model("period2_basic.json");
  double w = 1.7;
  Wad y = aligned(m, {{"g", w}});

  SECTION("r = 2: bound below 2^0 * max local conductance") {
    double bound = yz_bound(m, y, 2, "g");
    CHECK(bound == Catch::Approx(2.0 * w / 12.0));  // 12 new disks, terms 2w
    CHECK(bound <= w + 1e-12);
    double direct = substituted_chain_conductance(m, y, 2, "g");
    CHECK(direct == Catch::Approx(w / 16.0));  // 16 unit segments in series
    CHECK(direct <= bound + 1e-12);
  }

  SECTION("sandwich holds for random aligned weights, r in {2,3,4}") {
    Rng rng(31337);
    for (const char* name : {"period2_basic.json", "period3_twoarc.json"}) {
      DiskedTreeModel model = load_model(name);
      for (int trial = 0; trial < 25; ++trial) {
        std::map<std::string, double> weights;
        for (const auto& e : model.edges) weights[e.id] = random_weight(rng, 0.1, 10.0);
        Wad yy = aligned(model, weights);
        double max_local = 0.0;
        for (const auto& d : model.disks)
          max_local = std::max(max_local, aligned_local_conductance(model, yy.data(), d.id));
        for (int r : {2, 3, 4}) {
          for (const auto& e : model.edges) {
            double bound = yz_bound(model, yy, r, e.id);
            double direct = substituted_chain_conductance(model, yy, r, e.id);
            double cap = std::pow(2.0, -(r - 2)) * max_local;
            INFO(name << " r=" << r << " edge=" << e.id);
            CHECK(direct <= bound + 1e-9);
            CHECK(bound <= cap + 1e-9);
          }
        }
      }
    }
  }

  SECTION("zero-weight wad drives the bound to zero") {
    Wad zero = aligned(m, {});
    CHECK(yz_bound(m, zero, 2, "g") == 0.0);
    CHECK(substituted_chain_conductance(m, zero, 2, "g") == 0.0);
  }
}

TEST_CASE("pullback comparison of local conductances across one level") {
  // With Z built from a verified F*Y -o Z certificate, the local conductance
  // of Z at a disk is at most the mapping degree times Y's at the image disk.
  for (const char* name : {"period2_basic.json", "period3_twoarc.json"}) {
    DiskedTreeModel m = load_model(name);
    Rng rng(7777);
    for (int trial = 0; trial < 10; ++trial) {
      std::map<std::string, double> weights;
      for (const auto& e : m.edges) weights[e.id] = random_weight(rng, 0.1, 10.0);
      Wad y = aligned(m, weights);
      Wad fy = level1_pullback(m, y);
      DominationCertificate cert;
      std::map<std::string, double> z_weights;
      for (const auto& e : m.edges) {
        const auto& sub = m.substitution.at(e.id);
        CertificateGroup g;
        g.beta = e.id;
        std::vector<double> ws;
        for (std::size_t i = 0; i < sub.segment_images.size(); ++i) {
          double wv = y.weight(sub.segment_images[i]);
          g.segments.push_back({e.id + "." + std::to_string(i), wv});
          ws.push_back(wv);
        }
        g.v = hsum(ws);
        g.via = sub.via;
        cert.groups.push_back(g);
        z_weights[e.id] = g.v;
      }
      Wad z = aligned(m, z_weights);
      REQUIRE(verify_domination(fy.data(), z.data(), cert, 1e-9).pass);
      for (std::size_t j = 0; j < m.disks.size(); ++j) {
        const auto& dj = m.disks[j];
        const auto& dj1 = m.disks[(j + 1) % m.disks.size()];
        double lhs = aligned_local_conductance(m, z.data(), dj.id);
        double rhs = dj.deg * aligned_local_conductance(m, y.data(), dj1.id);
        INFO(name << " disk=" << dj.id);
        CHECK(lhs <= rhs + 1e-9);
      }
    }
  }
}

TEST_CASE("entropy constants") {
  CHECK(entropy_q(2, 0) == 0.0);
  CHECK(entropy_q(2, 1) == 12.0);
  CHECK(entropy_q(2, 2) == 84.0);
  EntropyConstants c = entropy_constants(2, 2);
  CHECK(c.loss_factor == Catch::Approx(0.375));
  CHECK(c.loss_factor_stated == Catch::Approx(0.25));
  // minimal threshold: loss_factor * M + 3 p q_{10p} = M / 2 exactly
  double lhs = c.loss_factor * c.threshold_m + 3.0 * 2 * c.q_10p;
  CHECK(lhs == Catch::Approx(c.threshold_m / 2.0).epsilon(1e-15));
  // the q sequence is strictly increasing and minimal
  for (int n = 0; n < 6; ++n) {
    double qn = entropy_q(2, n), qn1 = entropy_q(2, n + 1);
    CHECK(qn1 > qn);
    CHECK(qn1 == 3.0 * 2 * (qn + 2.0));
  }
  CHECK_THROWS_AS(entropy_q(1, 1), ParameterError);
}

TEST_CASE("vertical lift trajectories") {
  DiskedTreeModel m = load_model("period2_basic.json");

  SECTION("full trajectory from the deep token") {
    LiftTrajectoryReport r = lift_vertical(m, "v2", 6);
    CHECK(r.pass);
    CHECK(r.covers_perp);
    CHECK(r.declared_perp == std::set<std::string>{"s0a", "s0b", "s1"});
    CHECK(r.periodic == std::set<std::string>{"s0a", "s0b", "s1"});
  }

  SECTION("self-lifting token with intersection zero is periodic") {
    DiskedTreeModel tiny = m;
    tiny.lift_table = {{"s", {0, {"s"}, "D0"}}};
    LiftTrajectoryReport r = lift_vertical(tiny, "s", 3);
    CHECK(r.pass);
    CHECK(r.periodic == std::set<std::string>{"s"});
    CHECK(r.covers_perp);
  }

  SECTION("periodic token with positive intersection is flagged") {
    DiskedTreeModel bad = m;
    bad.lift_table = {{"p", {1, {"p"}, "D0"}}};
    LiftTrajectoryReport r = lift_vertical(bad, "p", 3);
    CHECK_FALSE(r.pass);
  }

  SECTION("increasing intersection numbers are flagged") {
    DiskedTreeModel bad = m;
    bad.lift_table = {{"a", {0, {"b"}, "D0"}}, {"b", {1, {"b"}, "D1"}}};
    LiftTrajectoryReport r = lift_vertical(bad, "a", 2);
    CHECK_FALSE(r.pass);
  }

  SECTION("table not closed under lifting is a data error") {
    DiskedTreeModel bad = m;
    bad.lift_table = {{"a", {1, {"missing"}, "D0"}}};
    CHECK_THROWS_AS(lift_vertical(bad, "a", 2), DataError);
  }

  SECTION("period-3 trajectory") {
    DiskedTreeModel m3 = load_model("period3_twoarc.json");
    LiftTrajectoryReport r = lift_vertical(m3, "z", 8);
    CHECK(r.pass);
    CHECK(r.covers_perp);
    CHECK(r.periodic == std::set<std::string>{"p0a", "p0b", "q1", "q2"});
  }
}

TEST_CASE("structural checks on malformed models") {
  DiskedTreeModel m = load_model("period2_basic.json");
  DiskedTreeModel broken = m;
  broken.substitution.clear();
  CHECK_THROWS_AS(check_structure(broken), StructuralError);
  ModelValidation v = validate_model(broken);
  CHECK(v.violated("structure"));
  DiskedTreeModel dup = m;
  dup.edges.push_back({"g_dup", "D0", "D1"});
  CHECK_THROWS_AS(check_structure(dup), StructuralError);
}
