#include <catch2/catch_amalgamated.hpp>

#include "renorm/dickson.hpp"
#include "renorm/random_gen.hpp"

using namespace renorm;

TEST_CASE("dickson basis on the worked examples") {
  CHECK(dickson_basis({{0, 0}, {1, 1}, {2, 0}}) == std::vector<LatticePoint>{{0, 0}});
  CHECK(dickson_basis({{1, 2}, {2, 1}, {2, 2}}) ==
        std::vector<LatticePoint>{{1, 2}, {2, 1}});
  CHECK(dickson_basis({{2, 0}, {0, 3}, {1, 1}}) ==
        std::vector<LatticePoint>{{0, 3}, {1, 1}, {2, 0}});
}

TEST_CASE("edge cases and validation") {
  CHECK(dickson_basis({}).empty());
  CHECK(dickson_basis({{3, 4, 5}}) == std::vector<LatticePoint>{{3, 4, 5}});
  CHECK(dickson_basis({{1, 1}, {1, 1}}) == std::vector<LatticePoint>{{1, 1}});
  CHECK_THROWS_AS(dickson_basis({{1, -1}}), std::domain_error);
  CHECK_THROWS_AS(dickson_basis({{1, 2}, {1, 2, 3}}), std::domain_error);
}

TEST_CASE("basis covers the set and is an antichain") {
  Rng rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    auto t = random_lattice_set(rng);
    auto basis = dickson_basis(t);  // internal cross-check against the scan
    for (const auto& p : t) {
      bool covered = false;
      for (const auto& b : basis) {
        bool leq = true;
        for (std::size_t i = 0; i < p.size(); ++i)
          if (b[i] > p[i]) leq = false;
        if (leq) covered = true;
      }
      CHECK(covered);
    }
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = 0; j < basis.size(); ++j) {
        if (i == j) continue;
        bool leq = true;
        for (std::size_t k = 0; k < basis[i].size(); ++k)
          if (basis[i][k] > basis[j][k]) leq = false;
        CHECK_FALSE(leq);
      }
  }
}
