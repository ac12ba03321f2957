#include <catch2/catch_amalgamated.hpp>

#include "reference_data.hpp"
#include "support.hpp"
#include "tropt/linalg.hpp"
#include "tropt/matrix.hpp"

using tropt::MaxPlusRat;
using tropt::MinPlusRat;
using SF = tropt::MaxPlusRat;
using S = tropt::Scalar<SF>;
using Td = tropt::Mat<SF>;
using V = tropt::Vec<SF>;
using R = tropt::Row<SF>;

namespace {
const S Z = S::zero();
}

TEST_CASE("products and conjugates on the reference project", "[linalg]") {
  const Td c = refdata::lag_c();
  const Td d = refdata::lag_d();
  const V g = refdata::early_g();
  const V f = refdata::due_f();

  SECTION("row of column maxima") {
    REQUIRE(tropt::ones_row<SF>(3) * c == R{4, 3, 2});
  }

  SECTION("conjugate transpose inverts entrywise") {
    REQUIRE(conj(f) == R{-8, -7, -4});
    REQUIRE(conj(f) * c == R{-4, -2, -2});
    REQUIRE(conj(R{-4, -2, -2}) == V{4, 2, 2});
    REQUIRE(conj(V{2, Z, 5}) == R{-2, Z, -5});
    REQUIRE_THROWS_AS(conj(V{Z, Z}), tropt::ZeroVector);
  }

  SECTION("matrix product with zero-entry propagation") {
    const Td dc = d * c;
    REQUIRE(dc == Td{{Z, Z, Z}, {4, 0, Z}, {6, 4, 0}});
    REQUIRE(dc * dc == Td{{Z, Z, Z}, {4, 0, Z}, {8, 4, 0}});
    REQUIRE(c * g == V{7, 5, 4});
  }

  SECTION("norms") {
    REQUIRE(tropt::norm(c) == S(4));
    REQUIRE(tropt::norm(c * g) == S(7));
    REQUIRE(tropt::norm(conj(f) * c) == S(-2));
    REQUIRE(conj(f) * (c * g) == S(0));
  }

  SECTION("dimension errors") {
    REQUIRE_THROWS_AS((c * V{1, 2}), tropt::DimensionMismatch);
    REQUIRE_THROWS_AS(Td(2, 3) * Td(2, 3), tropt::DimensionMismatch);
    REQUIRE_THROWS_AS(tropt::trace(Td(2, 3)), tropt::NotSquare);
  }
}

TEST_CASE("spectral radius and cycle trace", "[linalg]") {
  const Td c = refdata::lag_c();
  const Td d = refdata::lag_d();
  const Td m = tropt::ones_vec<SF>(3) * (tropt::ones_row<SF>(3) * c);

  SECTION("rank-one matrix built from column maxima") {
    REQUIRE(m == Td{{4, 3, 2}, {4, 3, 2}, {4, 3, 2}});
    REQUIRE(tropt::spectral_radius(m) == S(4));
  }

  SECTION("finish-to-start composition is acyclic") {
    REQUIRE(tropt::cycle_trace(d * c) == S(0));
    REQUIRE(tropt::spectral_radius(refdata::lag_d()).is_zero());
  }

  SECTION("spectral radius scales with the matrix") {
    testsupport::Rng rng(7101);
    for (int t = 0; t < 50; ++t) {
      const std::size_t n = testsupport::rand_int(rng, 1, 5);
      const Td a = testsupport::random_mat<SF>(rng, n, n, 30);
      const S cc = testsupport::random_finite<SF>(rng);
      const S lam = tropt::spectral_radius(a);
      REQUIRE(tropt::spectral_radius(cc * a) == cc * lam);
    }
  }

  SECTION("eigenvalue property of the spectral radius") {
    // For every matrix with a cycle, some column of (λ⁻¹A)* whose node lies
    // on a critical cycle is an eigenvector for λ.
    testsupport::Rng rng(7102);
    int used = 0;
    for (int t = 0; t < 200; ++t) {
      const std::size_t n = testsupport::rand_int(rng, 1, 5);
      const Td a = testsupport::random_mat<SF>(rng, n, n, 40);
      const S lam = tropt::spectral_radius(a);
      if (lam.is_zero()) continue;
      ++used;
      const Td s = inv(lam) * a;
      const auto pw = tropt::powers(s, n);
      Td plus(n, n);
      for (std::size_t k = 1; k <= n; ++k) plus = plus + pw[k];
      const Td star = tropt::identity<SF>(n) + plus;
      bool found = false;
      for (std::size_t j = 0; j < n && !found; ++j) {
        if (plus(j, j) != S::one()) continue;
        V v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = star(i, j);
        REQUIRE(a * v == lam * v);
        found = true;
      }
      REQUIRE(found);
    }
    REQUIRE(used > 100);
  }
}

TEST_CASE("Kleene star", "[linalg]") {
  const Td c = refdata::lag_c();
  const Td d = refdata::lag_d();

  SECTION("acyclic composition star") {
    const Td dc = d * c;
    REQUIRE(tropt::kleene_star(dc) == Td{{0, Z, Z}, {4, 0, Z}, {8, 4, 0}});
    REQUIRE(c * tropt::kleene_star(dc) ==
            Td{{4, 0, Z}, {7, 3, -1}, {10, 6, 2}});
  }

  SECTION("star of a matrix with slack cycles") {
    const Td m{{-6, -7, -8}, {0, -7, -8}, {2, 1, -8}};
    REQUIRE(tropt::kleene_star(m) == Td{{0, -7, -8}, {0, 0, -8}, {2, 1, 0}});
  }

  SECTION("scaled rank-one star stops after one power") {
    const Td m = tropt::ones_vec<SF>(3) * (tropt::ones_row<SF>(3) * c);
    REQUIRE(tropt::kleene_star(S(-4) * m) ==
            Td{{0, -1, -2}, {0, 0, -2}, {0, -1, 0}});
  }

  SECTION("divergence") {
    REQUIRE_THROWS_AS(tropt::kleene_star(Td{{1}}), tropt::StarDiverges);
    REQUIRE_THROWS_AS(tropt::kleene_star(Td{{Z, 3}, {-2, Z}}),
                      tropt::StarDiverges);
    REQUIRE_THROWS_AS(tropt::kleene_star(Td(2, 3)), tropt::NotSquare);
  }

  SECTION("star dominates all powers and is idempotent") {
    testsupport::Rng rng(7103);
    for (int t = 0; t < 100; ++t) {
      const std::size_t n = testsupport::rand_int(rng, 1, 5);
      const Td a = testsupport::random_star_convergent_mat<SF>(rng, n);
      const Td star = tropt::kleene_star(a);
      Td power = tropt::identity<SF>(n);
      for (std::size_t m = 1; m <= n; ++m) {
        power = power * a;
        REQUIRE(leq(power, star));
      }
      REQUIRE(star * star == star);
      REQUIRE(tropt::kleene_star(star) == star);
      REQUIRE(tropt::identity<SF>(n) + a * star == star);
    }
  }
}

TEST_CASE("min-plus matrix algebra", "[linalg]") {
  using MS = tropt::Scalar<MinPlusRat>;
  using MM = tropt::Mat<MinPlusRat>;
  const MS MZ = MS::zero();

  SECTION("star accumulates shortest paths") {
    const MM a{{MZ, 1, 5}, {MZ, MZ, 1}, {MZ, MZ, MZ}};
    REQUIRE(tropt::cycle_trace(a).is_zero());
    const MM star = tropt::kleene_star(a);
    REQUIRE(star(0, 2) == MS(2));
    REQUIRE(star(0, 1) == MS(1));
    REQUIRE(star(1, 1) == MS::one());
  }

  SECTION("negative cycle diverges") {
    REQUIRE_THROWS_AS(tropt::kleene_star(MM{{MZ, 2}, {-3, MZ}}),
                      tropt::StarDiverges);
  }
}

TEST_CASE("vector conjugate identities", "[linalg]") {
  testsupport::Rng rng(7104);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = testsupport::rand_int(rng, 1, 6);
    const V x = testsupport::random_vec<SF>(rng, n, 0);
    REQUIRE(conj(x) * x == S::one());
    REQUIRE(leq(tropt::identity<SF>(n), x * conj(x)));
    const V y = testsupport::random_vec<SF>(rng, n, 0);
    REQUIRE(tropt::norm(x * conj(y)) == tropt::norm(x) * tropt::norm(conj(y)));
  }
}

TEST_CASE("matrix algebra laws on random operands", "[linalg][laws]") {
  testsupport::Rng rng(7105);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = testsupport::rand_int(rng, 1, 4);
    const std::size_t k = testsupport::rand_int(rng, 1, 4);
    const std::size_t m = testsupport::rand_int(rng, 1, 4);
    const Td a = testsupport::random_mat<SF>(rng, n, k);
    const Td b = testsupport::random_mat<SF>(rng, k, m);
    const Td c2 = testsupport::random_mat<SF>(rng, k, m);
    const Td e = testsupport::random_mat<SF>(rng, m, 2);
    REQUIRE((a * b) * e == a * (b * e));
    REQUIRE(a * (b + c2) == a * b + a * c2);
    REQUIRE(tropt::identity<SF>(n) * a == a);
    REQUIRE(a * tropt::identity<SF>(k) == a);
  }
}
