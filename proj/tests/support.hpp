#pragma once

// Shared helpers for the unit and acceptance suites: deterministic random
// generators (raw engine draws only, so sequences are identical on every
// platform) and the semifield law checker.

#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "tropt/linalg.hpp"
#include "tropt/matrix.hpp"
#include "tropt/semifield.hpp"

namespace testsupport {

using Rng = std::mt19937_64;

inline long rand_int(Rng& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

template <class Num>
Num make_num(long n, long d) {
  if constexpr (std::is_same_v<Num, double>) {
    return static_cast<double>(n) / static_cast<double>(d);
  } else {
    return Num(n, d);
  }
}

// Random finite scalar with numerator in [lo, hi] and a small denominator.
template <class SF>
tropt::Scalar<SF> random_finite(Rng& rng, long lo = -30, long hi = 30,
                                long max_den = 3) {
  const long n = rand_int(rng, lo, hi);
  const long d = rand_int(rng, 1, max_den);
  return tropt::Scalar<SF>(make_num<typename SF::num_type>(n, d));
}

// Random scalar that is the semifield zero with probability zero_pct/100.
template <class SF>
tropt::Scalar<SF> random_scalar(Rng& rng, int zero_pct = 20) {
  if (rand_int(rng, 0, 99) < zero_pct) return tropt::Scalar<SF>::zero();
  return random_finite<SF>(rng);
}

template <class SF>
tropt::Vec<SF> random_vec(Rng& rng, std::size_t n, int zero_pct = 0) {
  tropt::Vec<SF> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = random_scalar<SF>(rng, zero_pct);
  return x;
}

template <class SF>
tropt::Mat<SF> random_mat(Rng& rng, std::size_t rows, std::size_t cols,
                          int zero_pct = 30) {
  tropt::Mat<SF> a(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      a(i, j) = random_scalar<SF>(rng, zero_pct);
    }
  }
  return a;
}

// Random matrix in which every row has at least one finite entry.
template <class SF>
tropt::Mat<SF> random_row_regular_mat(Rng& rng, std::size_t rows,
                                      std::size_t cols, int zero_pct = 30) {
  tropt::Mat<SF> a = random_mat<SF>(rng, rows, cols, zero_pct);
  for (std::size_t i = 0; i < rows; ++i) {
    const std::size_t j = static_cast<std::size_t>(rand_int(rng, 0, cols - 1));
    if (a(i, j).is_zero()) a(i, j) = random_finite<SF>(rng);
  }
  return a;
}

// Random matrix with no zero entry at all.
template <class SF>
tropt::Mat<SF> random_dense_mat(Rng& rng, std::size_t rows, std::size_t cols) {
  return random_mat<SF>(rng, rows, cols, 0);
}

// Random matrix with a finite entry in every row and every column.
template <class SF>
tropt::Mat<SF> random_regular_mat(Rng& rng, std::size_t rows, std::size_t cols,
                                  int zero_pct = 30) {
  tropt::Mat<SF> a = random_row_regular_mat<SF>(rng, rows, cols, zero_pct);
  for (std::size_t j = 0; j < cols; ++j) {
    bool found = false;
    for (std::size_t i = 0; i < rows && !found; ++i) found = !a(i, j).is_zero();
    if (!found) {
      const std::size_t i = static_cast<std::size_t>(rand_int(rng, 0, rows - 1));
      a(i, j) = random_finite<SF>(rng);
    }
  }
  return a;
}

// Random square matrix with Tr(A) ≤ one: scale by the inverse spectral
// radius, then optionally shift further down so strict cases appear too.
template <class SF>
tropt::Mat<SF> random_star_convergent_mat(Rng& rng, std::size_t n,
                                          int zero_pct = 40) {
  tropt::Mat<SF> a = random_mat<SF>(rng, n, n, zero_pct);
  const tropt::Scalar<SF> lambda = tropt::spectral_radius(a);
  if (!lambda.is_zero()) a = inv(lambda) * a;
  if (rand_int(rng, 0, 1) == 0) {
    a = tropt::Scalar<SF>(make_num<typename SF::num_type>(
            -rand_int(rng, 1, 5), 1)) *
        a;
  }
  return a;
}

struct LawStats {
  long long checks = 0;
  std::vector<std::string> failures;
};

// One randomized round of semifield law checks (about twenty individual
// checks per call).  Failures are described with the operands involved.
template <class SF>
void check_semifield_laws(Rng& rng, LawStats& st) {
  using S = tropt::Scalar<SF>;
  const S a = random_scalar<SF>(rng);
  const S b = random_scalar<SF>(rng);
  const S c = random_scalar<SF>(rng);
  const long m = rand_int(rng, 1, 4);

  const auto law = [&](bool ok, const char* name) {
    ++st.checks;
    if (!ok) {
      std::ostringstream os;
      os << SF::name() << " law '" << name << "' failed for a=" << a
         << " b=" << b << " c=" << c << " m=" << m;
      st.failures.push_back(os.str());
    }
  };

  law(a + b == b + a, "add commutative");
  law((a + b) + c == a + (b + c), "add associative");
  law(a + a == a, "add idempotent");
  law(a + S::zero() == a, "zero neutral");
  law(a * b == b * a, "mul commutative");
  law((a * b) * c == a * (b * c), "mul associative");
  law(a * S::one() == a, "one neutral");
  law((a * S::zero()).is_zero(), "zero absorbing");
  law(a * (b + c) == a * b + a * c, "left distributive");
  law((a + b) * c == a * c + b * c, "right distributive");
  law(leq(a, b) == (a + b == b), "order induced by add");
  law(leq(a, b) || leq(b, a), "order total");
  if (leq(a, b)) {
    law(leq(a + c, b + c), "add monotone");
    law(leq(a * c, b * c), "mul monotone");
  }
  if (!a.is_zero()) {
    law(a * inv(a) == S::one(), "multiplicative inverse");
    law(inv(inv(a)) == a, "inverse involutive");
    law(pow(root(a, m), m) == a, "root section of power");
    law(root(pow(a, m), m) == a, "power section of root");
    if (!b.is_zero()) {
      law(root(a * b, m) == root(a, m) * root(b, m), "root multiplicative");
      law(pow(a * b, m) == pow(a, m) * pow(b, m), "power multiplicative");
      if (leq(a, b)) law(leq(inv(b), inv(a)), "inverse antitone");
    }
  }
}

}  // namespace testsupport
