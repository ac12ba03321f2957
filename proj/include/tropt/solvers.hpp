#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "tropt/errors.hpp"
#include "tropt/linalg.hpp"
#include "tropt/matrix.hpp"

namespace tropt {

// A scalar strictly below the multiplicative identity in the induced order;
// used to put slack on a bound while staying inside it.
template <class SF>
Scalar<SF> below_one() {
  return SF::uses_min ? Scalar<SF>(1) : Scalar<SF>(-1);
}

template <class SF>
Scalar<SF> above_one() {
  return inv(below_one<SF>());
}

// All solutions of a^T x = d for a regular coefficient vector: exactly the
// x with x ≤ upper and x_k = upper_k for at least one pinned index k, where
// upper_k = a_k⁻¹ d.
template <class SF>
class EquationSolutionFamily {
 public:
  explicit EquationSolutionFamily(Vec<SF> upper) : upper_(std::move(upper)) {}

  std::size_t size() const { return upper_.size(); }
  const Vec<SF>& upper() const { return upper_; }

  // Every coordinate can serve as the pinned one.
  std::vector<std::size_t> pinned_indices() const {
    std::vector<std::size_t> ks(size());
    for (std::size_t k = 0; k < size(); ++k) ks[k] = k;
    return ks;
  }

  // A member with coordinate k pinned to its bound and slack elsewhere.
  Vec<SF> representative(std::size_t k) const {
    Vec<SF> x(size());
    for (std::size_t i = 0; i < size(); ++i) {
      x[i] = (i == k) ? upper_[i] : upper_[i] * below_one<SF>();
    }
    return x;
  }

  bool contains(const Vec<SF>& x) const {
    if (x.size() != size()) {
      throw DimensionMismatch("candidate size " + std::to_string(x.size()) +
                              " for a family of size " + std::to_string(size()));
    }
    bool tight = false;
    for (std::size_t i = 0; i < size(); ++i) {
      if (!leq(x[i], upper_[i])) return false;
      if (x[i] == upper_[i]) tight = true;
    }
    return tight;
  }

  // Deterministic member for a given seed.
  Vec<SF> sample(std::uint64_t seed) const {
    std::mt19937_64 rng(seed);
    const std::size_t k = rng() % size();
    Vec<SF> x(size());
    for (std::size_t i = 0; i < size(); ++i) {
      const long slack = (i == k) ? 0 : static_cast<long>(rng() % 6);
      x[i] = upper_[i] * pow(below_one<SF>(), slack);
    }
    return x;
  }

 private:
  Vec<SF> upper_;
};

// Solves a^T x = d.  The coefficient vector must be regular and the right
// hand side nonzero; otherwise no bounded description of the solutions
// exists and the corresponding error is raised.
template <class SF>
EquationSolutionFamily<SF> solve_equation(const Vec<SF>& a,
                                          const Scalar<SF>& d) {
  if (!is_regular(a)) {
    throw IrregularCoefficient("every coefficient must be nonzero");
  }
  if (d.is_zero()) {
    throw ZeroRightHandSide("right hand side must be nonzero");
  }
  Vec<SF> upper(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) upper[i] = inv(a[i]) * d;
  return EquationSolutionFamily<SF>(std::move(upper));
}

// Greatest solution of A x ≤ d, namely (d⁻ A)⁻.  A must be column-regular
// and d regular so every coordinate of the result is finite.
template <class SF>
Vec<SF> solve_inequality(const Mat<SF>& a, const Vec<SF>& d) {
  if (d.size() != a.rows()) {
    throw DimensionMismatch("bound size " + std::to_string(d.size()) +
                            " for a matrix with " + std::to_string(a.rows()) +
                            " rows");
  }
  if (!is_col_regular(a)) {
    throw NotColumnRegular("every column needs a nonzero entry");
  }
  if (!is_regular(d)) {
    throw IrregularBound("every bound entry must be nonzero");
  }
  return conj(conj(d) * a);
}

}  // namespace tropt
