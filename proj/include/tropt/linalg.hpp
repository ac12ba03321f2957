#pragma once

#include <cstddef>
#include <vector>

#include "tropt/errors.hpp"
#include "tropt/matrix.hpp"

namespace tropt {

template <class SF>
Scalar<SF> trace(const Mat<SF>& a) {
  if (!a.is_square()) throw NotSquare("trace of a non-square matrix");
  Scalar<SF> r;
  for (std::size_t i = 0; i < a.rows(); ++i) r += a(i, i);
  return r;
}

// ⊕ over all entries.
template <class SF>
Scalar<SF> norm(const Mat<SF>& a) {
  Scalar<SF> r;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) r += a(i, j);
  }
  return r;
}

template <class SF>
Scalar<SF> norm(const Vec<SF>& x) {
  Scalar<SF> r;
  for (std::size_t i = 0; i < x.size(); ++i) r += x[i];
  return r;
}

template <class SF>
Scalar<SF> norm(const Row<SF>& y) {
  Scalar<SF> r;
  for (std::size_t i = 0; i < y.size(); ++i) r += y[i];
  return r;
}

// The sequence A^0, A^1, ..., A^k, computed once by iterated multiplication.
// Solvers that need several powers of the same matrix share one sequence.
template <class SF>
std::vector<Mat<SF>> powers(const Mat<SF>& a, std::size_t k) {
  if (!a.is_square()) throw NotSquare("powers of a non-square matrix");
  std::vector<Mat<SF>> pw;
  pw.reserve(k + 1);
  pw.push_back(identity<SF>(a.rows()));
  for (std::size_t m = 1; m <= k; ++m) pw.push_back(pw.back() * a);
  return pw;
}

template <class SF>
Mat<SF> pow(const Mat<SF>& a, std::size_t k) {
  if (!a.is_square()) throw NotSquare("power of a non-square matrix");
  Mat<SF> r = identity<SF>(a.rows());
  for (std::size_t m = 0; m < k; ++m) r = r * a;
  return r;
}

// Spectral radius λ = ⊕_{m=1..n} tr^{1/m}(A^m); equals the semifield zero
// exactly when the associated graph of A has no cycles.
template <class SF>
Scalar<SF> spectral_radius_from(const std::vector<Mat<SF>>& pw) {
  const std::size_t n = pw.empty() ? 0 : pw[0].rows();
  Scalar<SF> r;
  for (std::size_t m = 1; m <= n && m < pw.size(); ++m) {
    const Scalar<SF> t = trace(pw[m]);
    if (!t.is_zero()) r += root(t, static_cast<long>(m));
  }
  return r;
}

template <class SF>
Scalar<SF> spectral_radius(const Mat<SF>& a) {
  return spectral_radius_from(powers(a, a.rows()));
}

// Tr(A) = ⊕_{m=1..n} tr(A^m), the best total weight of a closed walk of
// length at most n.  The Kleene star converges exactly when Tr(A) ≤ one.
template <class SF>
Scalar<SF> cycle_trace_from(const std::vector<Mat<SF>>& pw) {
  const std::size_t n = pw.empty() ? 0 : pw[0].rows();
  Scalar<SF> r;
  for (std::size_t m = 1; m <= n && m < pw.size(); ++m) r += trace(pw[m]);
  return r;
}

template <class SF>
Scalar<SF> cycle_trace(const Mat<SF>& a) {
  return cycle_trace_from(powers(a, a.rows()));
}

// Kleene star A* = I ⊕ A ⊕ ... ⊕ A^{n-1}.  Requires Tr(A) ≤ one; otherwise
// the series has no finite value and StarDiverges is raised.
template <class SF>
Mat<SF> kleene_star_from(const std::vector<Mat<SF>>& pw) {
  const std::size_t n = pw.empty() ? 0 : pw[0].rows();
  if (pw.size() < n + 1) {
    throw DimensionMismatch("power sequence must cover A^0..A^n");
  }
  const Scalar<SF> t = cycle_trace_from(pw);
  if (!leq(t, Scalar<SF>::one())) {
    throw StarDiverges("a closed walk with weight above the identity exists");
  }
  Mat<SF> r(n, n);
  for (std::size_t m = 0; m < n; ++m) r = r + pw[m];
  return r;
}

template <class SF>
Mat<SF> kleene_star(const Mat<SF>& a) {
  if (!a.is_square()) throw NotSquare("star of a non-square matrix");
  return kleene_star_from(powers(a, a.rows()));
}

}  // namespace tropt
