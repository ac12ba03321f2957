#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tropt/errors.hpp"
#include "tropt/linalg.hpp"
#include "tropt/matrix.hpp"
#include "tropt/solution_set.hpp"

namespace tropt {

// Which objective a result minimizes, over the regular vectors x:
//   rayleigh variants:  x⁻ A x
//   rank_one variants:  q⁻ x x⁻ p, the span of x between the profiles p and q
// each unconstrained, within bounds g ≤ x ≤ h, or under B x ≤ x.
enum class Objective {
  rayleigh,
  rayleigh_boxed,
  rayleigh_linear,
  rank_one,
  rank_one_boxed,
  rank_one_linear,
};

inline const char* to_string(Objective o) {
  switch (o) {
    case Objective::rayleigh: return "rayleigh";
    case Objective::rayleigh_boxed: return "rayleigh_boxed";
    case Objective::rayleigh_linear: return "rayleigh_linear";
    case Objective::rank_one: return "rank_one";
    case Objective::rank_one_boxed: return "rank_one_boxed";
    case Objective::rank_one_linear: return "rank_one_linear";
  }
  return "unknown";
}

template <class SF>
struct OptResult {
  Scalar<SF> minimum;
  SolutionSet<SF> solutions;              // generator description
  std::optional<SolutionSet<SF>> box;     // box description when one exists
  Objective objective;
};

// Dimension cap for the composition enumeration in min_rayleigh_linear; the
// number of enumerated products grows like 2^n.
inline constexpr std::size_t kMaxEnumerationDim = 12;

namespace detail {

// Power sequence of A scaled by c: (c·A)^m = c^m · A^m.
template <class SF>
std::vector<Mat<SF>> scale_powers(const std::vector<Mat<SF>>& pw,
                                  const Scalar<SF>& c) {
  std::vector<Mat<SF>> scaled;
  scaled.reserve(pw.size());
  for (std::size_t m = 0; m < pw.size(); ++m) {
    scaled.push_back(pow(c, static_cast<long>(m)) * pw[m]);
  }
  return scaled;
}

}  // namespace detail

// Minimum of x⁻ A x over regular x.  The minimum is the spectral radius λ
// and the minimizers are the vectors (λ⁻¹A)* u.
template <class SF>
OptResult<SF> min_rayleigh(const Mat<SF>& a) {
  if (!a.is_square()) throw NotSquare("the matrix must be square");
  const std::size_t n = a.rows();
  const auto pw = powers(a, n);
  const Scalar<SF> lambda = spectral_radius_from(pw);
  if (lambda.is_zero()) {
    throw ZeroSpectralRadius("the matrix has no cycle; the objective has no "
                             "minimum over regular vectors");
  }
  Mat<SF> star = kleene_star_from(detail::scale_powers(pw, inv(lambda)));
  return OptResult<SF>{lambda,
                       SolutionSet<SF>::generated(std::move(star),
                                                  ones_vec<SF>(n), std::nullopt,
                                                  /*scale_free=*/true),
                       std::nullopt, Objective::rayleigh};
}

// Minimum of x⁻ A x subject to g ≤ x ≤ h.  The minimum is
// θ = λ ⊕ ⊕_{m=1..n} (h⁻ A^m g)^{1/m} and the minimizers are the vectors
// (θ⁻¹A)* u with g ≤ u ≤ (h⁻ (θ⁻¹A)*)⁻.
template <class SF>
OptResult<SF> min_rayleigh_boxed(const Mat<SF>& a, const Vec<SF>& g,
                                 const Vec<SF>& h) {
  if (!a.is_square()) throw NotSquare("the matrix must be square");
  const std::size_t n = a.rows();
  if (g.size() != n || h.size() != n) {
    throw DimensionMismatch("bounds must match the matrix dimension");
  }
  if (!is_regular(h)) {
    throw IrregularH("the upper bound must be regular");
  }
  const Row<SF> h_conj = conj(h);
  if (!leq(h_conj * g, Scalar<SF>::one())) {
    throw InfeasibleBounds("the lower bound exceeds the upper bound");
  }
  const auto pw = powers(a, n);
  const Scalar<SF> lambda = spectral_radius_from(pw);
  if (lambda.is_zero()) {
    throw ZeroSpectralRadius("the matrix has no cycle");
  }
  Scalar<SF> theta = lambda;
  for (std::size_t m = 1; m <= n; ++m) {
    const Scalar<SF> t = h_conj * (pw[m] * g);
    if (!t.is_zero()) theta += root(t, static_cast<long>(m));
  }
  Mat<SF> star = kleene_star_from(detail::scale_powers(pw, inv(theta)));
  Vec<SF> u_high = conj(h_conj * star);
  return OptResult<SF>{theta,
                       SolutionSet<SF>::generated(std::move(star), g,
                                                  std::move(u_high),
                                                  /*scale_free=*/false),
                       std::nullopt, Objective::rayleigh_boxed};
}

// Minimum of x⁻ A x subject to B x ≤ x and x ≥ g.  The minimum is the sum of
// traces tr^{1/k}(A B^{i₁} ⋯ A B^{i_k}) over all compositions with
// k + i₁ + ⋯ + i_k ≤ n, evaluated by direct enumeration; the minimizers are
// the vectors (θ⁻¹A ⊕ B)* u with u ≥ g.
template <class SF>
OptResult<SF> min_rayleigh_linear(const Mat<SF>& a, const Mat<SF>& b,
                                  const Vec<SF>& g) {
  if (!a.is_square() || !b.is_square()) {
    throw NotSquare("both matrices must be square");
  }
  const std::size_t n = a.rows();
  if (b.rows() != n || g.size() != n) {
    throw DimensionMismatch("operands must share one dimension");
  }
  if (n > kMaxEnumerationDim) {
    throw EnumerationLimitExceeded(
        "composition enumeration is limited to dimension " +
        std::to_string(kMaxEnumerationDim));
  }
  const auto pw_b = powers(b, n);
  if (!leq(cycle_trace_from(pw_b), Scalar<SF>::one())) {
    throw StarDiverges("the constraint matrix has a walk above the identity");
  }
  const Scalar<SF> lambda = spectral_radius(a);
  if (lambda.is_zero()) {
    throw ZeroSpectralRadius("the matrix has no cycle");
  }

  // Depth-first enumeration of the products A B^{i₁} ⋯ A B^{i_k}; weight
  // counts k + Σ i_j.
  Scalar<SF> theta;
  const auto visit = [&](const auto& self, const Mat<SF>& prefix,
                         std::size_t weight, std::size_t k) -> void {
    for (std::size_t i = 0; weight + i + 1 <= n; ++i) {
      const Mat<SF> next = (prefix * a) * pw_b[i];
      const Scalar<SF> t = trace(next);
      if (!t.is_zero()) theta += root(t, static_cast<long>(k + 1));
      self(self, next, weight + i + 1, k + 1);
    }
  };
  visit(visit, identity<SF>(n), 0, 0);

  Mat<SF> star = kleene_star(inv(theta) * a + b);
  return OptResult<SF>{theta,
                       SolutionSet<SF>::generated(std::move(star), g,
                                                  std::nullopt,
                                                  /*scale_free=*/false),
                       std::nullopt, Objective::rayleigh_linear};
}

namespace detail {

template <class SF>
void check_rank_one_profiles(const Vec<SF>& p, const Vec<SF>& q) {
  if (p.size() != q.size()) {
    throw DimensionMismatch("the profiles must have the same size");
  }
  if (!is_nonzero(p)) throw ZeroP("the target profile must be nonzero");
  if (!is_regular(q)) throw IrregularQ("the weight profile must be regular");
}

}  // namespace detail

// Minimum of q⁻ x x⁻ p over regular x.  The minimum is Δ = q⁻ p; the
// minimizers admit both a box description α·p ≤ x ≤ α·Δ·q and a generator
// description (I ⊕ Δ⁻¹ p q⁻) u, and the two coincide.
template <class SF>
OptResult<SF> min_rank_one(const Vec<SF>& p, const Vec<SF>& q) {
  detail::check_rank_one_profiles(p, q);
  const std::size_t n = p.size();
  const Row<SF> q_conj = conj(q);
  const Scalar<SF> delta = q_conj * p;
  Mat<SF> star = identity<SF>(n) + inv(delta) * (p * q_conj);
  return OptResult<SF>{
      delta,
      SolutionSet<SF>::generated(std::move(star), ones_vec<SF>(n),
                                 std::nullopt, /*scale_free=*/true),
      SolutionSet<SF>::box(p, delta * q, /*scale_free=*/true),
      Objective::rank_one};
}

// Minimum of q⁻ x x⁻ p subject to g ≤ x ≤ h.  The minimum is
// θ = q⁻ (I ⊕ g h⁻) p and the minimizers are (I ⊕ θ⁻¹ p q⁻) u with
// g ≤ u ≤ (h⁻ (I ⊕ θ⁻¹ p q⁻))⁻.
template <class SF>
OptResult<SF> min_rank_one_boxed(const Vec<SF>& p, const Vec<SF>& q,
                                 const Vec<SF>& g, const Vec<SF>& h) {
  detail::check_rank_one_profiles(p, q);
  const std::size_t n = p.size();
  if (g.size() != n || h.size() != n) {
    throw DimensionMismatch("bounds must match the profile size");
  }
  if (!is_regular(h)) {
    throw IrregularH("the upper bound must be regular");
  }
  const Row<SF> h_conj = conj(h);
  if (!leq(h_conj * g, Scalar<SF>::one())) {
    throw InfeasibleBounds("the lower bound exceeds the upper bound");
  }
  const Row<SF> q_conj = conj(q);
  const Scalar<SF> theta =
      q_conj * p + (q_conj * g) * (h_conj * p);
  Mat<SF> star = identity<SF>(n) + inv(theta) * (p * q_conj);
  Vec<SF> u_high = conj(h_conj * star);
  return OptResult<SF>{theta,
                       SolutionSet<SF>::generated(std::move(star), g,
                                                  std::move(u_high),
                                                  /*scale_free=*/false),
                       std::nullopt, Objective::rank_one_boxed};
}

// Minimum of q⁻ x x⁻ p subject to B x ≤ x and x ≥ g.  The minimum is
// θ = q⁻ B* p and the minimizers are (θ⁻¹ p q⁻ ⊕ B)* u with u ≥ g.
template <class SF>
OptResult<SF> min_rank_one_linear(const Vec<SF>& p, const Vec<SF>& q,
                                  const Mat<SF>& b, const Vec<SF>& g) {
  detail::check_rank_one_profiles(p, q);
  const std::size_t n = p.size();
  if (!b.is_square() || b.rows() != n || g.size() != n) {
    throw DimensionMismatch("operands must share one dimension");
  }
  const Mat<SF> star_b = kleene_star(b);
  const Row<SF> q_conj = conj(q);
  const Scalar<SF> theta = q_conj * (star_b * p);
  Mat<SF> star = kleene_star(inv(theta) * (p * q_conj) + b);
  return OptResult<SF>{theta,
                       SolutionSet<SF>::generated(std::move(star), g,
                                                  std::nullopt,
                                                  /*scale_free=*/false),
                       std::nullopt, Objective::rank_one_linear};
}

// Objective evaluation helpers, mostly for verification and tests.

// x⁻ A x for regular x.
template <class SF>
Scalar<SF> rayleigh_objective(const Mat<SF>& a, const Vec<SF>& x) {
  return conj(x) * (a * x);
}

// q⁻ x x⁻ p for regular x.
template <class SF>
Scalar<SF> rank_one_objective(const Vec<SF>& p, const Vec<SF>& q,
                              const Vec<SF>& x) {
  return (conj(q) * x) * (conj(x) * p);
}

}  // namespace tropt
