#pragma once

#include <cmath>
#include <concepts>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <utility>

#include "tropt/errors.hpp"
#include "tropt/rational.hpp"

namespace tropt {

// Comparison tolerance for the floating-point backend.  Exact backends ignore
// it.  Adjustable at runtime (see the --float-eps command line flag).
struct FloatTolerance {
  static inline double eps = 1e-9;
};

template <class Num>
struct NumTraits {
  static bool eq(const Num& a, const Num& b) { return a == b; }
  static bool le(const Num& a, const Num& b) { return a <= b; }
};

template <>
struct NumTraits<double> {
  static bool eq(double a, double b) {
    return std::fabs(a - b) <= FloatTolerance::eps;
  }
  static bool le(double a, double b) { return a <= b + FloatTolerance::eps; }
};

// Idempotent semifield over Num ∪ {zero} with ⊕ = max (or min for the dual
// variant) and ⊗ = ordinary addition.  The class only fixes the policy; the
// element type is Scalar<SF> below, which represents the semifield zero as a
// distinguished state rather than a sentinel number.
template <class Num, bool MinVariant>
struct PlusSemifield {
  using num_type = Num;
  static constexpr bool uses_min = MinVariant;

  static const char* name() { return MinVariant ? "min-plus" : "max-plus"; }

  // a ⊕ b on finite representatives.
  static Num join(const Num& a, const Num& b) {
    if constexpr (MinVariant) {
      return (b < a) ? b : a;
    } else {
      return (a < b) ? b : a;
    }
  }

  // Order induced by ⊕ on finite representatives: a ≤ b iff a ⊕ b = b.
  static bool num_le(const Num& a, const Num& b) {
    return MinVariant ? NumTraits<Num>::le(b, a) : NumTraits<Num>::le(a, b);
  }
};

template <class Num = Rat>
using MaxPlus = PlusSemifield<Num, false>;
template <class Num = Rat>
using MinPlus = PlusSemifield<Num, true>;

using MaxPlusRat = MaxPlus<Rat>;
using MinPlusRat = MinPlus<Rat>;
using MaxPlusDouble = MaxPlus<double>;

// One semifield element: either a finite number or the semifield zero
// (the neutral element of ⊕, absorbing for ⊗; -inf for max-plus).
//
// operator+ is ⊕ and operator* is ⊗, following the usual tropical
// convention; the comparison operators use the order induced by ⊕, which for
// min-plus is the reverse of the numeric order.
template <class SF>
class Scalar {
 public:
  using semifield = SF;
  using num_type = typename SF::num_type;

  // Default-constructed scalars are the semifield zero.
  Scalar() = default;
  Scalar(num_type value) : v_(std::move(value)) {}
  template <std::integral I>
  Scalar(I value) : v_(num_type(value)) {}
  // Rational literal n/d, for backends whose number type supports it.
  Scalar(long n, long d)
    requires requires { num_type(n, d); }
      : v_(num_type(n, d)) {}

  static Scalar zero() { return Scalar(); }
  static Scalar one() { return Scalar(num_type(0)); }

  bool is_zero() const { return !v_.has_value(); }
  bool is_finite() const { return v_.has_value(); }

  // Finite representative; only valid when is_finite().
  const num_type& num() const {
    if (!v_) throw std::logic_error("num() called on the semifield zero");
    return *v_;
  }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    return Scalar(SF::join(*a.v_, *b.v_));
  }

  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.is_zero() || b.is_zero()) return zero();
    return Scalar(*a.v_ + *b.v_);
  }

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  // Multiplicative inverse; every element except zero has one.
  friend Scalar inv(const Scalar& a) {
    if (a.is_zero()) throw InversionOfZero("the semifield zero has no inverse");
    return Scalar(-*a.v_);
  }

  // Integer power x^p; x^0 = one, and zero^p = zero for p >= 1.
  friend Scalar pow(const Scalar& a, long p) {
    if (a.is_zero()) {
      if (p > 0) return zero();
      if (p == 0) return one();
      throw InversionOfZero("negative power of the semifield zero");
    }
    return Scalar(*a.v_ * num_type(p));
  }

  // m-th multiplicative root, m >= 1; unique because roots here are exact
  // division of the representative by m.
  friend Scalar root(const Scalar& a, long m) {
    if (m < 1) throw std::logic_error("root() requires m >= 1");
    if (a.is_zero()) throw RootOfZero("the semifield zero has no root");
    return Scalar(*a.v_ / num_type(m));
  }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    return NumTraits<num_type>::eq(*a.v_, *b.v_);
  }

  // Order induced by ⊕: a ≤ b iff a ⊕ b = b.  Zero is the least element.
  friend bool leq(const Scalar& a, const Scalar& b) {
    if (a.is_zero()) return true;
    if (b.is_zero()) return false;
    return SF::num_le(*a.v_, *b.v_);
  }

  friend bool operator<=(const Scalar& a, const Scalar& b) { return leq(a, b); }
  friend bool operator>=(const Scalar& a, const Scalar& b) { return leq(b, a); }
  friend bool operator<(const Scalar& a, const Scalar& b) {
    return leq(a, b) && !(a == b);
  }
  friend bool operator>(const Scalar& a, const Scalar& b) { return b < a; }

  // The smaller of a and b in the induced order.
  friend Scalar meet(const Scalar& a, const Scalar& b) {
    return leq(a, b) ? a : b;
  }

  friend std::ostream& operator<<(std::ostream& os, const Scalar& a) {
    if (a.is_zero()) return os << (SF::uses_min ? "+inf" : "-inf");
    return os << *a.v_;
  }

 private:
  std::optional<num_type> v_;
};

}  // namespace tropt
