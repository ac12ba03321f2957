#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <variant>

#include "tropt/errors.hpp"
#include "tropt/linalg.hpp"
#include "tropt/matrix.hpp"
#include "tropt/solvers.hpp"

namespace tropt {

// Box description: all regular x with α·low ≤ x ≤ α·high, either for some
// scalar α (scale_free) or for α fixed to the identity.  Entries of low that
// are zero impose no lower bound.
template <class SF>
struct BoxForm {
  Vec<SF> low;
  Vec<SF> high;
  bool scale_free = true;
};

// Generator description: all x = star·u where u ranges over the regular
// vectors with u_low ≤ u (≤ u_high when present), or over all regular
// vectors when scale_free.  star is idempotent, so membership of x reduces
// to the fixed-point test star·x = x plus the parameter range check.
template <class SF>
struct GeneratorForm {
  Mat<SF> star;
  Vec<SF> u_low;
  std::optional<Vec<SF>> u_high;
  bool scale_free = false;
};

template <class SF>
class SolutionSet {
 public:
  static SolutionSet box(Vec<SF> low, Vec<SF> high, bool scale_free) {
    return SolutionSet(BoxForm<SF>{std::move(low), std::move(high), scale_free});
  }

  static SolutionSet generated(Mat<SF> star, Vec<SF> u_low,
                               std::optional<Vec<SF>> u_high,
                               bool scale_free) {
    return SolutionSet(GeneratorForm<SF>{std::move(star), std::move(u_low),
                                         std::move(u_high), scale_free});
  }

  bool is_box() const { return std::holds_alternative<BoxForm<SF>>(form_); }
  const BoxForm<SF>& box_form() const { return std::get<BoxForm<SF>>(form_); }
  const GeneratorForm<SF>& generator_form() const {
    return std::get<GeneratorForm<SF>>(form_);
  }

  std::size_t dimension() const {
    if (is_box()) return box_form().low.size();
    return generator_form().star.rows();
  }

  bool empty() const {
    if (is_box()) {
      const auto& b = box_form();
      return !b.scale_free && !leq(b.low, b.high);
    }
    const auto& gform = generator_form();
    return !gform.scale_free && gform.u_high.has_value() &&
           !leq(gform.u_low, *gform.u_high);
  }

  // Membership of a regular vector; vectors with zero entries are never
  // members.
  bool contains(const Vec<SF>& x) const {
    if (x.size() != dimension()) {
      throw DimensionMismatch("candidate dimension does not match the set");
    }
    if (!is_regular(x)) return false;
    if (is_box()) return box_contains(x);
    return generator_contains(x);
  }

  // Deterministic member for a given seed; the set must be non-empty.
  Vec<SF> sample(std::uint64_t seed) const {
    if (empty()) throw EmptySolutionSet("cannot sample an empty set");
    std::mt19937_64 rng(seed);
    if (is_box()) return box_sample(rng);
    return generator_sample(rng);
  }

  // Least member S*·u_low of a generated set with a lower bound; the
  // entrywise infimum, with zero entries where the set is unbounded below.
  Vec<SF> least() const {
    if (is_box()) {
      if (box_form().scale_free) {
        throw EmptySolutionSet("a scale-free set has no least member");
      }
      return box_form().low;
    }
    const auto& gform = generator_form();
    if (gform.scale_free) {
      throw EmptySolutionSet("a scale-free set has no least member");
    }
    return gform.star * gform.u_low;
  }

 private:
  explicit SolutionSet(BoxForm<SF> b) : form_(std::move(b)) {}
  explicit SolutionSet(GeneratorForm<SF> gform) : form_(std::move(gform)) {}

  bool box_contains(const Vec<SF>& x) const {
    const auto& b = box_form();
    if (!b.scale_free) {
      return leq(b.low, x) && leq(x, b.high);
    }
    // Tight scale: the largest α with α·low ≤ x, then check x ≤ α·high.
    Scalar<SF> alpha;
    bool have = false;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (b.low[i].is_zero()) continue;
      const Scalar<SF> ratio = x[i] * inv(b.low[i]);
      alpha = have ? meet(alpha, ratio) : ratio;
      have = true;
    }
    if (!have) {
      // No lower bound at all: feasible for a large enough α unless an upper
      // bound is zero while the coordinate is finite.
      for (std::size_t i = 0; i < x.size(); ++i) {
        if (b.high[i].is_zero()) return false;
      }
      return true;
    }
    return leq(x, alpha * b.high);
  }

  bool generator_contains(const Vec<SF>& x) const {
    const auto& gform = generator_form();
    if (!(gform.star * x == x)) return false;
    if (gform.scale_free) return true;
    if (!leq(gform.u_low, x)) return false;
    return !gform.u_high.has_value() || leq(x, *gform.u_high);
  }

  // Random value between lo and hi inclusive (in the induced order), exact
  // for rational backends.  Zero bounds mean the range is open on that side.
  static Scalar<SF> between(std::mt19937_64& rng, const Scalar<SF>& lo,
                            const Scalar<SF>& hi) {
    constexpr long kGrain = 8;  // interpolation steps inside a bounded range
    constexpr long kReach = 6;  // how far to roam past a missing bound
    const bool has_lo = !lo.is_zero();
    const bool has_hi = !hi.is_zero();
    if (has_lo && has_hi) {
      const long t = static_cast<long>(rng() % (kGrain + 1));
      return lo * root(pow(hi * inv(lo), t), kGrain);
    }
    if (has_lo) {
      return lo * pow(above_one<SF>(), static_cast<long>(rng() % (kReach + 1)));
    }
    if (has_hi) {
      return hi * pow(below_one<SF>(), static_cast<long>(rng() % (kReach + 1)));
    }
    const long t = static_cast<long>(rng() % (2 * kReach + 1)) - kReach;
    return pow(above_one<SF>(), t);
  }

  Vec<SF> box_sample(std::mt19937_64& rng) const {
    const auto& b = box_form();
    const Scalar<SF> alpha =
        b.scale_free
            ? pow(above_one<SF>(), static_cast<long>(rng() % 13) - 6)
            : Scalar<SF>::one();
    Vec<SF> x(dimension());
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (b.high[i].is_zero()) {
        throw EmptySolutionSet("the set admits no regular member");
      }
      x[i] = between(rng, alpha * b.low[i], alpha * b.high[i]);
    }
    return x;
  }

  Vec<SF> generator_sample(std::mt19937_64& rng) const {
    const auto& gform = generator_form();
    Vec<SF> u(dimension());
    if (gform.scale_free) {
      for (std::size_t i = 0; i < u.size(); ++i) {
        u[i] = between(rng, Scalar<SF>::zero(), Scalar<SF>::zero());
      }
    } else {
      for (std::size_t i = 0; i < u.size(); ++i) {
        const Scalar<SF> hi =
            gform.u_high ? (*gform.u_high)[i] : Scalar<SF>::zero();
        u[i] = between(rng, gform.u_low[i], hi);
      }
    }
    return gform.star * u;
  }

  std::variant<BoxForm<SF>, GeneratorForm<SF>> form_;
};

}  // namespace tropt
