#pragma once

// Brute-force auditor for scheduling results.  Everything here re-derives
// feasibility and makespans from the raw project data with plain integer
// arithmetic (after clearing denominators), deliberately sharing no code
// with the closed-form solvers it checks.

#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "tropt/errors.hpp"
#include "tropt/rational.hpp"
#include "tropt/scheduling.hpp"

namespace tropt {

struct OracleReport {
  std::string checked;                  // what was audited
  Rat claimed;                          // minimum under audit
  std::optional<Rat> best_found;        // best feasible makespan encountered
  std::uint64_t points = 0;             // candidate points evaluated
  std::vector<std::string> violations;  // evidence against the claim

  bool ok() const { return violations.empty(); }
};

// Integer bounds (in original units) of a grid sweep.
struct GridBox {
  std::vector<long long> lo;
  std::vector<long long> hi;
};

namespace oracle_detail {

inline constexpr long long kNegInf =
    std::numeric_limits<long long>::min() / 4;
inline constexpr long long kMagnitudeCap = 1LL << 40;

inline long long guarded_add(long long a, long long b) {
  return (a == kNegInf || b == kNegInf) ? kNegInf : a + b;
}

inline long long rat_floor_ll(const Rat& r) {
  BigInt q = numerator(r) / denominator(r);
  if (Rat(q) > r) --q;
  return static_cast<long long>(q);
}

inline long long rat_ceil_ll(const Rat& r) { return -rat_floor_ll(-r); }

// Project data with denominators cleared: every stored value is the original
// one multiplied by `scale`.
struct IntInstance {
  std::size_t n = 0;
  long long scale = 1;
  std::vector<std::vector<long long>> c;
  std::vector<std::vector<long long>> dc;  // composition of D with C
  std::vector<long long> g;
  std::vector<long long> f;
  bool has_dc = false;
  bool has_g = false;
  bool has_f = false;
};

inline void lcm_in(BigInt& acc, const Rat& value) {
  const BigInt d = denominator(value);
  acc = acc / gcd(acc, d) * d;
}

template <class Collect>
void for_each_value(const ProjectSpec<MaxPlusRat>& spec, Collect&& collect) {
  using std::size_t;
  const size_t n = spec.size();
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      if (!spec.c(i, j).is_zero()) collect(spec.c(i, j).num());
      if (spec.d && !(*spec.d)(i, j).is_zero()) collect((*spec.d)(i, j).num());
    }
    if (spec.g && !(*spec.g)[i].is_zero()) collect((*spec.g)[i].num());
    if (spec.f && !(*spec.f)[i].is_zero()) collect((*spec.f)[i].num());
  }
}

inline long long scaled_ll(const Rat& value, long long scale) {
  const Rat scaled = value * scale;
  if (denominator(scaled) != 1) {
    throw ValidationError("value does not land on the verification grid");
  }
  const BigInt num = numerator(scaled);
  if (num < -BigInt(kMagnitudeCap) || num > BigInt(kMagnitudeCap)) {
    throw ValidationError("project data too large for exact verification");
  }
  return static_cast<long long>(num);
}

// Clears denominators across the project data and the extra values (claimed
// minimum, grid resolution) so all later arithmetic is on integers.
inline IntInstance scale_instance(const ProjectSpec<MaxPlusRat>& spec,
                                  const std::vector<Rat>& extra) {
  BigInt lcm = 1;
  for_each_value(spec, [&](const Rat& v) { lcm_in(lcm, v); });
  for (const Rat& v : extra) lcm_in(lcm, v);
  if (lcm > BigInt(1LL << 20)) {
    throw ValidationError("project data denominators too fine for "
                          "exact verification");
  }

  IntInstance inst;
  inst.n = spec.size();
  inst.scale = static_cast<long long>(lcm);
  inst.c.assign(inst.n, std::vector<long long>(inst.n, kNegInf));
  for (std::size_t i = 0; i < inst.n; ++i) {
    for (std::size_t j = 0; j < inst.n; ++j) {
      if (!spec.c(i, j).is_zero()) {
        inst.c[i][j] = scaled_ll(spec.c(i, j).num(), inst.scale);
      }
    }
  }
  if (spec.d) {
    std::vector<std::vector<long long>> d(inst.n,
                                          std::vector<long long>(inst.n,
                                                                 kNegInf));
    for (std::size_t i = 0; i < inst.n; ++i) {
      for (std::size_t j = 0; j < inst.n; ++j) {
        if (!(*spec.d)(i, j).is_zero()) {
          d[i][j] = scaled_ll((*spec.d)(i, j).num(), inst.scale);
        }
      }
    }
    inst.dc.assign(inst.n, std::vector<long long>(inst.n, kNegInf));
    for (std::size_t i = 0; i < inst.n; ++i) {
      for (std::size_t k = 0; k < inst.n; ++k) {
        if (d[i][k] == kNegInf) continue;
        for (std::size_t j = 0; j < inst.n; ++j) {
          const long long w = guarded_add(d[i][k], inst.c[k][j]);
          if (w != kNegInf && w > inst.dc[i][j]) inst.dc[i][j] = w;
        }
      }
    }
    inst.has_dc = true;
  }
  if (spec.g) {
    inst.g.assign(inst.n, kNegInf);
    for (std::size_t i = 0; i < inst.n; ++i) {
      if (!(*spec.g)[i].is_zero()) {
        inst.g[i] = scaled_ll((*spec.g)[i].num(), inst.scale);
      }
    }
    inst.has_g = true;
  }
  if (spec.f) {
    inst.f.assign(inst.n, kNegInf);
    for (std::size_t i = 0; i < inst.n; ++i) {
      if (!(*spec.f)[i].is_zero()) {
        inst.f[i] = scaled_ll((*spec.f)[i].num(), inst.scale);
      }
    }
    inst.has_f = true;
  }
  return inst;
}

// Makespan of x: latest finish minus earliest start.
inline long long objective(const IntInstance& inst,
                           const std::vector<long long>& x) {
  long long latest = kNegInf;
  long long first = x[0];
  for (std::size_t i = 0; i < inst.n; ++i) {
    if (x[i] < first) first = x[i];
    for (std::size_t j = 0; j < inst.n; ++j) {
      const long long v = guarded_add(inst.c[i][j], x[j]);
      if (v > latest) latest = v;
    }
  }
  return latest - first;
}

inline bool feasible(const IntInstance& inst, ProjectModel model,
                     const std::vector<long long>& x) {
  if (inst.has_g) {
    for (std::size_t i = 0; i < inst.n; ++i) {
      if (inst.g[i] != kNegInf && x[i] < inst.g[i]) return false;
    }
  }
  if (model == ProjectModel::sf_es_lf) {
    for (std::size_t i = 0; i < inst.n; ++i) {
      long long finish = kNegInf;
      for (std::size_t j = 0; j < inst.n; ++j) {
        const long long v = guarded_add(inst.c[i][j], x[j]);
        if (v > finish) finish = v;
      }
      if (inst.f[i] != kNegInf && finish > inst.f[i]) return false;
    }
  }
  if (model == ProjectModel::sf_fs_es) {
    for (std::size_t i = 0; i < inst.n; ++i) {
      for (std::size_t j = 0; j < inst.n; ++j) {
        const long long v = guarded_add(inst.dc[i][j], x[j]);
        if (v != kNegInf && v > x[i]) return false;
      }
    }
  }
  return true;
}

// All-pairs longest walk weights of the dc graph (no positive cycles), by
// the classic relaxation over intermediate nodes.
inline std::vector<std::vector<long long>> longest_walks(
    const std::vector<std::vector<long long>>& dc) {
  auto m = dc;
  const std::size_t n = m.size();
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (m[i][k] == kNegInf) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const long long w = guarded_add(m[i][k], m[k][j]);
        if (w != kNegInf && w > m[i][j]) m[i][j] = w;
      }
    }
  }
  return m;
}

inline std::string point_to_string(const std::vector<long long>& x,
                                   long long scale) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i > 0) s += ", ";
    s += format_rational(Rat(x[i]) / scale);
  }
  return s + ")";
}

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t i) {
  return seed * 1000003ULL + 0x9e3779b97f4a7c15ULL + i;
}

// Exact rational makespan of a rational schedule, evaluated with plain
// loops over the project data.
inline Rat rational_makespan(const ProjectSpec<MaxPlusRat>& spec,
                             const Vec<MaxPlusRat>& x) {
  bool any = false;
  Rat latest;
  Rat first = x[0].num();
  for (std::size_t i = 0; i < spec.size(); ++i) {
    if (x[i].num() < first) first = x[i].num();
    for (std::size_t j = 0; j < spec.size(); ++j) {
      if (spec.c(i, j).is_zero()) continue;
      const Rat v = spec.c(i, j).num() + x[j].num();
      if (!any || v > latest) latest = v;
      any = true;
    }
  }
  return latest - first;
}

}  // namespace oracle_detail

// Sweeps an integer grid over `box` with the given resolution and reports
// every feasible schedule whose makespan beats the claimed minimum.  The
// grid minimum can only be above the claim when the optimum lies off the
// grid, so best_found equal to the claim certifies it on integer data.
inline OracleReport grid_check(const ProjectSpec<MaxPlusRat>& spec,
                               const Scalar<MaxPlusRat>& claimed,
                               const GridBox& box,
                               const Rat& resolution = Rat(1),
                               std::uint64_t max_points = 4000000) {
  using namespace oracle_detail;
  const ProjectModel model = classify(spec);
  const std::size_t n = spec.size();
  if (n > 4) {
    throw GridTooLarge("grid sweeps are limited to four activities");
  }
  if (box.lo.size() != n || box.hi.size() != n) {
    throw DimensionMismatch("grid box must match the number of activities");
  }
  if (resolution <= 0) {
    throw ValidationError("grid resolution must be positive");
  }
  const Rat claim = claimed.num();
  const IntInstance inst = scale_instance(spec, {claim, resolution});
  const long long stride = scaled_ll(resolution, inst.scale);
  const long long claim_scaled = scaled_ll(claim, inst.scale);

  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (box.hi[i] < box.lo[i]) {
      throw ValidationError("grid box is empty");
    }
    const std::uint64_t steps =
        static_cast<std::uint64_t>(box.hi[i] - box.lo[i]) *
            static_cast<std::uint64_t>(inst.scale) /
            static_cast<std::uint64_t>(stride) +
        1;
    if (total > max_points / steps) {
      throw GridTooLarge("grid has more than " + std::to_string(max_points) +
                         " points");
    }
    total *= steps;
  }

  OracleReport report;
  report.checked = std::string("grid sweep, ") + to_string(model);
  report.claimed = claim;

  std::vector<long long> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = box.lo[i] * inst.scale;
  long long best = std::numeric_limits<long long>::max();
  bool any = false;
  while (true) {
    ++report.points;
    if (feasible(inst, model, x)) {
      const long long obj = objective(inst, x);
      if (!any || obj < best) best = obj, any = true;
      if (obj < claim_scaled && report.violations.size() < 10) {
        std::ostringstream os;
        os << "feasible schedule " << point_to_string(x, inst.scale)
           << " has makespan " << format_rational(Rat(obj) / inst.scale)
           << ", below the claimed minimum " << format_rational(claim);
        report.violations.push_back(os.str());
      }
    }
    std::size_t i = 0;
    for (; i < n; ++i) {
      x[i] += stride;
      if (x[i] <= box.hi[i] * inst.scale) break;
      x[i] = box.lo[i] * inst.scale;
    }
    if (i == n) break;
  }
  if (any) report.best_found = Rat(best) / inst.scale;
  return report;
}

// Samples random feasible schedules (integer arithmetic) and random members
// of the reported solution set (exact rational arithmetic).  A feasible
// schedule below the claimed minimum, or a member that is infeasible or
// misses the claimed minimum, is a violation.
inline OracleReport sample_check(const ProjectSpec<MaxPlusRat>& spec,
                                 const ScheduleResult<MaxPlusRat>& result,
                                 std::uint64_t samples, std::uint64_t seed,
                                 std::uint64_t member_samples = 200) {
  using namespace oracle_detail;
  const ProjectModel model = classify(spec);
  const std::size_t n = spec.size();
  const Rat claim = result.makespan.num();
  const IntInstance inst = scale_instance(spec, {claim});
  const long long claim_scaled = scaled_ll(claim, inst.scale);

  OracleReport report;
  report.checked = std::string("random samples, ") + to_string(model);
  report.claimed = claim;

  const auto flag = [&](const std::string& msg) {
    if (report.violations.size() < 10) report.violations.push_back(msg);
  };

  // Window width for coordinates without binding bounds.
  long long spread = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (inst.c[i][j] != kNegInf && std::abs(inst.c[i][j]) > spread) {
        spread = std::abs(inst.c[i][j]);
      }
    }
  }
  const long long window = 2 * spread + 8 * inst.scale;

  // Upper bounds implied by due dates: x_j ≤ min_i (f_i - c_ij).
  std::vector<long long> upper(n, 0);
  if (model == ProjectModel::sf_es_lf) {
    for (std::size_t j = 0; j < n; ++j) {
      long long m = std::numeric_limits<long long>::max();
      for (std::size_t i = 0; i < n; ++i) {
        if (inst.c[i][j] == kNegInf) continue;
        const long long cap = inst.f[i] - inst.c[i][j];
        if (cap < m) m = cap;
      }
      upper[j] = m == std::numeric_limits<long long>::max() ? window : m;
    }
  }
  const auto walks = inst.has_dc
                         ? longest_walks(inst.dc)
                         : std::vector<std::vector<long long>>();

  std::mt19937_64 rng(seed);
  const auto draw = [&](long long lo, long long hi) {
    if (hi <= lo) return lo;
    return lo + static_cast<long long>(
                    rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };

  long long best = std::numeric_limits<long long>::max();
  bool any = false;
  std::vector<long long> x(n);
  for (std::uint64_t s = 0; s < samples; ++s) {
    switch (model) {
      case ProjectModel::sf_only:
        for (std::size_t j = 0; j < n; ++j) x[j] = draw(-window, window);
        break;
      case ProjectModel::sf_es_lf:
        for (std::size_t j = 0; j < n; ++j) {
          const long long lo =
              inst.g[j] != kNegInf ? inst.g[j] : upper[j] - window;
          x[j] = draw(lo, upper[j]);
        }
        break;
      case ProjectModel::sf_fs_es: {
        std::vector<long long> u(n);
        for (std::size_t j = 0; j < n; ++j) {
          const long long lo = inst.g[j] != kNegInf ? inst.g[j] : 0;
          u[j] = draw(lo, lo + window);
        }
        for (std::size_t i = 0; i < n; ++i) {
          long long v = u[i];
          for (std::size_t j = 0; j < n; ++j) {
            const long long w = guarded_add(walks[i][j], u[j]);
            if (w > v) v = w;
          }
          x[i] = v;
        }
        break;
      }
    }
    ++report.points;
    if (!feasible(inst, model, x)) {
      flag("internal: drawn schedule " + point_to_string(x, inst.scale) +
           " is infeasible");
      continue;
    }
    const long long obj = objective(inst, x);
    if (!any || obj < best) best = obj, any = true;
    if (obj < claim_scaled) {
      std::ostringstream os;
      os << "feasible schedule " << point_to_string(x, inst.scale)
         << " has makespan " << format_rational(Rat(obj) / inst.scale)
         << ", below the claimed minimum " << format_rational(claim);
      flag(os.str());
    }
  }
  if (any) report.best_found = Rat(best) / inst.scale;

  // Members of the reported solution set must be feasible and attain the
  // claim exactly.
  for (std::uint64_t i = 0; i < member_samples; ++i) {
    const Vec<MaxPlusRat> m = result.solutions.sample(mix_seed(seed, i));
    ++report.points;
    bool good = true;
    if (spec.g) {
      for (std::size_t j = 0; j < n && good; ++j) {
        if (!(*spec.g)[j].is_zero() && m[j].num() < (*spec.g)[j].num()) {
          good = false;
          flag("member violates an earliest start time");
        }
      }
    }
    if (spec.f) {
      for (std::size_t r = 0; r < n && good; ++r) {
        Rat finish;
        bool fin = false;
        for (std::size_t j = 0; j < n; ++j) {
          if (spec.c(r, j).is_zero()) continue;
          const Rat v = spec.c(r, j).num() + m[j].num();
          if (!fin || v > finish) finish = v, fin = true;
        }
        if (fin && !(*spec.f)[r].is_zero() && finish > (*spec.f)[r].num()) {
          good = false;
          flag("member violates a due date");
        }
      }
    }
    if (spec.d) {
      for (std::size_t r = 0; r < n && good; ++r) {
        for (std::size_t j = 0; j < n; ++j) {
          Rat bound;
          bool has = false;
          for (std::size_t k = 0; k < n; ++k) {
            if ((*spec.d)(r, k).is_zero() || spec.c(k, j).is_zero()) continue;
            const Rat v = (*spec.d)(r, k).num() + spec.c(k, j).num();
            if (!has || v > bound) bound = v, has = true;
          }
          if (has && bound + m[j].num() > m[r].num()) {
            good = false;
            flag("member violates a finish-to-start lag");
            break;
          }
        }
      }
    }
    if (good && rational_makespan(spec, m) != claim) {
      std::ostringstream os;
      os << "member has makespan "
         << format_rational(rational_makespan(spec, m))
         << " instead of the claimed " << format_rational(claim);
      flag(os.str());
    }
  }
  return report;
}

// Grid box adapted to the model: around the origin for the free problem,
// the feasibility box for due dates, and the earliest schedule's reach for
// finish-to-start lags.  Enlarging it only adds points, so the reported
// earliest schedule is used for sizing only.
inline GridBox auto_box(const ProjectSpec<MaxPlusRat>& spec,
                        const ScheduleResult<MaxPlusRat>& result) {
  using namespace oracle_detail;
  const ProjectModel model = classify(spec);
  const std::size_t n = spec.size();
  GridBox box;
  box.lo.assign(n, 0);
  box.hi.assign(n, 0);
  switch (model) {
    case ProjectModel::sf_only:
      for (std::size_t j = 0; j < n; ++j) box.lo[j] = -2, box.hi[j] = 2;
      break;
    case ProjectModel::sf_es_lf: {
      const IntInstance inst = scale_instance(spec, {});
      for (std::size_t j = 0; j < n; ++j) {
        long long cap = std::numeric_limits<long long>::max();
        for (std::size_t i = 0; i < n; ++i) {
          if (inst.c[i][j] == kNegInf) continue;
          cap = std::min(cap, inst.f[i] - inst.c[i][j]);
        }
        box.hi[j] = rat_ceil_ll(Rat(cap) / inst.scale);
        box.lo[j] = (*spec.g)[j].is_zero()
                        ? box.hi[j] - 4
                        : rat_floor_ll((*spec.g)[j].num());
      }
      break;
    }
    case ProjectModel::sf_fs_es:
      for (std::size_t j = 0; j < n; ++j) {
        box.lo[j] = (*spec.g)[j].is_zero()
                        ? 0
                        : rat_floor_ll((*spec.g)[j].num());
        box.hi[j] =
            std::max(box.lo[j], rat_ceil_ll(result.earliest[j].num())) + 1;
      }
      break;
  }
  return box;
}

}  // namespace tropt
