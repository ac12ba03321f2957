#pragma once

#include <optional>
#include <string>
#include <utility>

#include "tropt/errors.hpp"
#include "tropt/linalg.hpp"
#include "tropt/matrix.hpp"
#include "tropt/optimize.hpp"
#include "tropt/solution_set.hpp"

namespace tropt {

// A project of n activities with pairwise timing constraints.
//
//   c(i, j): least time from the start of activity j to the finish of
//            activity i (start-to-finish lag); row-regular, so every
//            activity's finish is driven by at least one start.
//   d(i, j): least time from the finish of activity j to the start of
//            activity i (finish-to-start lag), optional.
//   g:       earliest start times, optional; zero entries mean unconstrained.
//   f:       due dates, optional.
//
// A schedule is a regular vector x of start times; activity i finishes at
// (C x)_i, and the makespan is the span from the first start to the last
// finish, (1^T C x)(x⁻ 1).
template <class SF>
struct ProjectSpec {
  Mat<SF> c;
  std::optional<Mat<SF>> d;
  std::optional<Vec<SF>> g;
  std::optional<Vec<SF>> f;

  std::size_t size() const { return c.rows(); }
};

// Which constraint combination a project uses.
enum class ProjectModel {
  sf_only,   // start-to-finish lags alone
  sf_es_lf,  // with earliest starts and due dates
  sf_fs_es,  // with finish-to-start lags and earliest starts
};

inline const char* to_string(ProjectModel m) {
  switch (m) {
    case ProjectModel::sf_only: return "start-finish lags only";
    case ProjectModel::sf_es_lf:
      return "start-finish lags, earliest starts, due dates";
    case ProjectModel::sf_fs_es:
      return "start-finish lags, finish-start lags, earliest starts";
  }
  return "unknown";
}

template <class SF>
ProjectModel classify(const ProjectSpec<SF>& spec) {
  const bool has_d = spec.d.has_value();
  const bool has_g = spec.g.has_value();
  const bool has_f = spec.f.has_value();
  if (!has_d && !has_g && !has_f) return ProjectModel::sf_only;
  if (!has_d && has_g && has_f) return ProjectModel::sf_es_lf;
  if (has_d && has_g && !has_f) return ProjectModel::sf_fs_es;
  std::string present = "start-finish lags";
  if (has_d) present += ", finish-start lags";
  if (has_g) present += ", earliest starts";
  if (has_f) present += ", due dates";
  throw UnsupportedConstraintCombination(
      "no closed-form model for the combination: " + present);
}

template <class SF>
struct ScheduleResult {
  Scalar<SF> makespan;
  SolutionSet<SF> solutions;              // all minimum-makespan schedules
  std::optional<SolutionSet<SF>> box;     // box description when one exists
  Vec<SF> earliest;                       // least optimal schedule
  Vec<SF> completions;                    // finish times of that schedule
};

// Finish times of the schedule x.
template <class SF>
Vec<SF> completions(const Mat<SF>& c, const Vec<SF>& x) {
  if (!is_row_regular(c)) {
    throw NotRowRegular("every activity needs a start-to-finish lag");
  }
  return c * x;
}

namespace detail {

// Shared profiles of the span objective: p = 1 and q⁻ = 1^T C, so that
// q⁻ x x⁻ p is exactly the makespan of x.
template <class SF>
std::pair<Vec<SF>, Vec<SF>> span_profiles(const Mat<SF>& c) {
  return {ones_vec<SF>(c.rows()), conj(ones_row<SF>(c.rows()) * c)};
}

}  // namespace detail

// Minimum makespan with no further constraints.  The minimum is ‖C‖ and the
// optimal schedules form a scale-free family: any α with α·1 ≤ x ≤
// α·‖C‖·(1^T C)⁻.  The reported earliest schedule is normalized to start at
// time zero.
template <class SF>
ScheduleResult<SF> makespan_sf(const ProjectSpec<SF>& spec) {
  const Mat<SF>& c = spec.c;
  if (!c.is_square()) throw NotSquare("the lag matrix must be square");
  if (!is_row_regular(c)) {
    throw NotRowRegular("every activity needs a start-to-finish lag");
  }
  const auto [p, q] = detail::span_profiles(c);
  OptResult<SF> res = min_rank_one(p, q);

  // Pick the schedule at the lower parameter bound and normalize its
  // smallest entry to time zero.
  Vec<SF> x = res.solutions.generator_form().star *
              res.solutions.generator_form().u_low;
  Scalar<SF> lowest = x[0];
  for (std::size_t i = 1; i < x.size(); ++i) lowest = meet(lowest, x[i]);
  x = inv(lowest) * x;

  Vec<SF> y = c * x;
  return ScheduleResult<SF>{res.minimum, std::move(res.solutions),
                            std::move(res.box), std::move(x), std::move(y)};
}

// Minimum makespan subject to earliest starts g and due dates f.  Feasible
// exactly when f⁻ C g ≤ 1; the minimum is ‖C‖ ⊕ ‖C g‖·‖f⁻ C‖.
template <class SF>
ScheduleResult<SF> makespan_sf_es_lf(const ProjectSpec<SF>& spec) {
  const Mat<SF>& c = spec.c;
  if (!c.is_square()) throw NotSquare("the lag matrix must be square");
  if (!is_regular(c)) {
    throw NotRegular("the lag matrix needs a nonzero entry in every row and "
                     "column");
  }
  const Vec<SF>& g = *spec.g;
  const Vec<SF>& f = *spec.f;
  if (g.size() != c.rows() || f.size() != c.rows()) {
    throw DimensionMismatch("bounds must match the number of activities");
  }
  if (!is_regular(f)) {
    throw NotRegular("every activity needs a due date in this model");
  }
  if (!leq(conj(f) * (c * g), Scalar<SF>::one())) {
    throw InfeasibleDueDates(
        "the earliest starts already violate the due dates");
  }

  const auto [p, q] = detail::span_profiles(c);
  const Vec<SF> h = conj(conj(f) * c);
  OptResult<SF> res = min_rank_one_boxed(p, q, g, h);

  Vec<SF> x = res.solutions.least();
  Vec<SF> y = c * x;
  return ScheduleResult<SF>{res.minimum, std::move(res.solutions),
                            std::nullopt, std::move(x), std::move(y)};
}

// Minimum makespan subject to finish-to-start lags D and earliest starts g.
// Schedules must satisfy D C x ≤ x, which is consistent exactly when
// Tr(D C) ≤ 1; the minimum is ‖C (D C)*‖.
template <class SF>
ScheduleResult<SF> makespan_sf_fs_es(const ProjectSpec<SF>& spec) {
  const Mat<SF>& c = spec.c;
  if (!c.is_square()) throw NotSquare("the lag matrix must be square");
  if (!is_row_regular(c)) {
    throw NotRowRegular("every activity needs a start-to-finish lag");
  }
  const Mat<SF>& d = *spec.d;
  const Vec<SF>& g = *spec.g;
  if (!d.is_square() || d.rows() != c.rows() || g.size() != c.rows()) {
    throw DimensionMismatch("operands must match the number of activities");
  }
  const Mat<SF> b = d * c;
  if (!leq(cycle_trace(b), Scalar<SF>::one())) {
    throw CyclicFinishStart(
        "the finish-to-start cycle delays are positive; no schedule "
        "satisfies them");
  }

  const auto [p, q] = detail::span_profiles(c);
  OptResult<SF> res = min_rank_one_linear(p, q, b, g);

  Vec<SF> x = res.solutions.least();
  Vec<SF> y = c * x;
  return ScheduleResult<SF>{res.minimum, std::move(res.solutions),
                            std::nullopt, std::move(x), std::move(y)};
}

// Dispatch on the constraint combination present in the project.
template <class SF>
ScheduleResult<SF> solve_project(const ProjectSpec<SF>& spec) {
  switch (classify(spec)) {
    case ProjectModel::sf_only: return makespan_sf(spec);
    case ProjectModel::sf_es_lf: return makespan_sf_es_lf(spec);
    case ProjectModel::sf_fs_es: return makespan_sf_fs_es(spec);
  }
  throw UnsupportedConstraintCombination("unreachable");
}

// Makespan of a given schedule, for reporting and verification.
template <class SF>
Scalar<SF> makespan_of(const Mat<SF>& c, const Vec<SF>& x) {
  return (ones_row<SF>(c.rows()) * (c * x)) * (conj(x) * ones_vec<SF>(c.rows()));
}

}  // namespace tropt
