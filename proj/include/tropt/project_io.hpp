#pragma once

// JSON project files.  A project is a list of named activities plus sparse
// constraint tables; absent entries mean "no constraint" and are never
// written as explicit infinities.  Values are integers or "n/d" strings.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "tropt/errors.hpp"
#include "tropt/oracle.hpp"
#include "tropt/rational.hpp"
#include "tropt/scheduling.hpp"

namespace tropt {

using SparseVec = std::map<std::string, Rat>;
using SparseMat = std::map<std::string, SparseVec>;

struct ProjectFile {
  std::vector<std::string> activities;
  SparseMat sf_lags;                     // row: finishing activity
  std::optional<SparseMat> fs_lags;      // row: starting activity
  std::optional<SparseVec> early_start;
  std::optional<SparseVec> due_date;

  bool operator==(const ProjectFile&) const = default;
};

namespace io_detail {

inline Rat rat_from_json(const nlohmann::json& v, const std::string& where) {
  if (v.is_number_integer()) return Rat(v.get<std::int64_t>());
  if (v.is_number_unsigned()) return Rat(v.get<std::uint64_t>());
  if (v.is_number_float()) {
    const double d = v.get<double>();
    if (d == static_cast<double>(static_cast<std::int64_t>(d))) {
      return Rat(static_cast<std::int64_t>(d));
    }
    throw ParseError(where + ": write fractional values as strings, "
                     "for example \"1/2\"");
  }
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const ParseError& e) {
      throw ParseError(where + ": " + e.detail());
    }
  }
  throw ParseError(where + ": expected a number or an \"n/d\" string");
}

inline nlohmann::json rat_to_json(const Rat& v) {
  if (is_integer(v) && v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(numerator(v));
  }
  return format_rational(v);
}

inline void require_known(const nlohmann::json& obj,
                          const std::vector<std::string>& allowed,
                          const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (const auto& a : allowed) known = known || key == a;
    if (!known) {
      throw ValidationError(where + ": unrecognized field '" + key + "'");
    }
  }
}

inline void require_activity(const std::vector<std::string>& names,
                             const std::string& name,
                             const std::string& where) {
  for (const auto& n : names) {
    if (n == name) return;
  }
  throw ValidationError(where + ": unknown activity '" + name + "'");
}

inline SparseVec parse_sparse_vec(const nlohmann::json& obj,
                                  const std::vector<std::string>& names,
                                  const std::string& where) {
  if (!obj.is_object()) {
    throw ParseError(where + ": expected an object of activity -> value");
  }
  SparseVec out;
  for (const auto& [name, value] : obj.items()) {
    require_activity(names, name, where);
    out[name] = rat_from_json(value, where + "." + name);
  }
  return out;
}

inline SparseMat parse_sparse_mat(const nlohmann::json& obj,
                                  const std::vector<std::string>& names,
                                  const std::string& where) {
  if (!obj.is_object()) {
    throw ParseError(where + ": expected an object of activity -> row");
  }
  SparseMat out;
  for (const auto& [name, row] : obj.items()) {
    require_activity(names, name, where);
    out[name] = parse_sparse_vec(row, names, where + "." + name);
  }
  return out;
}

inline nlohmann::json sparse_vec_to_json(const SparseVec& v) {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [name, value] : v) out[name] = rat_to_json(value);
  return out;
}

inline nlohmann::json sparse_mat_to_json(const SparseMat& m) {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [name, row] : m) out[name] = sparse_vec_to_json(row);
  return out;
}

template <class Num>
Num num_from_rat(const Rat& v) {
  if constexpr (std::is_same_v<Num, Rat>) {
    return v;
  } else {
    return v.template convert_to<Num>();
  }
}

}  // namespace io_detail

inline ProjectFile parse_project(const nlohmann::json& j) {
  using namespace io_detail;
  if (!j.is_object()) {
    throw ParseError("project file must be a JSON object");
  }
  require_known(j, {"schema", "activities", "sf_lags", "fs_lags",
                    "early_start", "due_date"},
                "project");
  if (!j.contains("schema") || !j["schema"].is_number_integer() ||
      j["schema"].get<int>() != 1) {
    throw ValidationError("project: expected \"schema\": 1");
  }
  if (!j.contains("activities") || !j["activities"].is_array() ||
      j["activities"].empty()) {
    throw ValidationError("project: \"activities\" must be a non-empty "
                          "array of names");
  }

  ProjectFile pf;
  for (const auto& item : j["activities"]) {
    if (!item.is_string() || item.get<std::string>().empty()) {
      throw ValidationError("project: activity names must be non-empty "
                            "strings");
    }
    const auto name = item.get<std::string>();
    for (const auto& seen : pf.activities) {
      if (seen == name) {
        throw ValidationError("project: duplicate activity '" + name + "'");
      }
    }
    pf.activities.push_back(name);
  }

  if (!j.contains("sf_lags")) {
    throw ValidationError("project: \"sf_lags\" is required");
  }
  pf.sf_lags = parse_sparse_mat(j["sf_lags"], pf.activities, "sf_lags");
  if (j.contains("fs_lags")) {
    pf.fs_lags = parse_sparse_mat(j["fs_lags"], pf.activities, "fs_lags");
  }
  if (j.contains("early_start")) {
    pf.early_start =
        parse_sparse_vec(j["early_start"], pf.activities, "early_start");
  }
  if (j.contains("due_date")) {
    pf.due_date = parse_sparse_vec(j["due_date"], pf.activities, "due_date");
  }
  return pf;
}

inline ProjectFile load_project_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  }
  return parse_project(j);
}

inline nlohmann::json to_json(const ProjectFile& pf) {
  using namespace io_detail;
  nlohmann::json j;
  j["schema"] = 1;
  j["activities"] = pf.activities;
  j["sf_lags"] = sparse_mat_to_json(pf.sf_lags);
  if (pf.fs_lags) j["fs_lags"] = sparse_mat_to_json(*pf.fs_lags);
  if (pf.early_start) j["early_start"] = sparse_vec_to_json(*pf.early_start);
  if (pf.due_date) j["due_date"] = sparse_vec_to_json(*pf.due_date);
  return j;
}

template <class SF>
ProjectSpec<SF> to_project_spec(const ProjectFile& pf) {
  using namespace io_detail;
  using Num = typename SF::num_type;
  const std::size_t n = pf.activities.size();
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index[pf.activities[i]] = i;

  const auto fill_mat = [&](const SparseMat& src) {
    Mat<SF> m(n, n);
    for (const auto& [row, cols] : src) {
      for (const auto& [col, value] : cols) {
        m(index.at(row), index.at(col)) =
            Scalar<SF>(num_from_rat<Num>(value));
      }
    }
    return m;
  };
  const auto fill_vec = [&](const SparseVec& src) {
    Vec<SF> v(n);
    for (const auto& [name, value] : src) {
      v[index.at(name)] = Scalar<SF>(num_from_rat<Num>(value));
    }
    return v;
  };

  ProjectSpec<SF> spec{fill_mat(pf.sf_lags), {}, {}, {}};
  if (pf.fs_lags) spec.d = fill_mat(*pf.fs_lags);
  if (pf.early_start) spec.g = fill_vec(*pf.early_start);
  if (pf.due_date) spec.f = fill_vec(*pf.due_date);
  return spec;
}

// --- result serialization ---------------------------------------------------

namespace io_detail {

inline nlohmann::json num_to_json(const Rat& v) { return rat_to_json(v); }
inline nlohmann::json num_to_json(double v) { return v; }

template <class SF>
nlohmann::json scalar_to_json(const Scalar<SF>& s) {
  if (s.is_zero()) return nullptr;
  return num_to_json(s.num());
}

template <class SF>
nlohmann::json vec_to_json(const Vec<SF>& v) {
  nlohmann::json out = nlohmann::json::array();
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push_back(scalar_to_json(v[i]));
  }
  return out;
}

template <class SF>
nlohmann::json named_vec_to_json(const std::vector<std::string>& names,
                                 const Vec<SF>& v) {
  nlohmann::json out = nlohmann::json::object();
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[names[i]] = scalar_to_json(v[i]);
  }
  return out;
}

template <class SF>
nlohmann::json mat_to_json(const Mat<SF>& m) {
  nlohmann::json out = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      row.push_back(scalar_to_json(m(i, j)));
    }
    out.push_back(row);
  }
  return out;
}

template <class SF>
nlohmann::json solution_set_to_json(const std::vector<std::string>& names,
                                    const SolutionSet<SF>& set) {
  nlohmann::json out;
  if (set.is_box()) {
    const auto& box = set.box_form();
    out["type"] = "box";
    out["low"] = named_vec_to_json(names, box.low);
    out["high"] = named_vec_to_json(names, box.high);
    out["scale_free"] = box.scale_free;
  } else {
    const auto& gen = set.generator_form();
    out["type"] = "generated";
    out["star"] = mat_to_json(gen.star);
    out["u_low"] = named_vec_to_json(names, gen.u_low);
    if (gen.u_high) out["u_high"] = named_vec_to_json(names, *gen.u_high);
    out["scale_free"] = gen.scale_free;
  }
  return out;
}

}  // namespace io_detail

template <class SF>
nlohmann::json result_to_json(const ProjectFile& pf,
                              const ScheduleResult<SF>& r,
                              ProjectModel model) {
  using namespace io_detail;
  nlohmann::json j;
  j["model"] = to_string(model);
  j["makespan"] = scalar_to_json(r.makespan);
  j["earliest"] = named_vec_to_json(pf.activities, r.earliest);
  j["completions"] = named_vec_to_json(pf.activities, r.completions);
  j["solution_set"] = solution_set_to_json(pf.activities, r.solutions);
  if (r.box) {
    j["box"] = solution_set_to_json(pf.activities, *r.box);
  }
  return j;
}

inline nlohmann::json report_to_json(const OracleReport& r) {
  using namespace io_detail;
  nlohmann::json j;
  j["checked"] = r.checked;
  j["claimed"] = rat_to_json(r.claimed);
  j["best_found"] =
      r.best_found ? rat_to_json(*r.best_found) : nlohmann::json();
  j["points"] = r.points;
  j["violations"] = r.violations;
  j["ok"] = r.ok();
  return j;
}

}  // namespace tropt
