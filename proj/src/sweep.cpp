#include "opabs/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>

#include "opabs/detection.hpp"
#include "opabs/photon_number.hpp"
#include "opabs/qfi_ideal.hpp"
#include "opabs/qfi_lossy.hpp"

#include <json.hpp>

namespace opabs {

const std::vector<Quantity>& all_quantities() {
  static const std::vector<Quantity> q{
      Quantity::delta_phi, Quantity::F,       Quantity::qcrb,
      Quantity::F_lossy,   Quantity::qcrb_lossy, Quantity::n_total,
      Quantity::sql,       Quantity::hl};
  return q;
}

const char* quantity_name(Quantity q) {
  switch (q) {
    case Quantity::delta_phi: return "delta_phi";
    case Quantity::F: return "F";
    case Quantity::qcrb: return "qcrb";
    case Quantity::F_lossy: return "F_lossy";
    case Quantity::qcrb_lossy: return "qcrb_lossy";
    case Quantity::n_total: return "n_total";
    case Quantity::sql: return "sql";
    case Quantity::hl: return "hl";
  }
  return "?";
}

std::optional<Quantity> quantity_from_name(const std::string& name) {
  for (Quantity q : all_quantities())
    if (name == quantity_name(q)) return q;
  return std::nullopt;
}

const char* status_name(RowStatus s) {
  switch (s) {
    case RowStatus::ok: return "ok";
    case RowStatus::infinite: return "infinite";
    case RowStatus::annihilated: return "annihilated";
  }
  return "?";
}

namespace {

std::optional<double> finite_cell(double x) {
  if (std::isfinite(x)) return x;
  return std::nullopt;
}

bool wants(const std::vector<Quantity>& qs, Quantity q) {
  for (Quantity e : qs)
    if (e == q) return true;
  return false;
}

}  // namespace

ResultRow run_point(const Params& p, const std::vector<Quantity>& quantities) {
  p.validate();
  ResultRow row;
  row.params = p;
  row.cells.assign(quantities.size(), std::nullopt);

  bool annihilated = false;

  // evaluate each physics family once, share across requested columns
  std::optional<double> dphi, F, F_L, n_total;
  auto guard = [&](auto&& fn) -> std::optional<double> {
    try {
      return fn();
    } catch (const AnnihilatedStateError&) {
      annihilated = true;
      return std::nullopt;
    }
  };
  if (wants(quantities, Quantity::delta_phi))
    dphi = guard([&] { return phase_sensitivity(p); });
  if (wants(quantities, Quantity::F) || wants(quantities, Quantity::qcrb))
    F = guard([&] { return qfi_ideal(p).F; });
  if (wants(quantities, Quantity::F_lossy) ||
      wants(quantities, Quantity::qcrb_lossy))
    F_L = guard([&] { return qfi_lossy(p); });
  if (wants(quantities, Quantity::n_total) || wants(quantities, Quantity::sql) ||
      wants(quantities, Quantity::hl))
    n_total = guard([&] { return internal_photon_number(p).n_total; });

  for (std::size_t i = 0; i < quantities.size(); ++i) {
    switch (quantities[i]) {
      case Quantity::delta_phi:
        if (dphi) row.cells[i] = finite_cell(*dphi);
        break;
      case Quantity::F:
        if (F) row.cells[i] = finite_cell(*F);
        break;
      case Quantity::qcrb:
        if (F && *F > 0.0) row.cells[i] = finite_cell(qcrb(*F, p.v));
        break;
      case Quantity::F_lossy:
        if (F_L) row.cells[i] = finite_cell(*F_L);
        break;
      case Quantity::qcrb_lossy:
        if (F_L && *F_L > 0.0) row.cells[i] = finite_cell(qcrb(*F_L, p.v));
        break;
      case Quantity::n_total:
        if (n_total) row.cells[i] = finite_cell(*n_total);
        break;
      case Quantity::sql:
        if (n_total && *n_total > 0.0)
          row.cells[i] = finite_cell(1.0 / std::sqrt(*n_total));
        break;
      case Quantity::hl:
        if (n_total && *n_total > 0.0)
          row.cells[i] = finite_cell(1.0 / *n_total);
        break;
    }
  }

  if (annihilated)
    row.status = RowStatus::annihilated;
  else {
    bool missing = false;
    for (const auto& c : row.cells)
      if (!c) missing = true;
    row.status = missing ? RowStatus::infinite : RowStatus::ok;
  }
  return row;
}

void set_param_field(Params& p, const std::string& name, double value) {
  if (name == "alpha") p.alpha = value;
  else if (name == "beta") p.beta = value;
  else if (name == "g") p.g = value;
  else if (name == "theta") p.theta = value;
  else if (name == "phi") p.phi = value;
  else if (name == "tau") p.tau = value;
  else if (name == "T") p.T = value;
  else if (name == "eta") p.eta = value;
  else if (name == "m") {
    const double r = std::round(value);
    if (std::abs(r - value) > 1e-9)
      throw UsageError("axis m must take integer values");
    p.m = static_cast<int>(r);
  } else {
    throw UsageError("unknown parameter field: " + name);
  }
}

void SweepSpec::validate() const {
  if (axes.empty() || axes.size() > 2)
    throw UsageError("sweep: need 1 or 2 axes");
  for (const auto& a : axes) {
    Params probe = fixed;
    set_param_field(probe, a.name, a.start);  // validates the name
    if (a.count < 2) throw UsageError("sweep: axis count must be >= 2");
  }
  if (axes.size() == 2 && axes[0].name == axes[1].name)
    throw UsageError("sweep: duplicate axis parameter");
  if (quantities.empty()) throw UsageError("sweep: no quantities requested");
  fixed.validate();
}

std::vector<ResultRow> run_sweep(const SweepSpec& spec) {
  spec.validate();
  auto axis_value = [](const SweepAxis& a, int i) {
    return a.start + (a.stop - a.start) * i / (a.count - 1);
  };
  const std::size_t n_outer = static_cast<std::size_t>(spec.axes[0].count);
  const std::size_t n_inner =
      spec.axes.size() == 2 ? static_cast<std::size_t>(spec.axes[1].count) : 1;
  std::vector<ResultRow> rows(n_outer * n_inner);
  parallel_for(rows.size(), [&](std::size_t idx) {
    const std::size_t i = idx / n_inner;
    const std::size_t j = idx % n_inner;
    Params p = spec.fixed;
    set_param_field(p, spec.axes[0].name,
                    axis_value(spec.axes[0], static_cast<int>(i)));
    if (spec.axes.size() == 2)
      set_param_field(p, spec.axes[1].name,
                      axis_value(spec.axes[1], static_cast<int>(j)));
    rows[idx] = run_point(p, spec.quantities);
  });
  return rows;
}

std::string format_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

namespace {

const std::vector<std::pair<const char*, double Params::*>>& param_columns() {
  static const std::vector<std::pair<const char*, double Params::*>> cols{
      {"alpha", &Params::alpha}, {"beta", &Params::beta}, {"g", &Params::g},
      {"theta", &Params::theta}, {"phi", &Params::phi},   {"tau", &Params::tau},
      {"T", &Params::T},         {"eta", &Params::eta}};
  return cols;
}

}  // namespace

void write_csv(std::ostream& os, const SweepSpec& spec,
               const std::vector<ResultRow>& rows) {
  for (const auto& [name, ptr] : param_columns()) os << name << ",";
  os << "m,v";
  for (Quantity q : spec.quantities) os << "," << quantity_name(q);
  os << ",status\n";
  for (const auto& row : rows) {
    for (const auto& [name, ptr] : param_columns())
      os << format_number(row.params.*ptr) << ",";
    os << row.params.m << "," << row.params.v;
    for (std::size_t i = 0; i < row.cells.size(); ++i) {
      os << ",";
      if (row.cells[i]) os << format_number(*row.cells[i]);
    }
    os << "," << status_name(row.status) << "\n";
  }
}

void write_json(std::ostream& os, const SweepSpec& spec,
                const std::vector<ResultRow>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& row : rows) {
    nlohmann::json obj;
    for (const auto& [name, ptr] : param_columns()) obj[name] = row.params.*ptr;
    obj["m"] = row.params.m;
    obj["v"] = row.params.v;
    for (std::size_t i = 0; i < row.cells.size(); ++i) {
      const char* name = quantity_name(spec.quantities[i]);
      if (row.cells[i])
        obj[name] = *row.cells[i];
      else
        obj[name] = nullptr;
    }
    obj["status"] = status_name(row.status);
    arr.push_back(obj);
  }
  os << arr.dump(2) << "\n";
}

}  // namespace opabs
