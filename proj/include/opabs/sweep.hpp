#ifndef OPABS_SWEEP_HPP
#define OPABS_SWEEP_HPP

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "opabs/params.hpp"

namespace opabs {

// Quantities a row can carry, in output-column order.
enum class Quantity {
  delta_phi,
  F,
  qcrb,
  F_lossy,
  qcrb_lossy,
  n_total,
  sql,
  hl,
};

const std::vector<Quantity>& all_quantities();
const char* quantity_name(Quantity q);
std::optional<Quantity> quantity_from_name(const std::string& name);

enum class RowStatus { ok, infinite, annihilated };
const char* status_name(RowStatus s);

// One evaluated grid point.  Cells are empty when the quantity is undefined
// (annihilated state) or infinite; the status says why.
struct ResultRow {
  Params params;
  std::vector<std::optional<double>> cells;  // parallel to requested quantities
  RowStatus status = RowStatus::ok;
};

// Physics-module errors become status flags, never exceptions.
ResultRow run_point(const Params& p, const std::vector<Quantity>& quantities);

struct SweepAxis {
  std::string name;  // a Params field: alpha beta g theta phi tau T eta m
  double start = 0.0;
  double stop = 0.0;
  int count = 0;  // >= 2
};

struct SweepSpec {
  std::vector<SweepAxis> axes;  // 1 or 2 entries; row-major emission order
  Params fixed;
  std::vector<Quantity> quantities = all_quantities();
  std::string output_path;  // empty = stdout
  enum class Format { csv, json } format = Format::csv;

  void validate() const;  // UsageError on bad axis names / counts
};

// Evaluates the grid (concurrently; deterministic row order) and emits it.
std::vector<ResultRow> run_sweep(const SweepSpec& spec);

void write_csv(std::ostream& os, const SweepSpec& spec,
               const std::vector<ResultRow>& rows);
void write_json(std::ostream& os, const SweepSpec& spec,
                const std::vector<ResultRow>& rows);

// 12-significant-digit formatting used for every number we print.
std::string format_number(double x);

// Applies "name = value" to a Params field; UsageError on unknown name.
void set_param_field(Params& p, const std::string& name, double value);

}  // namespace opabs

#endif
