#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace rsdca {

enum class RunStatus { ok, diverged, max_epochs };

struct TraceRow {
  int epoch = 0;
  double objective = 0.0;
  std::optional<double> gap;
  std::optional<double> pot_a, pot_b, pot_c;
  double wall_ms = 0.0;
};

// Per-epoch record of a solver run. Epochs are strictly increasing.
struct Trace {
  std::vector<TraceRow> rows;
  RunStatus status = RunStatus::ok;
  int last_finite_epoch = -1;

  void append(TraceRow row);

  // CSV with columns epoch,objective,gap,A,B,C,wall_ms; optional fields are
  // left empty. Floats in %.17g. The timing column can be suppressed for
  // byte-comparable output.
  void write_csv(std::ostream& out, bool include_timing = true) const;
  std::string to_csv(bool include_timing = true) const;
};

Trace read_trace_csv(std::istream& in);

}  // namespace rsdca
