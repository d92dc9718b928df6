#include "rsdca/trace.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace rsdca {

namespace {

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string fmt_opt(const std::optional<double>& x) {
  return x ? fmt(*x) : std::string();
}

}  // namespace

void Trace::append(TraceRow row) {
  if (!rows.empty() && row.epoch <= rows.back().epoch)
    throw std::logic_error("Trace: epochs must be strictly increasing");
  rows.push_back(std::move(row));
}

void Trace::write_csv(std::ostream& out, bool include_timing) const {
  out << "epoch,objective,gap,A,B,C";
  if (include_timing) out << ",wall_ms";
  out << '\n';
  for (const auto& r : rows) {
    out << r.epoch << ',' << fmt(r.objective) << ',' << fmt_opt(r.gap) << ','
        << fmt_opt(r.pot_a) << ',' << fmt_opt(r.pot_b) << ','
        << fmt_opt(r.pot_c);
    if (include_timing) out << ',' << fmt(r.wall_ms);
    out << '\n';
  }
}

std::string Trace::to_csv(bool include_timing) const {
  std::ostringstream out;
  write_csv(out, include_timing);
  return out.str();
}

Trace read_trace_csv(std::istream& in) {
  Trace t;
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("empty trace csv");
  bool has_timing = line.find("wall_ms") != std::string::npos;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string field;
    TraceRow r;
    auto next = [&]() -> std::string {
      if (!std::getline(ls, field, ',')) field.clear();
      return field;
    };
    r.epoch = std::stoi(next());
    r.objective = std::stod(next());
    auto opt = [&]() -> std::optional<double> {
      std::string f = next();
      if (f.empty()) return std::nullopt;
      return std::stod(f);
    };
    r.gap = opt();
    r.pot_a = opt();
    r.pot_b = opt();
    r.pot_c = opt();
    if (has_timing) {
      std::string f = next();
      r.wall_ms = f.empty() ? 0.0 : std::stod(f);
    }
    t.append(std::move(r));
  }
  return t;
}

}  // namespace rsdca
