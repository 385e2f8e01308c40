#include "scan_csv.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "pottssos/errors.hpp"

namespace pottssos {

std::string format_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_scan_csv(std::ostream& out, const std::vector<PhasePoint>& rows) {
  out << kScanCsvHeader << '\n';
  for (const PhasePoint& p : rows) {
    out << format_real(p.theta) << ',' << format_real(p.r) << ',' << format_real(p.D_std) << ','
        << format_real(p.b) << ',' << p.n_fixed_points << ',' << p.n_two_cycles << ','
        << to_string(p.label) << '\n';
  }
}

std::vector<PhasePoint> read_scan_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kScanCsvHeader) {
    throw DomainError("scan CSV: missing or unexpected header");
  }
  std::vector<PhasePoint> rows;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) cells.push_back(cell);
    if (cells.size() != 7) {
      throw DomainError("scan CSV line " + std::to_string(lineno) + ": expected 7 fields");
    }
    try {
      PhasePoint p;
      p.theta = std::stod(cells[0]);
      p.r = std::stod(cells[1]);
      p.D_std = std::stod(cells[2]);
      p.b = std::stod(cells[3]);
      p.n_fixed_points = std::stoi(cells[4]);
      p.n_two_cycles = std::stoi(cells[5]);
      p.label = phase_label_from_string(cells[6]);
      rows.push_back(p);
    } catch (const std::logic_error&) {
      throw DomainError("scan CSV line " + std::to_string(lineno) + ": malformed field");
    }
  }
  return rows;
}

}  // namespace pottssos
