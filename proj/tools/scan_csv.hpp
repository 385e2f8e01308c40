#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "pottssos/phase_diagram.hpp"

namespace pottssos {

inline constexpr const char* kScanCsvHeader = "theta,r,D_std,b,n_fixed_points,n_two_cycles,label";

// %.17g: enough digits to round-trip a double.
std::string format_real(double x);

void write_scan_csv(std::ostream& out, const std::vector<PhasePoint>& rows);
// Parses a file produced by write_scan_csv. Throws DomainError on a bad
// header or malformed row.
std::vector<PhasePoint> read_scan_csv(std::istream& in);

}  // namespace pottssos
