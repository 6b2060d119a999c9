#pragma once
// JSON document assembly and parsing for reports and plane candidates. All
// numbers travel as decimal strings (integers or "num/den" rationals); no
// floating point appears anywhere in a report.

#include <string>
#include <vector>

#include <gmpxx.h>

#include "spinten/claims.hpp"

namespace spinten {

/// The versioned report document, pretty-printed with two-space indentation
/// and a trailing newline. Byte-identical for identical (config, seed) runs
/// up to the wall_clock_ms fields.
std::string report_to_json(const RunReport& report);

/// The same document with every wall_clock_ms field removed: the
/// reproducibility comparand. Accepts any report text, throws
/// std::invalid_argument on malformed JSON.
std::string strip_wall_clock(const std::string& report_text);

/// Parses a candidate plane: either a bare 6 x 16 array or an object with a
/// "basis" member holding one. Entries are decimal strings ("3", "-2/3") or
/// JSON integers. Throws std::invalid_argument with a specific message on
/// any shape or syntax defect.
std::vector<std::vector<mpq_class>> parse_plane_candidate(const std::string& text);

/// Writes a candidate plane in the canonical {"basis": [[...]]} shape.
std::string plane_candidate_to_json(const std::vector<std::vector<mpq_class>>& basis);

}  // namespace spinten
