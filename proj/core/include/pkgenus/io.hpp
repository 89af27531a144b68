#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pkgenus/diagram.hpp"
#include "pkgenus/energy.hpp"

namespace pkgenus {

/// A diagram as read from or written to a stream, with optional metadata.
struct DiagramRecord {
  Diagram diagram;
  std::optional<int> genus;
  std::optional<int> boundaries;
  std::optional<std::uint64_t> index;
  std::optional<std::uint64_t> seed;
};

/// Arc-list text form: "6 | (1,4)(2,5)(3,6)"; "5 |" when there are no arcs.
std::string format_diagram(const Diagram& d);

/// The text form followed by " # genus=g boundaries=r" when annotated.
std::string format_record(const DiagramRecord& r);

/// Parses one arc-list line. Anything after '#' is read as key=value
/// annotations (genus, boundaries); other keys are ignored. Throws ParseError
/// carrying `line_number`.
DiagramRecord parse_record(std::string_view line, int line_number = 1);
Diagram parse_diagram(std::string_view line, int line_number = 1);

/// Reads every non-blank, non-comment line of `in`.
std::vector<DiagramRecord> read_records(std::istream& in);

/// One-line JSON object {"index","seed","length","arcs","genus"}; keys that
/// are absent in the record are omitted.
std::string to_json(const DiagramRecord& r);
DiagramRecord from_json(std::string_view text, int line_number = 1);

/// Energy parameters from "key = value" lines with keys b, Lhp, Lint, Lmul,
/// Lpk1. Missing keys default to 0; '#' starts a comment. Unknown keys,
/// repeated keys and non-finite values throw ParseError.
EnergyParams parse_params(std::istream& in);
EnergyParams load_params(const std::string& path);
std::string format_params(const EnergyParams& p);

}  // namespace pkgenus
