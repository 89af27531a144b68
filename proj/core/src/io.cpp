#include "pkgenus/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "pkgenus/errors.hpp"

namespace pkgenus {

namespace {

// Cursor over one line with whitespace skipping.
class Scanner {
 public:
  Scanner(std::string_view text, int line) : text_(text), line_(line) {}

  void skip_space() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r')) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  int integer() {
    skip_space();
    int value = 0;
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr == first) fail("expected an integer");
    pos_ += static_cast<std::size_t>(ptr - first);
    return value;
  }
  std::string_view rest() const { return text_.substr(pos_); }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at column " + std::to_string(pos_ + 1), line_);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  int line_;
};

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

int annotation_value(std::string_view value, int line) {
  int out = 0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw ParseError("bad annotation value '" + std::string(value) + "'", line);
  }
  return out;
}

Diagram make_diagram(int length, std::vector<Arc> arcs, int line) {
  try {
    return Diagram(length, std::move(arcs));
  } catch (const StructuralError& e) {
    throw ParseError(e.what(), line);
  }
}

}  // namespace

std::string format_diagram(const Diagram& d) {
  std::string out = std::to_string(d.length()) + " |";
  if (d.arc_count() > 0) out += ' ';
  for (const Arc& a : d.arcs()) {
    out += '(';
    out += std::to_string(a.left);
    out += ',';
    out += std::to_string(a.right);
    out += ')';
  }
  return out;
}

std::string format_record(const DiagramRecord& r) {
  std::string out = format_diagram(r.diagram);
  if (r.genus || r.boundaries) {
    out += " #";
    if (r.genus) out += " genus=" + std::to_string(*r.genus);
    if (r.boundaries) out += " boundaries=" + std::to_string(*r.boundaries);
  }
  return out;
}

DiagramRecord parse_record(std::string_view line, int line_number) {
  std::string_view body = line;
  std::string_view notes;
  if (const auto hash = line.find('#'); hash != std::string_view::npos) {
    body = line.substr(0, hash);
    notes = line.substr(hash + 1);
  }
  Scanner scan(body, line_number);
  const int length = scan.integer();
  if (length < 0) scan.fail("negative length");
  scan.expect('|');
  std::vector<Arc> arcs;
  while (!scan.done()) {
    scan.expect('(');
    const int left = scan.integer();
    scan.expect(',');
    const int right = scan.integer();
    scan.expect(')');
    arcs.push_back(Arc{left, right});
  }
  DiagramRecord record{make_diagram(length, std::move(arcs), line_number), {}, {}, {}, {}};

  std::istringstream words{std::string(notes)};
  std::string word;
  while (words >> word) {
    const auto eq = word.find('=');
    if (eq == std::string::npos) continue;
    const std::string_view key = std::string_view(word).substr(0, eq);
    const std::string_view value = std::string_view(word).substr(eq + 1);
    if (key == "genus") record.genus = annotation_value(value, line_number);
    if (key == "boundaries") record.boundaries = annotation_value(value, line_number);
  }
  return record;
}

Diagram parse_diagram(std::string_view line, int line_number) {
  return parse_record(line, line_number).diagram;
}

std::vector<DiagramRecord> read_records(std::istream& in) {
  std::vector<DiagramRecord> out;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const std::string_view t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    if (t.front() == '{') {
      out.push_back(from_json(t, number));
    } else {
      out.push_back(parse_record(t, number));
    }
  }
  return out;
}

std::string to_json(const DiagramRecord& r) {
  nlohmann::ordered_json j;
  if (r.index) j["index"] = *r.index;
  if (r.seed) j["seed"] = *r.seed;
  j["length"] = r.diagram.length();
  j["arcs"] = nlohmann::json::array();
  for (const Arc& a : r.diagram.arcs()) j["arcs"].push_back({a.left, a.right});
  if (r.genus) j["genus"] = *r.genus;
  if (r.boundaries) j["boundaries"] = *r.boundaries;
  return j.dump();
}

DiagramRecord from_json(std::string_view text, int line_number) {
  try {
    const auto j = nlohmann::json::parse(text);
    std::vector<Arc> arcs;
    for (const auto& pair : j.at("arcs")) {
      if (pair.size() != 2) throw ParseError("arc must have two endpoints", line_number);
      arcs.push_back(Arc{pair.at(0).get<int>(), pair.at(1).get<int>()});
    }
    DiagramRecord r{make_diagram(j.at("length").get<int>(), std::move(arcs), line_number), {}, {}, {}, {}};
    if (j.contains("genus")) r.genus = j["genus"].get<int>();
    if (j.contains("boundaries")) r.boundaries = j["boundaries"].get<int>();
    if (j.contains("index")) r.index = j["index"].get<std::uint64_t>();
    if (j.contains("seed")) r.seed = j["seed"].get<std::uint64_t>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what(), line_number);
  }
}

EnergyParams parse_params(std::istream& in) {
  EnergyParams p;
  const std::map<std::string, double EnergyParams::*, std::less<>> fields{
      {"b", &EnergyParams::arc},
      {"Lhp", &EnergyParams::hairpin},
      {"Lint", &EnergyParams::interior},
      {"Lmul", &EnergyParams::multi},
      {"Lpk1", &EnergyParams::pseudoknot},
  };
  std::map<std::string, int, std::less<>> seen;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::string_view t = line;
    if (const auto hash = t.find('#'); hash != std::string_view::npos) t = t.substr(0, hash);
    t = trim(t);
    if (t.empty()) continue;
    const auto eq = t.find('=');
    if (eq == std::string_view::npos) throw ParseError("expected key = value", number);
    const std::string_view key = trim(t.substr(0, eq));
    const std::string value(trim(t.substr(eq + 1)));
    const auto field = fields.find(key);
    if (field == fields.end()) throw ParseError("unknown parameter '" + std::string(key) + "'", number);
    if (const auto prev = seen.find(key); prev != seen.end()) {
      throw ParseError("parameter '" + std::string(key) + "' repeated (first on line " +
                           std::to_string(prev->second) + ")",
                       number);
    }
    seen.emplace(std::string(key), number);
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(value, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != value.size() || !std::isfinite(v)) {
      throw ParseError("bad value '" + value + "' for " + std::string(key), number);
    }
    p.*(field->second) = v;
  }
  return p;
}

EnergyParams load_params(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open parameter file '" + path + "'", 0);
  return parse_params(in);
}

std::string format_params(const EnergyParams& p) {
  std::ostringstream out;
  out.precision(17);
  out << "b = " << p.arc << "\nLhp = " << p.hairpin << "\nLint = " << p.interior << "\nLmul = " << p.multi
      << "\nLpk1 = " << p.pseudoknot << "\n";
  return out.str();
}

}  // namespace pkgenus
