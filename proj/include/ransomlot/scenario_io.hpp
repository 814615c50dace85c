#pragma once

// Scenario files and CSV output.
//
// Scenario grammar (line oriented, UTF-8, '\n' line endings):
//
//   document := { line '\n' }
//   line     := blank | comment | '[' section ']' | key '=' value
//   comment  := '#' to end of line (allowed after any content)
//   section  := economics | simulation | sweep | mitigation | annualization | defaults
//
// Keys per section:
//   [economics]      ransom, cost.product, cost.access, cost.loader,
//                    p_success, p_pay_given_success
//   [simulation]     trials, seed (integer or {s1, s2, ...}), b0
//   [sweep]          axis.<ransom|cost_total|p_success|p_pay_given_success>
//                      = start:stop:step | {v1, v2, ...}
//   [mitigation]     action.N = Kind(param=value, ...)
//   [annualization]  attacks_per_year, salary_threshold
//   [defaults]       paper = true|false
//
// Numbers are -?digits(.digits)?; integers are digits. Unknown keys and
// sections, duplicates, and malformed lines are errors carrying a 1-based
// line and column.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "ransomlot/breakeven.hpp"
#include "ransomlot/econ.hpp"
#include "ransomlot/errors.hpp"
#include "ransomlot/format.hpp"
#include "ransomlot/mitigation.hpp"
#include "ransomlot/montecarlo.hpp"

namespace ransomlot {

// ---------------------------------------------------------------------------
// Errors

class ScenarioError : public Error {
 public:
  ScenarioError(std::string_view kind, std::size_t line, std::size_t column, std::string key,
                const std::string& message)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + std::string(kind) +
              ": " + message),
        line_(line),
        column_(column),
        key_(std::move(key)) {}

  [[nodiscard]] std::size_t line() const noexcept { return line_; }
  [[nodiscard]] std::size_t column() const noexcept { return column_; }
  /// Offending key, or empty for pure syntax errors.
  [[nodiscard]] const std::string& key() const noexcept { return key_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string key_;
};

class SyntaxError : public ScenarioError {
 public:
  SyntaxError(std::size_t line, std::size_t column, const std::string& message)
      : ScenarioError("SyntaxError", line, column, {}, message) {}
};

class ValidationError : public ScenarioError {
 public:
  ValidationError(std::size_t line, std::size_t column, const std::string& key,
                  const std::string& constraint)
      : ScenarioError("ValidationError", line, column, key, key + ": " + constraint) {}
};

class DuplicateKey : public ScenarioError {
 public:
  DuplicateKey(std::size_t line, std::size_t column, const std::string& key)
      : ScenarioError("DuplicateKey", line, column, key, "duplicate " + key) {}
};

class UnknownKey : public ScenarioError {
 public:
  UnknownKey(std::size_t line, std::size_t column, const std::string& key)
      : ScenarioError("UnknownKey", line, column, key, "unknown " + key) {}
};

// ---------------------------------------------------------------------------
// Scenario model

struct SimulationSpec {
  std::uint64_t trials = 1000;
  std::vector<std::uint64_t> seeds{kDefaultSeed};
  Money b0;

  friend bool operator==(const SimulationSpec&, const SimulationSpec&) = default;
};

struct ScenarioFile {
  AttackEconomics economics;
  bool paper_defaults = false;
  std::optional<SimulationSpec> simulation;
  std::optional<std::vector<SweepAxis>> sweep;
  std::optional<std::vector<MitigationAction>> mitigation;
  std::optional<Annualization> annualization;

  [[nodiscard]] SweepGrid sweep_grid() const {
    return SweepGrid(economics, sweep.value_or(std::vector<SweepAxis>{}));
  }

  friend bool operator==(const ScenarioFile&, const ScenarioFile&) = default;
};

inline constexpr double kPaperPSuccess = 0.54;
inline constexpr double kPaperPPayGivenSuccess = 0.56;
inline constexpr std::size_t kMaxRangeValues = 10'000'000;

namespace detail {

struct Entry {
  std::string key;
  std::string value;
  std::size_t line;
  std::size_t key_col;
  std::size_t value_col;
};

struct Section {
  std::size_t line = 0;
  std::size_t col = 0;
  std::vector<Entry> entries;
};

inline bool is_space(char c) { return c == ' ' || c == '\t'; }
inline bool is_digit(char c) { return c >= '0' && c <= '9'; }
inline bool is_key_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || is_digit(c) || c == '_' || c == '.';
}

// Strips spaces; `offset` advances by the number of leading characters removed.
inline std::string_view trim(std::string_view s, std::size_t& offset) {
  std::size_t b = 0;
  while (b < s.size() && is_space(s[b])) {
    ++b;
  }
  std::size_t e = s.size();
  while (e > b && is_space(s[e - 1])) {
    --e;
  }
  offset += b;
  return s.substr(b, e - b);
}

inline bool is_number(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && s[i] == '-') {
    ++i;
  }
  const std::size_t int_start = i;
  while (i < s.size() && is_digit(s[i])) {
    ++i;
  }
  if (i == int_start) {
    return false;
  }
  if (i < s.size() && s[i] == '.') {
    ++i;
    const std::size_t frac_start = i;
    while (i < s.size() && is_digit(s[i])) {
      ++i;
    }
    if (i == frac_start) {
      return false;
    }
  }
  return i == s.size();
}

inline double parse_number(std::string_view s, std::size_t line, std::size_t col,
                           const std::string& key) {
  if (!is_number(s)) {
    throw SyntaxError(line, col, "expected a decimal number for " + key + ", got '" +
                                     std::string(s) + "'");
  }
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v)) {
    throw ValidationError(line, col, key, "number out of range");
  }
  return v;
}

inline std::uint64_t parse_integer(std::string_view s, std::size_t line, std::size_t col,
                                   const std::string& key) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), is_digit)) {
    throw SyntaxError(line, col, "expected a nonnegative integer for " + key + ", got '" +
                                     std::string(s) + "'");
  }
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ValidationError(line, col, key, "integer does not fit in 64 bits");
  }
  return v;
}

struct ListItem {
  std::string_view text;
  std::size_t col;
};

// Splits "{a, b, c}" into items with their columns.
inline std::vector<ListItem> split_list(std::string_view s, std::size_t line, std::size_t col,
                                        const std::string& key) {
  if (s.size() < 2 || s.front() != '{' || s.back() != '}') {
    throw SyntaxError(line, col, "malformed list for " + key);
  }
  std::vector<ListItem> items;
  std::string_view body = s.substr(1, s.size() - 2);
  std::size_t body_col = col + 1;
  std::size_t probe = 0;
  if (trim(body, probe).empty()) {
    return items;
  }
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = body.find(',', start);
    std::string_view raw = body.substr(start, comma == std::string_view::npos ? body.npos : comma - start);
    std::size_t item_col = body_col + start;
    std::string_view item = trim(raw, item_col);
    if (item.empty()) {
      throw SyntaxError(line, item_col, "empty list element in " + key);
    }
    items.push_back({item, item_col});
    if (comma == std::string_view::npos) {
      break;
    }
    start = comma + 1;
  }
  return items;
}

inline void check_value(SweepParameter p, double v, std::size_t line, std::size_t col,
                        const std::string& key) {
  if (is_probability(p)) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw ValidationError(line, col, key, "probability out of range [0,1]");
    }
  } else if (v < 0.0) {
    throw ValidationError(line, col, key, "must be >= 0");
  }
}

inline std::vector<double> parse_axis(SweepParameter p, const Entry& e) {
  const std::string_view v = e.value;
  std::vector<double> values;
  if (!v.empty() && v.front() == '{') {
    for (const auto& item : split_list(v, e.line, e.value_col, e.key)) {
      const double x = parse_number(item.text, e.line, item.col, e.key);
      check_value(p, x, e.line, item.col, e.key);
      values.push_back(x);
    }
    if (values.empty()) {
      throw ValidationError(e.line, e.value_col, e.key, "axis has no values");
    }
    return values;
  }

  // start:stop:step, stop inclusive.
  const std::size_t c1 = v.find(':');
  const std::size_t c2 = c1 == v.npos ? v.npos : v.find(':', c1 + 1);
  if (c1 == v.npos || c2 == v.npos || v.find(':', c2 + 1) != v.npos) {
    throw SyntaxError(e.line, e.value_col, "expected start:stop:step or {v1, ...} for " + e.key);
  }
  std::size_t cols[3] = {e.value_col, e.value_col + c1 + 1, e.value_col + c2 + 1};
  std::string_view parts[3] = {v.substr(0, c1), v.substr(c1 + 1, c2 - c1 - 1), v.substr(c2 + 1)};
  double nums[3];
  for (int i = 0; i < 3; ++i) {
    std::string_view t = trim(parts[i], cols[i]);
    nums[i] = parse_number(t, e.line, cols[i], e.key);
  }
  const double start = nums[0];
  const double stop = nums[1];
  const double step = nums[2];
  if (!(step > 0.0)) {
    throw ValidationError(e.line, cols[2], e.key, "range step must be > 0");
  }
  if (stop < start) {
    throw ValidationError(e.line, cols[1], e.key, "range stop must be >= start");
  }
  const double span = std::floor((stop - start) / step + 1e-9);
  if (span + 1.0 > static_cast<double>(kMaxRangeValues)) {
    throw ValidationError(e.line, e.value_col, e.key, "range has too many values");
  }
  const auto n = static_cast<std::size_t>(span) + 1;
  values.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    double x = start + static_cast<double>(i) * step;
    if (x > stop) {
      x = stop;  // absorb rounding on the last point
    }
    values.push_back(x);
  }
  check_value(p, values.front(), e.line, cols[0], e.key);
  check_value(p, values.back(), e.line, cols[1], e.key);
  return values;
}

struct ActionParam {
  std::string name;
  double value;
  std::size_t col;
};

inline MitigationAction parse_action(const Entry& e) {
  const std::string_view v = e.value;
  const std::size_t open = v.find('(');
  if (open == v.npos || v.back() != ')') {
    throw SyntaxError(e.line, e.value_col, "expected Kind(param=value, ...) for " + e.key);
  }
  std::size_t kind_col = e.value_col;
  const std::string kind(trim(v.substr(0, open), kind_col));

  std::vector<ActionParam> params;
  std::string_view body = v.substr(open + 1, v.size() - open - 2);
  std::size_t probe = 0;
  if (!trim(body, probe).empty()) {
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = body.find(',', start);
      std::string_view raw = body.substr(start, comma == body.npos ? body.npos : comma - start);
      std::size_t col = e.value_col + open + 1 + start;
      std::string_view item = trim(raw, col);
      const std::size_t eq = item.find('=');
      if (eq == item.npos) {
        throw SyntaxError(e.line, col, "expected param=value in " + e.key);
      }
      std::size_t name_col = col;
      std::string_view name = trim(item.substr(0, eq), name_col);
      std::size_t val_col = col + eq + 1;
      std::string_view val = trim(item.substr(eq + 1), val_col);
      if (name.empty() || !std::all_of(name.begin(), name.end(), is_key_char)) {
        throw SyntaxError(e.line, name_col, "bad parameter name in " + e.key);
      }
      params.push_back({std::string(name), parse_number(val, e.line, val_col, e.key), name_col});
      if (comma == body.npos) {
        break;
      }
      start = comma + 1;
    }
  }

  struct Slot {
    const char* short_name;
    const char* long_name;
  };
  std::vector<Slot> slots;
  if (kind == "AttackSuccessReduction") {
    slots = {{"r", "reduction"}};
  } else if (kind == "DecrypterAvailability") {
    slots = {{"d", "coverage"}};
  } else if (kind == "BackupAdoption") {
    slots = {{"a", "adoption"}, {"e", "effectiveness"}};
  } else if (kind == "CyberInsurance") {
    slots = {};
  } else {
    throw UnknownKey(e.line, kind_col, "action kind " + kind);
  }

  std::vector<std::optional<double>> got(slots.size());
  for (const auto& prm : params) {
    auto it = std::find_if(slots.begin(), slots.end(), [&](const Slot& s) {
      return prm.name == s.short_name || prm.name == s.long_name;
    });
    if (it == slots.end()) {
      throw UnknownKey(e.line, prm.col, kind + " parameter " + prm.name);
    }
    auto& slot = got[static_cast<std::size_t>(it - slots.begin())];
    if (slot) {
      throw DuplicateKey(e.line, prm.col, kind + " parameter " + prm.name);
    }
    if (!(prm.value >= 0.0 && prm.value <= 1.0)) {
      throw ValidationError(e.line, prm.col, e.key + "." + prm.name, "must be within [0,1]");
    }
    slot = prm.value;
  }
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (!got[i]) {
      throw ValidationError(e.line, e.value_col, e.key,
                            kind + " requires parameter " + slots[i].short_name);
    }
  }

  if (kind == "AttackSuccessReduction") {
    return AttackSuccessReduction{Probability(*got[0])};
  }
  if (kind == "DecrypterAvailability") {
    return DecrypterAvailability{Probability(*got[0])};
  }
  if (kind == "BackupAdoption") {
    return BackupAdoption{Probability(*got[0]), Probability(*got[1])};
  }
  return CyberInsurance{};
}

// Checked lookup over one section's entries.
class SectionReader {
 public:
  SectionReader(const Section& s, std::set<std::string> allowed) : s_(s) {
    for (const auto& e : s.entries) {
      if (!allowed.count(e.key)) {
        throw UnknownKey(e.line, e.key_col, "key " + e.key);
      }
    }
  }

  [[nodiscard]] const Entry* find(std::string_view key) const {
    for (const auto& e : s_.entries) {
      if (e.key == key) {
        return &e;
      }
    }
    return nullptr;
  }

  [[nodiscard]] const Entry& require(const std::string& key) const {
    if (const Entry* e = find(key)) {
      return *e;
    }
    throw ValidationError(s_.line, s_.col, key, "required key is missing");
  }

  [[nodiscard]] double number(const Entry& e) const {
    return parse_number(e.value, e.line, e.value_col, e.key);
  }

  [[nodiscard]] double nonnegative(const Entry& e) const {
    const double v = number(e);
    if (v < 0.0) {
      throw ValidationError(e.line, e.value_col, e.key, "must be >= 0");
    }
    return v;
  }

  [[nodiscard]] Probability probability(const Entry& e) const {
    const double v = number(e);
    if (!(v >= 0.0 && v <= 1.0)) {
      throw ValidationError(e.line, e.value_col, e.key, "probability out of range [0,1]");
    }
    return Probability(v);
  }

 private:
  const Section& s_;
};

}  // namespace detail

/// Parses and validates a scenario document.
inline ScenarioFile parse_scenario(std::string_view text) {
  using detail::Entry;
  using detail::Section;
  static const std::set<std::string> kSections = {"economics", "simulation", "sweep",
                                                  "mitigation", "annualization", "defaults"};

  std::map<std::string, Section> sections;
  Section* current = nullptr;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view raw = text.substr(pos, nl == text.npos ? text.npos : nl - pos);
    pos = nl == text.npos ? text.size() + 1 : nl + 1;
    ++line_no;

    if (!raw.empty() && raw.back() == '\r') {
      raw.remove_suffix(1);
    }
    if (const std::size_t hash = raw.find('#'); hash != raw.npos) {
      raw = raw.substr(0, hash);
    }
    std::size_t col = 1;
    std::string_view line = detail::trim(raw, col);
    if (line.empty()) {
      continue;
    }

    if (line.front() == '[') {
      if (line.back() != ']') {
        throw SyntaxError(line_no, col, "unterminated section header");
      }
      std::size_t name_col = col + 1;
      const std::string name(detail::trim(line.substr(1, line.size() - 2), name_col));
      if (!kSections.count(name)) {
        throw UnknownKey(line_no, name_col, "section [" + name + "]");
      }
      if (sections.count(name)) {
        throw DuplicateKey(line_no, col, "section [" + name + "]");
      }
      current = &sections[name];
      current->line = line_no;
      current->col = col;
      continue;
    }

    const std::size_t eq = line.find('=');
    if (eq == line.npos) {
      throw SyntaxError(line_no, col, "expected 'key = value' or '[section]'");
    }
    std::size_t key_col = col;
    const std::string_view key = detail::trim(line.substr(0, eq), key_col);
    std::size_t value_col = col + eq + 1;
    const std::string_view value = detail::trim(line.substr(eq + 1), value_col);
    if (key.empty() || !std::all_of(key.begin(), key.end(), detail::is_key_char)) {
      throw SyntaxError(line_no, key_col, "malformed key");
    }
    if (value.empty()) {
      throw SyntaxError(line_no, value_col, "missing value for " + std::string(key));
    }
    if (current == nullptr) {
      throw SyntaxError(line_no, col, "entry outside of any section");
    }
    for (const auto& e : current->entries) {
      if (e.key == key) {
        throw DuplicateKey(line_no, key_col, "key " + std::string(key));
      }
    }
    current->entries.push_back(
        Entry{std::string(key), std::string(value), line_no, key_col, value_col});
  }

  bool paper_defaults = false;
  if (auto it = sections.find("defaults"); it != sections.end()) {
    detail::SectionReader r(it->second, {"paper"});
    if (const Entry* e = r.find("paper")) {
      if (e->value == "true") {
        paper_defaults = true;
      } else if (e->value != "false") {
        throw SyntaxError(e->line, e->value_col, "expected true or false for paper");
      }
    }
  }

  auto econ_it = sections.find("economics");
  if (econ_it == sections.end()) {
    throw ValidationError(1, 1, "economics", "required section [economics] is missing");
  }
  detail::SectionReader er(econ_it->second, {"ransom", "cost.product", "cost.access",
                                             "cost.loader", "p_success", "p_pay_given_success"});
  const Money ransom(er.nonnegative(er.require("ransom")));
  const CostModel cost(Money(er.nonnegative(er.require("cost.product"))),
                       Money(er.nonnegative(er.require("cost.access"))),
                       Money(er.nonnegative(er.require("cost.loader"))));
  auto prob_or_default = [&](const char* key, double fallback) {
    if (paper_defaults) {
      const Entry* e = er.find(key);
      return e ? er.probability(*e) : Probability(fallback);
    }
    return er.probability(er.require(key));
  };
  const Probability p_success = prob_or_default("p_success", kPaperPSuccess);
  const Probability p_pay = prob_or_default("p_pay_given_success", kPaperPPayGivenSuccess);

  ScenarioFile out{AttackEconomics(ransom, cost, p_success, p_pay), paper_defaults,
                   std::nullopt, std::nullopt, std::nullopt, std::nullopt};

  if (auto it = sections.find("simulation"); it != sections.end()) {
    detail::SectionReader r(it->second, {"trials", "seed", "b0"});
    SimulationSpec sim;
    if (const Entry* e = r.find("trials")) {
      sim.trials = detail::parse_integer(e->value, e->line, e->value_col, e->key);
      if (sim.trials == 0) {
        throw ValidationError(e->line, e->value_col, e->key, "must be >= 1");
      }
    }
    if (const Entry* e = r.find("seed")) {
      sim.seeds.clear();
      if (e->value.front() == '{') {
        for (const auto& item : detail::split_list(e->value, e->line, e->value_col, e->key)) {
          sim.seeds.push_back(detail::parse_integer(item.text, e->line, item.col, e->key));
        }
        if (sim.seeds.empty()) {
          throw ValidationError(e->line, e->value_col, e->key, "seed list is empty");
        }
      } else {
        sim.seeds.push_back(detail::parse_integer(e->value, e->line, e->value_col, e->key));
      }
    }
    if (const Entry* e = r.find("b0")) {
      sim.b0 = Money(r.number(*e));
    }
    out.simulation = sim;
  }

  if (auto it = sections.find("sweep"); it != sections.end()) {
    const Section& s = it->second;
    std::vector<SweepAxis> axes;
    for (const auto& e : s.entries) {
      SweepParameter p{};
      if (e.key.rfind("axis.", 0) != 0 || !parse_sweep_parameter(e.key.substr(5), p)) {
        throw UnknownKey(e.line, e.key_col, "key " + e.key);
      }
      axes.push_back({p, detail::parse_axis(p, e)});
    }
    out.sweep = std::move(axes);
  }

  if (auto it = sections.find("mitigation"); it != sections.end()) {
    std::vector<std::pair<std::uint64_t, MitigationAction>> indexed;
    for (const auto& e : it->second.entries) {
      if (e.key.rfind("action.", 0) != 0) {
        throw UnknownKey(e.line, e.key_col, "key " + e.key);
      }
      const std::string idx = e.key.substr(7);
      if (idx.empty() || !std::all_of(idx.begin(), idx.end(), detail::is_digit)) {
        throw UnknownKey(e.line, e.key_col, "key " + e.key);
      }
      const std::uint64_t n = detail::parse_integer(idx, e.line, e.key_col + 7, e.key);
      for (const auto& [m, _] : indexed) {
        if (m == n) {
          throw DuplicateKey(e.line, e.key_col, "action index " + idx);
        }
      }
      indexed.emplace_back(n, detail::parse_action(e));
    }
    std::stable_sort(indexed.begin(), indexed.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<MitigationAction> actions;
    for (auto& [_, a] : indexed) {
      actions.push_back(a);
    }
    out.mitigation = std::move(actions);
  }

  if (auto it = sections.find("annualization"); it != sections.end()) {
    detail::SectionReader r(it->second, {"attacks_per_year", "salary_threshold"});
    const Entry& apy = r.require("attacks_per_year");
    Annualization a;
    a.attacks_per_year = detail::parse_integer(apy.value, apy.line, apy.value_col, apy.key);
    a.salary_threshold = Money(r.nonnegative(r.require("salary_threshold")));
    out.annualization = a;
  }

  return out;
}

/// Renders a scenario so that parse_scenario(write_scenario(s)) == s.
inline std::string write_scenario(const ScenarioFile& s) {
  std::ostringstream os;
  if (s.paper_defaults) {
    os << "[defaults]\npaper = true\n\n";
  }
  const auto& e = s.economics;
  os << "[economics]\n"
     << "ransom = " << format_exact(e.ransom().amount()) << '\n'
     << "cost.product = " << format_exact(e.cost().product().amount()) << '\n'
     << "cost.access = " << format_exact(e.cost().initial_access().amount()) << '\n'
     << "cost.loader = " << format_exact(e.cost().loader().amount()) << '\n'
     << "p_success = " << format_exact(e.p_success().value()) << '\n'
     << "p_pay_given_success = " << format_exact(e.p_pay_given_success().value()) << '\n';

  if (s.simulation) {
    const auto& sim = *s.simulation;
    os << "\n[simulation]\ntrials = " << sim.trials << "\nseed = ";
    if (sim.seeds.size() == 1) {
      os << sim.seeds.front();
    } else {
      os << '{';
      for (std::size_t i = 0; i < sim.seeds.size(); ++i) {
        os << (i ? ", " : "") << sim.seeds[i];
      }
      os << '}';
    }
    os << "\nb0 = " << format_exact(sim.b0.amount()) << '\n';
  }

  if (s.sweep) {
    os << "\n[sweep]\n";
    for (const auto& axis : *s.sweep) {
      os << "axis." << to_string(axis.parameter) << " = {";
      for (std::size_t i = 0; i < axis.values.size(); ++i) {
        os << (i ? ", " : "") << format_exact(axis.values[i]);
      }
      os << "}\n";
    }
  }

  if (s.mitigation) {
    os << "\n[mitigation]\n";
    for (std::size_t i = 0; i < s.mitigation->size(); ++i) {
      const auto& a = (*s.mitigation)[i];
      os << "action." << (i + 1) << " = " << kind_name(a) << '(';
      if (const auto* r = std::get_if<AttackSuccessReduction>(&a)) {
        os << "r=" << format_exact(r->reduction.value());
      } else if (const auto* d = std::get_if<DecrypterAvailability>(&a)) {
        os << "d=" << format_exact(d->coverage.value());
      } else if (const auto* b = std::get_if<BackupAdoption>(&a)) {
        os << "a=" << format_exact(b->adoption.value())
           << ", e=" << format_exact(b->effectiveness.value());
      }
      os << ")\n";
    }
  }

  if (s.annualization) {
    os << "\n[annualization]\nattacks_per_year = " << s.annualization->attacks_per_year
       << "\nsalary_threshold = " << format_exact(s.annualization->salary_threshold.amount())
       << '\n';
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// CSV

/// `trial,outcome,profit,bank`, one row per trial, money at two decimals.
inline std::string write_trace_csv(const TrialTrace& trace) {
  std::string out = "trial,outcome,profit,bank\n";
  const Money win = per_trial_profit(true, trace.econ);
  const Money loss = per_trial_profit(false, trace.econ);
  const std::string win_s = format_money(win);
  const std::string loss_s = format_money(loss);
  for (std::size_t i = 0; i < trace.trials(); ++i) {
    const bool won = trace.outcomes[i];
    out += std::to_string(i + 1);
    out += won ? ",1," : ",0,";
    out += won ? win_s : loss_s;
    out += ',';
    out += format_money(trace.bank_series[i]);
    out += '\n';
  }
  return out;
}

inline std::string format_axis_value(SweepParameter p, double v) {
  return is_probability(p) ? format_probability(v) : format_fixed(v, 2);
}

/// Swept parameter columns then `expected_value`; probabilities at six
/// decimals, money at two.
inline std::string write_sweep_csv(const SweepResult& result) {
  std::string out;
  for (auto p : result.axes) {
    out += to_string(p);
    out += ',';
  }
  out += "expected_value\n";
  for (const auto& row : result.rows) {
    for (std::size_t i = 0; i < result.axes.size(); ++i) {
      out += format_axis_value(result.axes[i], row.assignment[i]);
      out += ',';
    }
    out += format_money(row.expected_value);
    out += '\n';
  }
  return out;
}

}  // namespace ransomlot
