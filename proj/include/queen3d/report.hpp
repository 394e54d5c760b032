#pragma once

#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "queen3d/spectrum.hpp"
#include "queen3d/version.hpp"

namespace queen3d {

using json = nlohmann::json;

/// One verdict line. Both computed sides are always carried; a bare boolean
/// is never emitted. Sides are null only when a skipped check was never run.
struct CheckEntry {
  std::string name;
  json lhs = nullptr;
  json rhs = nullptr;
  CheckStatus status = CheckStatus::pass;
  std::string relation = "==";
  std::string note;  // optional, e.g. why a check was skipped
};

/// Equality check judged on the json values (1 and 1.0 compare equal).
inline CheckEntry make_check(std::string name, json lhs, json rhs, std::string note = "") {
  CheckEntry c{std::move(name), std::move(lhs), std::move(rhs), CheckStatus::pass, "==",
               std::move(note)};
  c.status = c.lhs == c.rhs ? CheckStatus::pass : CheckStatus::fail;
  return c;
}

/// Threshold check: lhs must not exceed rhs.
inline CheckEntry make_check_le(std::string name, double lhs, double rhs, std::string note = "") {
  CheckEntry c{std::move(name), lhs, rhs, CheckStatus::pass, "<=", std::move(note)};
  c.status = lhs <= rhs ? CheckStatus::pass : CheckStatus::fail;
  return c;
}

inline CheckEntry make_skipped(std::string name, std::string note, json lhs = nullptr,
                               json rhs = nullptr) {
  return {std::move(name), std::move(lhs), std::move(rhs), CheckStatus::skipped, "==",
          std::move(note)};
}

inline CheckEntry from_identity(const IdentityCheck& c, std::string note = "") {
  return {c.name, c.lhs, c.rhs, c.status, "==", std::move(note)};
}

inline json to_json(const CheckEntry& c) {
  json j{{"name", c.name},
         {"lhs", c.lhs},
         {"rhs", c.rhs},
         {"relation", c.relation},
         {"status", to_string(c.status)}};
  j["pass"] = c.status == CheckStatus::skipped ? json(nullptr) : json(c.status == CheckStatus::pass);
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

inline json to_json(const SpectrumTable& t, const std::vector<CheckEntry>& identities = {}) {
  json rows = json::array();
  for (const auto& r : t.rows)
    rows.push_back({{"mu", r.mu}, {"lambda", r.lambda}, {"multiplicity", r.multiplicity}});
  json checks = json::array();
  for (const auto& c : identities) checks.push_back(to_json(c));
  return {{"n", t.n},
          {"regime", to_string(t.regime)},
          {"method", to_string(t.method)},
          {"rows", rows},
          {"identities", checks}};
}

/// Report envelope common to every CLI command. The command echo excludes
/// execution knobs (worker count, output path), so reports are byte-identical
/// across those.
struct Envelope {
  std::string command;
  json results = json::array();
  int passed = 0;
  int failed = 0;
  int skipped = 0;

  void tally(const CheckEntry& c) {
    switch (c.status) {
      case CheckStatus::pass: ++passed; break;
      case CheckStatus::fail: ++failed; break;
      case CheckStatus::skipped: ++skipped; break;
    }
  }
  void tally(const std::vector<CheckEntry>& cs) {
    for (const auto& c : cs) tally(c);
  }

  bool pass() const { return failed == 0; }

  json to_json() const {
    return {{"tool", {{"name", kToolName}, {"version", kToolVersion}}},
            {"command", command},
            {"summary",
             {{"pass", pass()}, {"passed", passed}, {"failed", failed}, {"skipped", skipped}}},
            {"results", results}};
  }
};

inline std::string check_side_text(const json& side) {
  return side.is_null() ? "-" : side.dump();
}

inline void print_check_line(std::ostream& os, const CheckEntry& c) {
  os << "  " << std::left << std::setw(36) << c.name << std::right << std::setw(22)
     << check_side_text(c.lhs) << ' ' << c.relation << ' ' << std::left << std::setw(16)
     << check_side_text(c.rhs) << std::right << " [" << to_string(c.status) << "]";
  if (!c.note.empty()) os << "  (" << c.note << ")";
  os << "\n";
}

inline void print_table_text(std::ostream& os, const SpectrumTable& t,
                             const std::vector<CheckEntry>& identities) {
  os << "n=" << t.n << "  regime=" << to_string(t.regime) << "  method=" << to_string(t.method)
     << "\n";
  os << "  mu  lambda  multiplicity\n";
  for (const auto& r : t.rows)
    os << std::setw(4) << r.mu << std::setw(8) << r.lambda << std::setw(14) << r.multiplicity
       << "\n";
  if (!identities.empty()) {
    os << "identities:\n";
    for (const auto& c : identities) print_check_line(os, c);
  }
}

}  // namespace queen3d
