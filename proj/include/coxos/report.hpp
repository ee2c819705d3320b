#pragma once

#include <string>
#include <vector>

namespace coxos {

struct ClassDiff {
  std::string label;
  std::string expected;
  std::string got;
};

struct IdentityResult {
  std::string group;
  std::string l_desc;  // comma-joined generator labels, or "S"
  std::string name;    // e.g. ThmC-sum, ThmC-omega, ThmA-rho, ThmA-omega
  bool pass = false;
  std::vector<ClassDiff> diffs;
  double seconds = 0;  // shown in text output only
};

struct Report {
  std::vector<IdentityResult> identities;

  bool all_pass() const {
    for (const auto& r : identities)
      if (!r.pass) return false;
    return true;
  }
  int exit_code() const { return all_pass() ? 0 : 1; }
};

/// Human-readable rendering (includes wall-clock times).
std::string emit_text(const Report& r);

/// Machine rendering: one record per identity with fields
/// group|L|identity|status|diffs, diffs as label:expected:got triples.
/// Deterministic across runs and thread counts.
std::string emit_machine(const Report& r);

/// Parses emit_machine output (timings are not part of the format).
Report parse_machine(const std::string& text);

}  // namespace coxos
