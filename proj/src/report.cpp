#include "coxos/report.hpp"

#include <sstream>

#include "coxos/rational.hpp"

namespace coxos {

std::string emit_text(const Report& r) {
  std::ostringstream out;
  for (const auto& id : r.identities) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%8.2fs", id.seconds);
    out << (id.pass ? "PASS" : "FAIL") << "  " << id.name << "  " << id.group
        << " L={" << id.l_desc << "}" << buf << "\n";
    for (const auto& d : id.diffs)
      out << "      class " << d.label << ": expected " << d.expected
          << " got " << d.got << "\n";
  }
  out << (r.all_pass() ? "ALL PASS" : "FAILURES PRESENT") << "\n";
  return out.str();
}

std::string emit_machine(const Report& r) {
  std::ostringstream out;
  for (const auto& id : r.identities) {
    out << id.group << "|" << id.l_desc << "|" << id.name << "|"
        << (id.pass ? "PASS" : "FAIL") << "|";
    for (size_t i = 0; i < id.diffs.size(); ++i) {
      if (i) out << ",";
      out << id.diffs[i].label << ":" << id.diffs[i].expected << ":"
          << id.diffs[i].got;
    }
    out << "\n";
  }
  return out.str();
}

Report parse_machine(const std::string& text) {
  Report r;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    IdentityResult id;
    std::vector<std::string> fields;
    size_t start = 0;
    for (int f = 0; f < 4; ++f) {
      size_t bar = line.find('|', start);
      COXOS_CHECK(bar != std::string::npos, "machine report: bad record");
      fields.push_back(line.substr(start, bar - start));
      start = bar + 1;
    }
    fields.push_back(line.substr(start));
    id.group = fields[0];
    id.l_desc = fields[1];
    id.name = fields[2];
    COXOS_CHECK(fields[3] == "PASS" || fields[3] == "FAIL",
                "machine report: bad status");
    id.pass = fields[3] == "PASS";
    if (!fields[4].empty()) {
      std::istringstream ds(fields[4]);
      std::string item;
      while (std::getline(ds, item, ',')) {
        size_t c1 = item.find(':');
        size_t c2 = item.find(':', c1 + 1);
        COXOS_CHECK(c1 != std::string::npos && c2 != std::string::npos,
                    "machine report: bad diff");
        id.diffs.push_back({item.substr(0, c1), item.substr(c1 + 1, c2 - c1 - 1),
                            item.substr(c2 + 1)});
      }
    }
    r.identities.push_back(std::move(id));
  }
  return r;
}

}  // namespace coxos
