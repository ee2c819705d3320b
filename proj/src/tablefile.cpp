#include "coxos/tablefile.hpp"

#include <fstream>
#include <sstream>

namespace coxos {

namespace {

[[noreturn]] void parse_fail(const std::string& path, int line,
                             const std::string& msg) {
  fail(path + ":" + std::to_string(line) + ": " + msg);
}

std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  std::string tok;
  while (ss >> tok) {
    if (tok[0] == '#') break;
    out.push_back(tok);
  }
  return out;
}

Family family_from_letter(const std::string& s) {
  if (s == "A") return Family::A;
  if (s == "B") return Family::B;
  if (s == "D") return Family::D;
  if (s == "E") return Family::E;
  fail("unknown family letter: " + s);
}

uint32_t longest_element(const GroupBox& box, unsigned mask) {
  GrpPtr wl;
  uint32_t best = box.identity();
  // the longest element of a standard parabolic is its unique member of
  // maximal length
  std::vector<uint32_t> gens;
  for (int i = 0; i < box.datum().rank; ++i)
    if (mask & (1u << i)) gens.push_back(box.gen(i));
  std::vector<uint8_t> seen(box.size(), 0);
  std::vector<uint32_t> queue{box.identity()};
  seen[box.identity()] = 1;
  for (size_t q = 0; q < queue.size(); ++q)
    for (uint32_t g : gens) {
      uint32_t p = box.mul(queue[q], g);
      if (!seen[p]) {
        seen[p] = 1;
        queue.push_back(p);
      }
      if (box.length(p) > box.length(best)) best = p;
    }
  return best;
}

}  // namespace

WordEnv::WordEnv(BoxPtr b, unsigned l) : box(std::move(b)), l_mask(l) {
  const CoxeterDatum& d = box->datum();
  unsigned smask = (1u << d.rank) - 1;
  names["w0"] = longest_element(*box, smask);
  if (l_mask) names["wL"] = longest_element(*box, l_mask);
  names["r"] = box->serial_of(reflection_for_root(d, d.highest_root()));
}

uint32_t WordEnv::resolve_token(const std::string& token) const {
  auto it = names.find(token);
  if (it != names.end()) return it->second;
  const CoxeterDatum& d = box->datum();
  uint32_t cur = box->identity();
  size_t i = 0;
  while (i < token.size()) {
    if (!isdigit((unsigned char)token[i]))
      fail("cannot resolve word token '" + token + "'");
    std::string label(1, token[i]);
    ++i;
    if (i < token.size() && token[i] == '\'') {
      label += '\'';
      ++i;
    }
    int gen = -1;
    for (int g = 0; g < d.rank; ++g)
      if (d.gen_labels[g] == label) gen = g;
    if (gen < 0) fail("unknown generator '" + label + "' in '" + token + "'");
    cur = box->right_gen(cur, gen);
  }
  return cur;
}

uint32_t WordEnv::resolve_product(const std::vector<std::string>& tokens) const {
  uint32_t cur = box->identity();
  for (const std::string& t : tokens) {
    uint32_t g = resolve_token(t);
    cur = box->mul(cur, g);
  }
  return cur;
}

std::pair<Family, int> read_group_header(const std::string& path) {
  std::ifstream in(path);
  COXOS_CHECK(in.good(), "cannot open table file: " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::vector<std::string> toks = tokenize(line);
    if (toks.empty()) continue;
    if (toks[0] != "group")
      parse_fail(path, lineno, "expected a group line first");
    if (toks.size() != 3)
      parse_fail(path, lineno, "group line needs family and rank");
    return {family_from_letter(toks[1]), std::stoi(toks[2])};
  }
  fail(path + ": missing group line");
}

namespace {

unsigned parse_l_line(const std::string& path, int lineno,
                      const std::vector<std::string>& toks,
                      const CoxeterDatum& d) {
  unsigned mask = 0;
  for (size_t i = 1; i < toks.size(); ++i) {
    int gen = -1;
    for (int g = 0; g < d.rank; ++g)
      if (d.gen_labels[g] == toks[i]) gen = g;
    if (gen < 0) parse_fail(path, lineno, "unknown generator " + toks[i]);
    mask |= 1u << gen;
  }
  if (!mask) parse_fail(path, lineno, "empty L line");
  return mask;
}

}  // namespace

TableFile parse_table(const std::string& path, BoxPtr box) {
  std::ifstream in(path);
  COXOS_CHECK(in.good(), "cannot open table file: " + path);
  const CoxeterDatum& d = box->datum();

  TableFile table;
  table.family = d.family;
  table.rank = d.rank;

  std::unique_ptr<WordEnv> env;
  std::string line;
  int lineno = 0;
  bool saw_group = false;
  while (std::getline(in, line)) {
    ++lineno;
    std::vector<std::string> toks = tokenize(line);
    if (toks.empty()) continue;
    const std::string& key = toks[0];
    if (key == "group") {
      if (toks.size() != 3 || family_from_letter(toks[1]) != d.family ||
          std::stoi(toks[2]) != d.rank)
        parse_fail(path, lineno, "group line does not match " + d.name());
      saw_group = true;
    } else if (key == "L") {
      if (!saw_group) parse_fail(path, lineno, "L before group");
      table.l_mask = parse_l_line(path, lineno, toks, d);
      env = std::make_unique<WordEnv>(box, table.l_mask);
    } else if (key == "let") {
      if (!env) parse_fail(path, lineno, "let before L");
      if (toks.size() < 4 || toks[2] != "=")
        parse_fail(path, lineno, "let syntax: let <name> = <tokens>");
      uint32_t v;
      if (toks[3] == "longest") {
        unsigned mask = 0;
        for (size_t i = 4; i < toks.size(); ++i) {
          int gen = -1;
          for (int g = 0; g < d.rank; ++g)
            if (d.gen_labels[g] == toks[i]) gen = g;
          if (gen < 0) parse_fail(path, lineno, "unknown generator " + toks[i]);
          mask |= 1u << gen;
        }
        v = longest_element(*box, mask);
      } else {
        v = env->resolve_product(
            std::vector<std::string>(toks.begin() + 3, toks.end()));
      }
      env->names[toks[1]] = v;
    } else if (key == "class") {
      if (!env) parse_fail(path, lineno, "class before L");
      if (toks.size() < 4 || toks[2] != "rep")
        parse_fail(path, lineno, "class syntax: class <label> rep <tokens>");
      TableEntry e;
      e.label = toks[1];
      e.line = lineno;
      try {
        e.rep = env->resolve_product(
            std::vector<std::string>(toks.begin() + 3, toks.end()));
      } catch (const std::exception& ex) {
        parse_fail(path, lineno, ex.what());
      }
      if (!is_cuspidal_in(*box, table.l_mask, e.rep))
        parse_fail(path, lineno,
                   "representative of class " + e.label +
                       " is not cuspidal in W_L");
      table.entries.push_back(std::move(e));
    } else if (key == "gen") {
      if (table.entries.empty()) parse_fail(path, lineno, "gen before class");
      auto value_pos = std::find(toks.begin(), toks.end(), "value");
      if (value_pos == toks.end() || value_pos + 2 != toks.end() ||
          value_pos == toks.begin() + 1)
        parse_fail(path, lineno, "gen syntax: gen <tokens> value <literal>");
      std::vector<std::string> word(toks.begin() + 1, value_pos);
      uint32_t g;
      Cyclotomic v;
      try {
        g = env->resolve_product(word);
        v = Cyclotomic::parse(*(value_pos + 1));
      } catch (const std::exception& ex) {
        parse_fail(path, lineno, ex.what());
      }
      table.entries.back().gen_values.push_back({g, v});
      std::string disp;
      for (const std::string& t : word) disp += (disp.empty() ? "" : " ") + t;
      table.entries.back().gen_display.push_back(disp);
    } else {
      parse_fail(path, lineno, "unknown directive '" + key + "'");
    }
  }
  COXOS_CHECK(saw_group, path + ": missing group line");
  COXOS_CHECK(table.l_mask != 0, path + ": missing L line");
  COXOS_CHECK(!table.entries.empty(), path + ": no class entries");
  return table;
}

const std::vector<Cyclotomic>& ExpectedTable::row(const std::string& name) const {
  for (auto& [n, v] : rows)
    if (n == name) return v;
  fail("expected table has no row named " + name);
}

ExpectedTable parse_expected_table(const std::string& path, BoxPtr box) {
  std::ifstream in(path);
  COXOS_CHECK(in.good(), "cannot open expected table: " + path);
  const CoxeterDatum& d = box->datum();
  ExpectedTable t;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::vector<std::string> toks = tokenize(line);
    if (toks.empty()) continue;
    const std::string& key = toks[0];
    if (key == "group") {
      if (toks.size() != 3 || family_from_letter(toks[1]) != d.family ||
          std::stoi(toks[2]) != d.rank)
        parse_fail(path, lineno, "group line does not match " + d.name());
      t.family = d.family;
      t.rank = d.rank;
    } else if (key == "L") {
      if (toks.size() == 2 && toks[1] == "S") {
        t.l_mask = (1u << d.rank) - 1;
        t.l_is_full = true;
      } else {
        t.l_mask = parse_l_line(path, lineno, toks, d);
        t.l_is_full = t.l_mask == (1u << d.rank) - 1;
      }
    } else if (key == "classes") {
      t.class_labels.assign(toks.begin() + 1, toks.end());
    } else if (key == "row") {
      if (toks.size() < 2) parse_fail(path, lineno, "row needs a name");
      std::vector<Cyclotomic> vals;
      for (size_t i = 2; i < toks.size(); ++i) {
        try {
          vals.push_back(Cyclotomic::parse(toks[i]));
        } catch (const std::exception& ex) {
          parse_fail(path, lineno, ex.what());
        }
      }
      if (!t.class_labels.empty() && vals.size() != t.class_labels.size())
        parse_fail(path, lineno, "row length does not match class count");
      t.rows.push_back({toks[1], std::move(vals)});
    } else {
      parse_fail(path, lineno, "unknown directive '" + key + "'");
    }
  }
  COXOS_CHECK(!t.rows.empty(), path + ": no rows");
  return t;
}

int order_of_class_label(const std::string& label) {
  size_t i = 0;
  while (i < label.size() && isdigit((unsigned char)label[i])) ++i;
  COXOS_CHECK(i > 0, "class label without element order: " + label);
  return std::stoi(label.substr(0, i));
}

std::string render_table(const TableFile& table, const GroupBox& box) {
  const CoxeterDatum& d = box.datum();
  std::ostringstream out;
  out << "group " << family_letter(d.family) << " " << d.rank << "\n";
  out << "L";
  for (int g = 0; g < d.rank; ++g)
    if (table.l_mask & (1u << g)) out << " " << d.gen_labels[g];
  out << "\n";
  for (const TableEntry& e : table.entries) {
    out << "class " << e.label << " rep "
        << word_to_string(d, lex_least_word(d, box.element(e.rep))) << "\n";
    for (size_t i = 0; i < e.gen_values.size(); ++i) {
      std::string word =
          i < e.gen_display.size()
              ? e.gen_display[i]
              : word_to_string(
                    d, lex_least_word(d, box.element(e.gen_values[i].first)));
      out << "gen " << word << " value " << e.gen_values[i].second.str()
          << "\n";
    }
  }
  return out.str();
}

}  // namespace coxos
