#pragma once

#include "coxos/charlib.hpp"

namespace coxos {

/// One cuspidal-class entry of a character table file: a representative
/// word and the character values on a generating set of its centralizer.
struct TableEntry {
  std::string label;
  int line = 0;
  uint32_t rep = 0;
  std::vector<std::pair<uint32_t, Cyclotomic>> gen_values;
  std::vector<std::string> gen_display;
};

struct TableFile {
  Family family = Family::A;
  int rank = 0;
  unsigned l_mask = 0;
  std::vector<TableEntry> entries;
};

/// Group header (family and rank) of a table file, for constructing the box
/// before the full parse.
std::pair<Family, int> read_group_header(const std::string& path);

/// Parses and validates a character table file against an enumerated group:
/// every word must resolve, every value must parse, every representative
/// must be cuspidal in W_L, and every entry's values must extend to a linear
/// character of the centralizer (checked later, at verification time, which
/// also needs the centralizer).
TableFile parse_table(const std::string& path, BoxPtr box);

/// Expected-values table: class labels and named rows of cyclotomic values,
/// used to pin published character tables as data.
struct ExpectedTable {
  Family family = Family::A;
  int rank = 0;
  unsigned l_mask = 0;
  bool l_is_full = false;
  std::vector<std::string> class_labels;
  std::vector<std::pair<std::string, std::vector<Cyclotomic>>> rows;

  const std::vector<Cyclotomic>& row(const std::string& name) const;
};

ExpectedTable parse_expected_table(const std::string& path, BoxPtr box);

/// Element orders encoded in class labels like "12b" -> 12.
int order_of_class_label(const std::string& label);

/// Shared word-resolution environment for table files and the CLI: tokens
/// are generator words ("43212345", "1'234"), the builtins w0 / wL / r, or
/// let-bound names; `longest <gens>` builds the longest element of a
/// standard parabolic.
struct WordEnv {
  BoxPtr box;
  unsigned l_mask = 0;
  std::map<std::string, uint32_t> names;

  explicit WordEnv(BoxPtr b, unsigned l = 0);
  uint32_t resolve_token(const std::string& token) const;
  uint32_t resolve_product(const std::vector<std::string>& tokens) const;
};

/// Serializes solver output in the table grammar.
std::string render_table(const TableFile& table, const GroupBox& box);

}  // namespace coxos
