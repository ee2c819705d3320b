#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "coxos/verify.hpp"

using namespace coxos;

namespace {

std::pair<Family, int> parse_group_name(const std::string& s) {
  COXOS_CHECK(s.size() >= 2, "group name must look like B5 or E6");
  Family f;
  switch (s[0]) {
    case 'A': case 'a': f = Family::A; break;
    case 'B': case 'b': f = Family::B; break;
    case 'D': case 'd': f = Family::D; break;
    case 'E': case 'e': f = Family::E; break;
    default: fail("unknown family in group name: " + s);
  }
  return {f, std::stoi(s.substr(1))};
}

unsigned parse_l_list(const GroupContext& ctx, std::vector<std::string> toks) {
  const CoxeterDatum& d = ctx.box->datum();
  if (toks.size() == 1 && toks[0] == "S") return ctx.full_mask();
  unsigned mask = 0;
  for (const std::string& t : toks) {
    int gen = -1;
    for (int g = 0; g < d.rank; ++g)
      if (d.gen_labels[g] == t) gen = g;
    COXOS_CHECK(gen >= 0, "unknown generator label: " + t);
    mask |= 1u << gen;
  }
  return mask;
}

int emit_and_exit(const Report& report, const std::string& format) {
  if (format == "machine")
    std::cout << emit_machine(report);
  else
    std::cout << emit_text(report);
  return report.exit_code();
}

std::vector<TableFile> load_tables_for(GroupContext& ctx,
                                       const std::string& dir) {
  std::vector<TableFile> tables;
  std::vector<std::filesystem::path> paths;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.path().extension() == ".tbl") paths.push_back(entry.path());
  std::sort(paths.begin(), paths.end());
  for (const auto& p : paths) {
    auto [fam, rank] = read_group_header(p.string());
    if (fam != ctx.box->datum().family || rank != ctx.box->datum().rank)
      continue;
    // expected-value tables live in the same directory; skip them
    std::ifstream in(p);
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    if (text.find("\nrow ") != std::string::npos || text.rfind("row ", 0) == 0)
      continue;
    tables.push_back(parse_table(p.string(), ctx.box));
  }
  return tables;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact descent-algebra and Orlik-Solomon character checks "
               "for finite Coxeter groups"};
  app.require_subcommand(1);

  std::string group, table_path, tables_dir, rep_word, format = "text";
  std::string emit_table_path;
  std::vector<std::string> l_tokens;
  bool solve = false, long_run = false, oracle = false, top_only = false;
  int jobs = 1;

  CLI::App* vc = app.add_subcommand("verify-c", "check one (W, L) pair");
  vc->add_option("--group", group, "group name, e.g. B5")->required();
  vc->add_option("--L", l_tokens, "generator labels of L (or S)")->required();
  vc->add_option("--table", table_path, "character table file");
  vc->add_flag("--solve", solve, "search for the characters instead");
  vc->add_option("--emit-table", emit_table_path,
                 "write the discovered characters as a table file");
  vc->add_option("--jobs", jobs);
  vc->add_flag("--long", long_run, "full rank-6 sweeps");
  vc->add_flag("--oracle", oracle, "enable dense cross-checks");
  vc->add_option("--format", format)->check(CLI::IsMember({"text", "machine"}));

  CLI::App* va = app.add_subcommand("verify-a", "check a whole group");
  va->add_option("--group", group)->required();
  va->add_option("--tables", tables_dir, "directory of table files");
  va->add_flag("--solve", solve);
  va->add_option("--jobs", jobs);
  va->add_flag("--long", long_run);
  va->add_flag("--oracle", oracle);
  va->add_option("--format", format)->check(CLI::IsMember({"text", "machine"}));

  CLI::App* om = app.add_subcommand("omega", "Orlik-Solomon trace of one element");
  om->add_option("--group", group)->required();
  om->add_option("--rep", rep_word, "word in the generators")->required();
  om->add_flag("--top-only", top_only);
  om->add_option("--jobs", jobs);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    auto [fam, rank] = parse_group_name(group);
    GroupContext ctx(fam, rank);
    VerifyOptions opt{jobs, long_run, oracle};

    if (*vc) {
      unsigned l_mask = parse_l_list(ctx, l_tokens);
      std::optional<TableFile> table;
      if (!table_path.empty()) {
        COXOS_CHECK(!solve, "choose either --table or --solve");
        table = parse_table(table_path, ctx.box);
        COXOS_CHECK(table->l_mask == l_mask,
                    "table L does not match the --L option");
      } else {
        COXOS_CHECK(solve, "need --table or --solve");
      }
      if (!emit_table_path.empty() && solve) {
        auto assigned = solve_assignment(ctx, l_mask);
        COXOS_CHECK(assigned.has_value(), "solver found no assignment");
        TableFile out;
        out.l_mask = l_mask;
        for (const AssignedCharacter& a : *assigned) {
          TableEntry e;
          e.label = a.label;
          e.rep = a.rep;
          for (uint32_t g : a.centralizer->gens)
            e.gen_values.push_back({g, a.phi.value_at_element(g)});
          out.entries.push_back(std::move(e));
        }
        std::ofstream f(emit_table_path);
        f << render_table(out, *ctx.box);
      }
      Report report =
          verify_theorem_c(ctx, l_mask, table ? &*table : nullptr, opt);
      return emit_and_exit(report, format);
    }

    if (*va) {
      std::vector<TableFile> tables;
      if (!tables_dir.empty()) tables = load_tables_for(ctx, tables_dir);
      COXOS_CHECK(!tables.empty() || solve, "need --tables or --solve");
      Report report = verify_theorem_a(ctx, tables, solve, opt);
      return emit_and_exit(report, format);
    }

    if (*om) {
      WordEnv env(ctx.box, ctx.full_mask());
      uint32_t g = env.resolve_product({rep_word});
      NBCStructure& nbc = ctx.nbc(ctx.full_mask());
      Rational total = 0;
      for (int d = top_only ? nbc.top_degree() : 0; d <= nbc.top_degree(); ++d) {
        Rational t = nbc.trace(d, g);
        total += t;
        std::cout << "degree " << d << ": " << t.str() << "\n";
      }
      std::cout << "total: " << total.str() << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
