#pragma once

#include <optional>

#include "coxos/charlib.hpp"
#include "coxos/descent.hpp"
#include "coxos/osalg.hpp"
#include "coxos/report.hpp"
#include "coxos/tablefile.hpp"

namespace coxos {

struct VerifyOptions {
  int jobs = 1;
  bool long_run = false;  // full character sweeps on the rank-6 groups
  bool oracle = false;    // enable the dense cross-checks where feasible
};

/// Shared per-group state: the enumerated group and caches for parabolics,
/// normalizers, descent matrices and NBC structures keyed by L.
class GroupContext {
public:
  GroupContext(Family family, int rank);

  BoxPtr box;
  GrpPtr whole;

  unsigned full_mask() const { return (1u << box->datum().rank) - 1; }
  GrpPtr parabolic(unsigned l_mask);
  GrpPtr normalizer(unsigned l_mask);
  const DescentMatrix& dmatrix(unsigned l_mask);
  NBCStructure& nbc(unsigned l_mask);
  std::string l_desc(unsigned l_mask) const;

private:
  std::map<unsigned, GrpPtr> parabolics_;
  std::map<unsigned, GrpPtr> normalizers_;
  std::map<unsigned, DescentMatrix> dmatrices_;
  std::map<unsigned, std::unique_ptr<NBCStructure>> nbcs_;
};

/// The extension of the top component character of CW_L to N_W(W_L).
ClassFunction rho_tilde_character(GroupContext& ctx, unsigned l_mask);

/// One linear character per cuspidal class of W_L, living on the
/// centralizer taken inside the whole group.
struct AssignedCharacter {
  std::string label;
  uint32_t rep = 0;
  GrpPtr centralizer;
  ClassFunction phi;
};

/// Searches for characters with sum of inductions equal to the extension
/// character; nullopt when the space is exhausted.
std::optional<std::vector<AssignedCharacter>> solve_assignment(
    GroupContext& ctx, unsigned l_mask);

/// Resolves a parsed table into assigned characters, enforcing that the
/// entries cover the cuspidal classes of W_L exactly once and that each
/// value list extends to a linear character of the centralizer.
std::vector<AssignedCharacter> characters_from_table(GroupContext& ctx,
                                                     const TableFile& table);

Report verify_theorem_c(GroupContext& ctx, unsigned l_mask,
                        const TableFile* table, const VerifyOptions& opt);

Report verify_theorem_a(GroupContext& ctx,
                        const std::vector<TableFile>& tables,
                        bool allow_solve, const VerifyOptions& opt);

/// Class indices used when a rank-6 character is only sampled.
std::vector<size_t> sampled_class_indices(const Grp& grp);

std::string cyc_str(const Cyclotomic& v);

}  // namespace coxos
