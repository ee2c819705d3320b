#pragma once

#include <optional>
#include <unordered_map>

#include "coxos/coxgroup.hpp"

namespace coxos {

/// The reflection arrangement of a standard parabolic W_L, seen through the
/// ambient root system: the positive roots supported on L, in the ambient
/// total order, with index maps in both directions.
struct RootCtx {
  BoxPtr box;
  unsigned l_mask = 0;
  std::vector<int> roots;         // local index -> ambient root index
  std::vector<int> local_index;   // ambient root index -> local index or -1
  std::vector<std::vector<long long>> vecs;  // local root coordinate vectors
  int count = 0;                  // number of local roots
  int rank = 0;                   // |L|
};

RootCtx root_ctx(BoxPtr box, unsigned l_mask);

/// Monomial in the Orlik-Solomon algebra: a set of local root indices (the
/// strictly increasing sequence) with a sign carried separately.
struct Monomial {
  uint64_t mask = 0;
  int sign = 1;  // 0 encodes the zero monomial (a repeated factor)
};

/// a > b in the position-wise lexicographic order on equal-degree sorted
/// index sequences.
inline bool mask_lex_greater(uint64_t a, uint64_t b) {
  if (a == b) return false;
  uint64_t diff = a ^ b;
  uint64_t low = diff & (~diff + 1);
  return (b & low) != 0;
}

/// Non-broken-circuit structure for one arrangement: per-degree bases,
/// membership hashes and the memoized coefficient recursion.
class NBCStructure {
public:
  explicit NBCStructure(RootCtx ctx);

  const RootCtx& ctx() const { return ctx_; }
  const std::vector<uint64_t>& basis(int degree) const {
    return levels_.at(degree).basis;
  }
  int top_degree() const { return ctx_.rank; }
  bool is_nbc(int degree, uint64_t mask) const;

  /// Coefficient of the basis element b (a mask in basis(degree)) in the
  /// NBC expansion of the monomial a.
  Rational coeff(int degree, uint64_t a_mask, uint64_t b_mask);

  /// Image of a monomial under a group element acting by root permutation;
  /// sign from re-sorting.
  Monomial act(const Monomial& m, uint32_t g) const;

  /// Trace of g on the degree-d component.
  Rational trace(int degree, uint32_t g, bool early_cutoff = true);

  size_t memo_size() const { return memo_.size(); }
  void clear_memo() { memo_.clear(); }

private:
  struct Level {
    std::vector<uint64_t> basis;
    std::unordered_map<uint64_t, int> index_of;
  };

  struct Rewrite {
    // a = sum of sign * monomial over the entries
    std::vector<std::pair<uint64_t, int>> terms;
  };

  RootCtx ctx_;
  std::vector<Level> levels_;
  std::unordered_map<uint64_t, Rewrite> rewrites_;
  std::unordered_map<uint64_t, Rational> memo_;

  const Rewrite& rewrite_of(uint64_t a_mask);
};

/// Graded dimensions of the quotient of the exterior algebra by the
/// dependency relations, by exact row reduction; independent of the NBC
/// machinery. Only for small arrangements.
std::vector<long long> os_dimension_oracle(const RootCtx& ctx);

/// Expansion of every degree-d monomial over the NBC basis via the dense
/// quotient oracle; rows indexed like the masks vector returned in `monos`.
struct OracleExpansion {
  std::vector<uint64_t> monos;
  std::vector<std::vector<Rational>> coeffs;  // per mono, over basis(degree)
};
OracleExpansion oracle_expand(NBCStructure& nbc, int degree);

/// Values of the top-degree extension character of A(W_L) on the classes of
/// n_grp (which must normalize W_L).
std::vector<Rational> omega_tilde(NBCStructure& nbc, const Grp& n_grp,
                                  int jobs = 1);

/// Full or top-only Orlik-Solomon character of the group carrying ctx.
std::vector<Rational> omega_character(NBCStructure& nbc, const Grp& grp,
                                      bool top_only, int jobs = 1);

/// Orlik-Solomon trace of a single element, per degree.
std::vector<Rational> omega_degrees(NBCStructure& nbc, uint32_t g);

/// Determinant character of n_grp on the fixed space of W_L: one value
/// (+1/-1) per class.
std::vector<Rational> alpha_character(const Grp& l_grp, const Grp& n_grp);

/// Determinant of the restriction of z to the fixed space of w.
Rational alpha_w(const GroupBox& box, uint32_t w, uint32_t z);

/// Sign character values on classes: (-1)^length.
std::vector<Rational> sign_character(const Grp& grp);

}  // namespace coxos
