#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "coxos/rootsys.hpp"

namespace coxos {

/// Full enumeration of a finite Coxeter group with a hash index from the
/// permutation encoding to serial numbers. Immutable once built.
class GroupBox {
public:
  explicit GroupBox(CoxeterDatum datum, size_t cap = 60000);

  const CoxeterDatum& datum() const { return datum_; }
  size_t size() const { return size_; }

  const uint8_t* perm(uint32_t serial) const {
    return arena_.data() + (size_t)serial * stride_;
  }
  Element element(uint32_t serial) const;
  uint32_t serial_of(const Element& e) const;
  std::optional<uint32_t> try_serial(const Element& e) const;

  uint32_t identity() const { return id_serial_; }
  uint32_t gen(int i) const { return gen_serial_[i]; }

  uint32_t mul(uint32_t a, uint32_t b) const;
  uint32_t inv(uint32_t a) const { return inv_[a]; }
  uint32_t right_gen(uint32_t a, int i) const {
    return right_prod_[(size_t)a * datum_.rank + i];
  }
  uint32_t conj(uint32_t g, uint32_t by) const {  // by^-1 * g * by
    return mul(mul(inv_[by], g), by);
  }

  unsigned length(uint32_t a) const { return lengths_[a]; }
  unsigned descents(uint32_t a) const { return descents_[a]; }  // left descents
  unsigned order(uint32_t a) const { return orders_[a]; }
  uint32_t parent(uint32_t a) const { return bfs_parent_[a]; }

  /// |W| x |W| multiplication table, built on demand; only allowed for
  /// groups of at most 4000 elements.
  const std::vector<uint16_t>& mult_table() const;

private:
  CoxeterDatum datum_;
  size_t stride_;
  size_t size_ = 0;
  std::vector<uint8_t> arena_;
  std::vector<uint32_t> slots_;  // open addressing; serial+1, 0 empty
  uint64_t slot_mask_ = 0;
  std::vector<uint32_t> right_prod_;
  std::vector<uint32_t> inv_;
  std::vector<uint8_t> lengths_;
  std::vector<uint16_t> descents_;
  std::vector<uint16_t> orders_;
  std::vector<uint32_t> bfs_parent_;
  uint32_t id_serial_ = 0;
  std::vector<uint32_t> gen_serial_;
  mutable std::vector<uint16_t> mult_table_;

  uint32_t find_slot(const uint8_t* p) const;
  uint32_t insert(const uint8_t* p);
};

using BoxPtr = std::shared_ptr<const GroupBox>;

BoxPtr build_group_box(CoxeterDatum datum, size_t cap = 60000);

struct ConjClass {
  uint32_t rep = 0;
  std::vector<uint32_t> members;
  unsigned order = 1;
  std::string label;                 // element order plus letter, e.g. "6b"
  std::vector<uint64_t> descent_hist;  // counts by full descent mask
  bool cuspidal = false;             // w.r.t. the carrying subgroup
};

/// Subgroup of an enumerated group (possibly the whole group), with its
/// conjugacy classes in the module's deterministic order: sorted by element
/// order, then class size, then lexicographic representative word.
struct Grp {
  BoxPtr box;
  std::string name;
  std::vector<uint32_t> members;   // sorted serials
  std::vector<uint8_t> is_member;  // indexed by box serial
  std::vector<uint32_t> gens;
  int parabolic_mask = -1;  // generator mask when standard parabolic
  std::vector<ConjClass> classes;
  std::vector<int32_t> class_of;  // box serial -> class index, -1 outside

  size_t size() const { return members.size(); }
  bool contains(uint32_t s) const { return is_member[s]; }
  int class_index(uint32_t s) const { return class_of[s]; }
};

using GrpPtr = std::shared_ptr<const Grp>;

GrpPtr whole_group(BoxPtr box);
GrpPtr parabolic_subgroup(BoxPtr box, unsigned gen_mask);
GrpPtr subgroup_generated(BoxPtr box, const std::vector<uint32_t>& gens,
                          const std::string& name);

/// X_J^L: members of L_grp with no left descents in J (J a generator mask).
std::vector<uint32_t> parabolic_transversal(const Grp& l_grp, unsigned j_mask);

/// Unique factorization w = u * x with u in W_L and x without left descents
/// in L; lengths add.
std::pair<uint32_t, uint32_t> parabolic_coordinates(const GroupBox& box,
                                                    uint32_t w,
                                                    unsigned l_mask);

/// The L-stabilizing minimal coset representatives N_L;
/// N_W(W_L) = W_L x| N_L.
std::vector<uint32_t> normalizer_complement(const GroupBox& box,
                                            unsigned l_mask);

bool is_bulky(const GroupBox& box, unsigned l_mask);

/// N_W(W_L) as a subgroup, generated by L and N_L.
GrpPtr normalizer_of_parabolic(BoxPtr box, unsigned l_mask);

/// Centralizer of w inside the given subgroup, with a greedily extracted
/// small generating set.
GrpPtr centralizer(const GrpPtr& scope, uint32_t w);

/// Cuspidal test for w in the standard parabolic W_L: the fixed space of w
/// in V has the same dimension as the fixed space of W_L itself.
bool is_cuspidal_in(const GroupBox& box, unsigned l_mask, uint32_t w);

/// Class indices of the cuspidal classes of a parabolic subgroup.
std::vector<int> cuspidal_class_indices(const Grp& l_grp);

/// Maps each class of sub to the class of super containing it.
std::vector<int> class_fusion(const Grp& sub, const Grp& super);

/// Negative-cycle representative of the cuspidal class of W(B_n) labeled by
/// a partition (parts in non-decreasing order), plus the standard generators
/// of its centralizer.
struct CuspidalRep {
  std::vector<int> partition;
  std::vector<int> word;  // 0-based generators
  std::vector<std::pair<std::string, std::vector<int>>> gen_words;
};

CuspidalRep bn_cuspidal_rep(int n, const std::vector<int>& partition);

/// Cuspidal class data for W(D_n): one entry per partition of n with an
/// even number of parts. Words are given in the D_n generators (generator 0
/// prints as 1').
struct DnCuspidalRep {
  std::vector<int> partition;
  uint32_t rep_serial;
  std::vector<int> word;  // in D_n generators
};

std::vector<DnCuspidalRep> dn_cuspidal_reps(BoxPtr d_box);

std::vector<std::vector<int>> partitions_of(int n);

/// Determinant of w on V; equals the sign character.
Rational det_on_v(const CoxeterDatum& d, const Element& w);

std::string word_to_string(const CoxeterDatum& d, const std::vector<int>& word);

}  // namespace coxos
