#pragma once

#include <optional>

#include "coxos/coxgroup.hpp"
#include "coxos/cyclotomic.hpp"

namespace coxos {

/// Cyclotomic-valued class function on the conjugacy classes of a subgroup,
/// stored in the carrier's deterministic class order.
struct ClassFunction {
  GrpPtr carrier;
  std::vector<Cyclotomic> values;

  ClassFunction() = default;
  ClassFunction(GrpPtr g, std::vector<Cyclotomic> v)
      : carrier(std::move(g)), values(std::move(v)) {
    COXOS_CHECK(values.size() == carrier->classes.size(),
                "class function: wrong number of values");
  }

  const Cyclotomic& at(size_t i) const { return values[i]; }
  Cyclotomic value_at_element(uint32_t serial) const {
    int c = carrier->class_index(serial);
    COXOS_CHECK(c >= 0, "class function: element outside carrier");
    return values[c];
  }

  ClassFunction operator+(const ClassFunction& o) const;
  ClassFunction operator-(const ClassFunction& o) const;
  ClassFunction operator*(const ClassFunction& o) const;  // pointwise
  bool operator==(const ClassFunction& o) const;
};

ClassFunction class_function_from_rationals(GrpPtr g,
                                            const std::vector<Rational>& v);
ClassFunction trivial_character(GrpPtr g);
ClassFunction regular_character(GrpPtr g);

/// Values of a would-be linear character on a generating set of a subgroup.
struct LinearCharacterSpec {
  GrpPtr subgroup;
  std::vector<std::pair<uint32_t, Cyclotomic>> gen_values;
};

/// Extends the spec multiplicatively over the subgroup by breadth-first
/// closure from the identity. Fails with a witness when the values are
/// inconsistent or the listed elements do not generate.
ClassFunction linear_character(const LinearCharacterSpec& spec);

/// All linear characters (homomorphisms to roots of unity), through the
/// abelianization; sorted by descending kernel size (trivial character
/// first), ties broken by the value tuple.
std::vector<ClassFunction> linear_characters(GrpPtr h);

/// Induction via class fusion:
/// Ind phi(C) = [G:H]/|C| * sum over H-classes c inside C of |c| phi(c).
ClassFunction induce(const ClassFunction& phi, GrpPtr g);

/// Search for one linear character per entry so the induced characters sum
/// to the target. Options and their inductions are indexed consistently;
/// returns the choice indices (lexicographically least) or nullopt.
struct SolveInput {
  GrpPtr n_grp;
  std::vector<std::vector<ClassFunction>> options;  // per rep, on centralizer
  std::vector<std::vector<ClassFunction>> induced;  // per rep, on n_grp
};

std::optional<std::vector<int>> solve_character_sum(
    const SolveInput& in, const std::vector<Cyclotomic>& target);

}  // namespace coxos
