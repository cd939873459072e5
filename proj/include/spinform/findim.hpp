// Finite-dimensional oracles (Weyl dimension, Freudenthal multiplicities,
// exact wedge-power characters) and the wedge-power decomposition with its
// verification.
#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "spinform/character.hpp"
#include "spinform/report.hpp"
#include "spinform/weight.hpp"

namespace spinform {

// Isomorphism class of an irreducible: F(lambda) for dominant integral
// highest weight, L(lambda) for a bounded-multiplicity one.
struct ModuleLabel {
  enum class Family { finite, bounded };
  Family family;
  Weight hw;

  static ModuleLabel finite(Weight w);
  static ModuleLabel bounded(Weight w);

  bool operator==(const ModuleLabel&) const = default;
  auto operator<=>(const ModuleLabel&) const = default;
  std::string str() const;  // "F(0,1,0)" or "L(1,0,-1/2)"
};

// Multiset of module labels: the right-hand side of a decomposition.
struct Decomposition {
  std::map<ModuleLabel, int> summands;

  void add(ModuleLabel label, int multiplicity = 1);
  int multiplicity(const ModuleLabel& label) const;
  int distinct_count() const { return static_cast<int>(summands.size()); }
  int total_count() const;
  bool multiplicity_free() const;
  bool operator==(const Decomposition&) const = default;
  std::string str() const;
};

nlohmann::json to_json(const Decomposition& d);

// Product of <lam+rho, alpha^vee> / <rho, alpha^vee> over the positive roots,
// evaluated in exact integer arithmetic.
Int weyl_dimension(const Weight& lam);

// Exact character of F(lam) by the Freudenthal recursion, dominant weights
// first and then expanded over Weyl orbits. Guarded by the dimension guard.
Character freudenthal_multiplicities(const Weight& lam, Exec exec = Exec::automatic);

// i-th elementary symmetric character in the 2l weights {+-e_k}: the exact
// character of the i-th wedge power of the defining representation.
Character wedge_character(int rank, int i);

// Wedge powers decompose as F(varpi_i) + F(varpi_{i-2}) + ... for i <= l; for
// i > l the pairing into the top exterior power is invariant, so the i-th and
// (2l-i)-th powers match.
Decomposition wedge_decomposition(int rank, int i);

// For every i: summand dimensions add up to C(2l, i) and the Freudenthal
// characters add up to the elementary symmetric character, exactly.
SuiteReport verify_wedge(int rank);

// The character formula with full-Weyl numerator and the Freudenthal recursion
// agree on every dominant integral weight with coordinate sum <= max_sum.
SuiteReport verify_finite_oracles(int rank, int max_sum, int depth);

}  // namespace spinform
