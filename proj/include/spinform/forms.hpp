// The three decomposition rules for symplectic-spinor-valued forms: finite
// module tensored with the basic spinor, bounded module tensored with the
// defining representation, and the full wedge-times-spinor decomposition with
// its two-index labeling.
#pragma once

#include <vector>

#include "spinform/findim.hpp"
#include "spinform/report.hpp"

namespace spinform {

// Index into the triangular node set: column i = 0..2l, row j.
struct NodeIndex {
  int i = 0;
  int j = 0;
  bool operator==(const NodeIndex&) const = default;
  auto operator<=>(const NodeIndex&) const = default;
  std::string str() const { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }
};

// {(i,j) : j <= i} for i <= l joined with {(i,j) : j <= 2l-i} for i > l.
std::vector<NodeIndex> node_indices(int rank);
bool node_in_range(int rank, NodeIndex idx);

// The set indexing the summands of F(nu) tensored with the basic spinor:
// nu - sum d_k e_k with d_k in N_0, |d| even, d_k <= nu_k for k < l and
// d_l <= 2*nu_l + 1.
std::vector<Weight> spinor_product_weights(const Weight& nu);

// F(nu) (x) S  =  (+) L(kappa - varpi_l/2) over the set above.
Decomposition tensor_with_spinor(const Weight& nu);

// Saturated weight set of the defining representation: {+-e_k}.
std::vector<Weight> defining_weight_set(int rank);

// L(lam) (x) V  =  (+) L(lam + nu) over the admissible shifts nu in {+-e_k};
// multiplicity free since the 2l candidates are distinct.
Decomposition tensor_with_defining(const Weight& lam);

// Full decomposition of the i-th wedge power of V* tensored with the basic
// spinor, computed by chaining the wedge decomposition through the spinor
// tensor rule and merging; i and 2l-i agree by duality. Asserted to be
// multiplicity free.
Decomposition forms_spinor_decomposition(int rank, int i);

// Closed-form label of node (i,j): j = 0 alternates between the two basic
// spinors with the parity of i; j > 0 carries a 1 in slot j with last
// coordinate -1/2 when i and j share parity, and additionally a 1 in slot l-1
// with last coordinate -3/2 when they do not. The two collision slots (l,l-1)
// and (l,l) take the exceptional labels (0..0,2,-3/2) and (0..0,1/2).
ModuleLabel node_label(int rank, NodeIndex idx);

// Column labels agree with the closed-form table, and the product of the
// wedge character with the spinor character equals the summed character
// formulas, coefficient for coefficient, to the given depth (checked on the
// middle columns where it is cheapest to be wrong).
SuiteReport verify_forms_table(int rank, int depth);

// Character identity behind the spinor tensor rule over all dominant integral
// nu with coordinate sum <= max_sum.
SuiteReport verify_spinor_tensor_identity(int rank, int max_sum, int depth);

// Character identity behind the defining tensor rule over every label in the
// node table of the given rank.
SuiteReport verify_defining_tensor_identity(int rank, int depth);

}  // namespace spinform
