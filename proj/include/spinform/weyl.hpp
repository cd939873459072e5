// The Weyl group of C_l as signed permutations, its action on weights, and the
// integral subgroup entering the Kac-Wakimoto character numerator.
#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "spinform/weight.hpp"

namespace spinform {
namespace weyl {

// Signed permutation: coordinate k of the image is sign[k] * v[src[k]],
// i.e. src is the inverse of the underlying permutation written as a table.
struct Element {
  std::vector<uint8_t> src;
  std::vector<int8_t> sign;

  static Element identity(int rank);
  int rank() const { return static_cast<int>(src.size()); }
  bool operator==(const Element&) const = default;
};

Weight act(const Element& w, const Weight& v);

// First w2, then w1.
Element compose(const Element& w1, const Element& w2);
Element inverse(const Element& w);

// sign of the permutation times the product of the coordinate signs
int det(const Element& w);

// Reflection in a positive root, realized as its signed-permutation matrix.
Element reflection(int rank, const Root& alpha);

// Visits all 2^l * l! elements exactly once, in a fixed deterministic order.
// Guarded at rank <= 8.
void for_each_element(int rank, const std::function<void(const Element&, int)>& fn);

size_t group_order(int rank);

// Subgroup generated by the reflections s_alpha with <lam + rho, alpha^vee>
// integral, closed under composition, each element paired with its determinant.
// Deterministically ordered.
std::vector<std::pair<Element, int>> integral_subgroup(const Weight& lam);

// All distinct images of v under the full group.
std::vector<Weight> orbit(const Weight& v);

}  // namespace weyl
}  // namespace spinform
