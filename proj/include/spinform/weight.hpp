// Exact arithmetic on the C_l weight lattice: bases, roots, pairings, dominance,
// and the admissibility test for bounded-multiplicity highest weights.
#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "spinform/errors.hpp"
#include "spinform/halfint.hpp"

namespace spinform {

// Weight of sp(2l,C) in the orthogonal basis e_1..e_l, stored as doubled
// integer coordinates: entry k holds 2*a_k for the weight sum_k a_k e_k.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::vector<int> eps2) : eps2_(std::move(eps2)) {}

  static Weight zero(int rank);
  // varpi_i = e_1 + ... + e_i for 1 <= i <= rank; varpi_0 is the zero weight.
  static Weight fundamental(int rank, int i);
  // rho = sum of fundamental weights; coordinates (l, l-1, ..., 1).
  static Weight rho(int rank);
  static Weight basis_vector(int rank, int k);  // e_{k+1}, 0-based k
  static Weight from_fundamental(const std::vector<HalfInt>& coeffs);
  static Weight from_epsilon(const std::vector<HalfInt>& coords);

  int rank() const { return static_cast<int>(eps2_.size()); }
  const std::vector<int>& eps2() const { return eps2_; }
  int eps2_at(int k) const { return eps2_[static_cast<size_t>(k)]; }
  HalfInt eps(int k) const { return HalfInt::from_twice(eps2_[static_cast<size_t>(k)]); }

  std::vector<HalfInt> fundamental_coords() const;
  // Doubled fundamental coordinates: 2*lambda_i.
  std::vector<int> fundamental2() const;

  // All fundamental coordinates are non-negative integers.
  bool is_dominant_integral() const;
  // Highest weight of a bounded-multiplicity irreducible: lambda_i in N_0 for
  // i < l, lambda_l in Z + 1/2, and lambda_{l-1} + 2*lambda_l + 3 > 0.
  bool is_bounded_admissible() const;

  Weight operator+(const Weight& o) const;
  Weight operator-(const Weight& o) const;
  Weight operator-() const;
  bool operator==(const Weight&) const = default;
  auto operator<=>(const Weight&) const = default;

  // "(0,1,-3/2)" in fundamental coordinates, the shorthand used everywhere.
  std::string str() const;

 private:
  std::vector<int> eps2_;
};

void require_same_rank(const Weight& a, const Weight& b);

// Positive roots of C_l: e_i - e_j and e_i + e_j for i < j, and 2 e_i.
struct Root {
  enum class Kind { diff, sum, lng };
  Kind kind;
  int i = 0;  // 0-based; i < j for the two-index kinds
  int j = 0;

  Weight to_weight(int rank) const;
  // Doubled coroot pairing 2*<a, alpha^vee>; the pairing itself is a_i - a_j,
  // a_i + a_j or a_i depending on the kind.
  int pairing2(const Weight& a) const;
  // Height in the simple-root basis.
  int height(int rank) const;
};

// All l^2 positive roots in a fixed deterministic order.
std::vector<Root> positive_roots(int rank);

// Expresses top - w in the simple-root basis alpha_1..alpha_l; present exactly
// when all coefficients are non-negative integers. The sum of the entries is
// the depth of w below top.
std::optional<std::vector<int>> cone_coords(const Weight& top, const Weight& w);

// 4 * (sum of simple-root coefficients of top - w), defined whenever w lies in
// the closed rational cone below top (coefficients may be half-integral there);
// nullopt outside the cone. Integer cone points have values divisible by 4.
std::optional<long> cone_height_x4(const Weight& top, const Weight& w);

// Componentwise maximum; an upper bound of both weights in the cone order.
Weight join_upper(const Weight& a, const Weight& b);

// 4 * (a, b) for the inner product with orthonormal e_i.
long inner_x4(const Weight& a, const Weight& b);

nlohmann::json to_json(const Weight& w);
Weight weight_from_json(const nlohmann::json& j);

struct WeightHash {
  size_t operator()(const Weight& w) const {
    size_t h = 0x9e3779b97f4a7c15u ^ static_cast<size_t>(w.rank());
    for (int c : w.eps2()) h = h * 1099511628211u + static_cast<size_t>(c + 0x7fff);
    return h;
  }
};

}  // namespace spinform
