// Truncated exact formal-character arithmetic: the substrate for every
// verification oracle (Weyl denominator, Kostant spinor character, Kac-Wakimoto
// characters). Coefficients are arbitrary-precision integers throughout.
#pragma once

#include <gmpxx.h>

#include <map>
#include <vector>

#include <json.hpp>

#include "spinform/report.hpp"
#include "spinform/weight.hpp"

namespace spinform {

using Int = mpz_class;

enum class Exec { serial, parallel, automatic };

// Formal sum  sum_w m_w e^w  supported in the cone below a top weight.
// Terms are keyed by the doubled epsilon-coordinates of top - w; the height of
// a term is the sum of simple-root coefficients of that displacement (tracked
// times four so that half-integral coefficients stay exact).
//
// A character is either exact (finite support, every coefficient known) or
// truncated, in which case coefficients are guaranteed only for heights up to
// `depth`. Zero coefficients are never stored.
class Character {
 public:
  Character(Weight top, int depth, bool exact = false);

  // Character of the trivial module: single coefficient 1 at weight zero.
  static Character unit(int rank);

  const Weight& top() const { return top_; }
  int rank() const { return top_.rank(); }
  int depth() const { return depth_; }
  bool exact() const { return exact_; }
  long depth_x4() const;  // +inf is modelled by exact()

  const std::map<std::vector<int>, Int>& terms() const { return terms_; }
  size_t term_count() const { return terms_.size(); }

  Int coeff(const Weight& w) const;
  // Adds m at weight w; w must lie in the cone below top, and within depth for
  // truncated characters.
  void add_term(const Weight& w, const Int& m);
  void add_term_disp(std::vector<int> disp2, const Int& m);

  Weight weight_of(const std::vector<int>& disp2) const;
  static long height_x4_of(const std::vector<int>& disp2);

  Int mass() const;
  Int max_coeff() const;
  bool all_coeffs_nonnegative() const;

  // Drops terms above the given height; result advertises exactly that depth.
  Character truncated(int depth) const;

  // Deterministic order: height, then lexicographic epsilon coordinates.
  std::vector<std::pair<Weight, Int>> sorted_terms() const;

 private:
  Weight top_;
  int depth_;
  bool exact_;
  std::map<std::vector<int>, Int> terms_;

  friend Character add(const Character&, const Character&);
  friend Character scaled(const Character&, const Int&);
};

// Coefficient-wise sum. The tops may differ; the result lives below their
// componentwise join and its guaranteed depth is adjusted accordingly.
Character add(const Character& a, const Character& b);

// Sums scaled characters below one fixed reference top. Every input top must
// lie below the reference in the cone order; the result's depth guarantee is
// the weakest input guarantee measured from the reference.
class CharacterSum {
 public:
  CharacterSum(Weight ref_top, int depth);
  void add(const Character& c, const Int& scale = 1);
  Character finish() const;  // throws TruncationError if the inputs guarantee less

 private:
  Weight top_;
  int depth_;
  long guarantee_x4_;
  std::map<std::vector<int>, Int> acc_;
};

Character scaled(const Character& a, const Int& factor);

// Cauchy product truncated to result_depth below top_a + top_b. Preconditions
// follow the truncation contract: result_depth <= min of the operand depths
// when both are truncated; with one exact operand, result_depth <= other.depth
// minus the exact operand's spread (its lowest term height). Violations throw
// TruncationError.
Character mul(const Character& a, const Character& b, int result_depth, Exec exec = Exec::automatic);

// Reference implementation: straight sparse term-pair accumulation.
Character mul_serial(const Character& a, const Character& b, int result_depth);

// True iff the coefficients agree on every weight of height <= depth below the
// common (joined) top. Both operands must guarantee that depth.
bool equal_to_depth(const Character& a, const Character& b, int depth);

// Exact characters only: same support and coefficients.
bool exact_equal(const Character& a, const Character& b);

// Expansion of prod_{alpha > 0} (1 - e^{-alpha})^{-1} to the given height.
// The coefficient at -beta counts the ways to write beta as an N_0-combination
// of positive roots. Results are cached per rank.
Character weyl_denominator_inverse(int rank, int depth);
// Same, with an explicit root order (the result does not depend on it).
Character weyl_denominator_inverse_ordered(int rank, int depth, const std::vector<Root>& order, Exec exec);

enum class Parity { even, odd };

// Kostant spinor character: multiplicity one on the half-parity lattice
// -1/2*(1,...,1) - n, n in N_0^l with |n| of the given parity.
Character spinor_character(int rank, Parity parity, int depth);

// Weyl-type alternating numerator over the integral subgroup of lam, divided
// by the full Weyl denominator and truncated. Valid input: dominant integral
// lam (where this degenerates to the Weyl character formula) or bounded
// admissible lam.
Character kac_wakimoto_character(const Weight& lam, int depth, Exec exec = Exec::automatic);

nlohmann::json to_json(const Character& c);

// Suites ------------------------------------------------------------------

// Kac-Wakimoto character of each basic spinor weight equals the explicit
// lattice enumeration, coefficient for coefficient, to the given depth.
SuiteReport verify_spinor_kw(int rank, int depth);

// Re-running the character pipelines two levels deeper changes nothing inside
// the original depth.
SuiteReport verify_depth_stability(int rank, int depth);

}  // namespace spinform
