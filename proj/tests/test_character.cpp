#include <doctest.h>

#include <functional>
#include <map>
#include <random>

#include "spinform/character.hpp"
#include "spinform/findim.hpp"

using namespace spinform;

namespace {

HalfInt h(int twice) { return HalfInt::from_twice(twice); }

Weight wf(std::vector<HalfInt> f) { return Weight::from_fundamental(f); }

Weight spinor_top(int rank, Parity p) {
  std::vector<HalfInt> f(static_cast<size_t>(rank), HalfInt(0));
  f[static_cast<size_t>(rank) - 1] = h(p == Parity::odd ? -3 : -1);
  if (p == Parity::odd && rank >= 2) f[static_cast<size_t>(rank) - 2] = HalfInt(1);
  return Weight::from_fundamental(f);
}

// Independent oracle: the number of ways to write beta as an N_0-combination
// of positive roots, by direct recursion over the root list.
Int kostant_partitions(const Weight& beta, const std::vector<Root>& roots, size_t from) {
  bool zero = true;
  for (int c : beta.eps2()) zero &= c == 0;
  if (zero) return 1;
  if (from == roots.size()) return 0;
  Int total = 0;
  Weight current = beta;
  int rank = beta.rank();
  while (true) {
    total += kostant_partitions(current, roots, from + 1);
    current = current - roots[from].to_weight(rank);
    if (!cone_height_x4(current, Weight::zero(rank))) break;  // went below zero
  }
  return total;
}

Int kostant_partitions(const Weight& beta) {
  return kostant_partitions(beta, positive_roots(beta.rank()), 0);
}

}  // namespace

TEST_CASE("unit character and additive identities") {
  Character one = Character::unit(2);
  CHECK(one.coeff(Weight::zero(2)) == 1);
  CHECK(one.mass() == 1);

  Character two = add(one, one);
  CHECK(two.coeff(Weight::zero(2)) == 2);

  Character zero(Weight::zero(2), 5, false);
  Character same = add(one, zero);
  CHECK(same.coeff(Weight::zero(2)) == 1);
  CHECK(same.term_count() == 1);
}

TEST_CASE("adding both spinor parities fills the whole lattice") {
  const int rank = 2, depth = 6;
  Character both = add(spinor_character(rank, Parity::even, depth), spinor_character(rank, Parity::odd, depth));
  // brute-force lattice enumeration
  int found = 0;
  for (int n1 = 0; n1 <= 2 * depth; ++n1)
    for (int n2 = 0; n2 <= 2 * depth; ++n2) {
      Weight w{std::vector<int>{-1 - 2 * n1, -1 - 2 * n2}};
      auto height = cone_height_x4(both.top(), w);
      if (!height || *height > 4 * both.depth()) continue;
      CHECK(both.coeff(w) == 1);
      ++found;
    }
  CHECK(found == static_cast<int>(both.term_count()));
  CHECK(found > 20);
}

TEST_CASE("product against the defining character, computed both ways") {
  Character v = wedge_character(2, 1);
  Character unit = Character::unit(2);
  Character same = mul(v, unit, 6);
  CHECK(exact_equal(same, v));

  Character square = mul(v, v, 10);
  CHECK(square.coeff(Weight{std::vector<int>{4, 0}}) == 1);  // at 2 e_1
  CHECK(square.coeff(Weight::zero(2)) == 4);
  CHECK(square.mass() == 16);

  CHECK(exact_equal(square, mul_serial(v, v, 10)));
}

TEST_CASE("product depth contract is enforced") {
  const int rank = 2;
  Character a = spinor_character(rank, Parity::even, 6);
  Character b = spinor_character(rank, Parity::even, 4);
  CHECK_THROWS_AS(mul(a, b, 5), TruncationError);
  CHECK_NOTHROW(mul(a, b, 4));

  Character v = wedge_character(rank, 1);  // exact, spread 3
  CHECK_THROWS_AS(mul(v, b, 4), TruncationError);
  CHECK_NOTHROW(mul(v, b, 1));
}

TEST_CASE("products commute and associate on the exactness domain") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 20; ++trial) {
    int rank = 2;
    auto random_exact = [&]() {
      Character c(Weight{std::vector<int>{static_cast<int>(rng() % 5), static_cast<int>(rng() % 3)}}, 0, true);
      Weight top = c.top();
      std::vector<Root> simple{{Root::Kind::diff, 0, 1}, {Root::Kind::lng, 1, 0}};
      for (int t = 0; t < 4; ++t) {
        Weight w = top;
        for (int s = 0; s < static_cast<int>(rng() % 4); ++s)
          w = w - simple[rng() % 2].to_weight(rank);
        c.add_term(w, 1 + static_cast<int>(rng() % 3));
      }
      return c;
    };
    Character a = random_exact(), b = random_exact(), c = random_exact();
    CHECK(exact_equal(mul(a, b, 40), mul(b, a, 40)));
    CHECK(exact_equal(mul(mul(a, b, 40), c, 40), mul(a, mul(b, c, 40), 40)));
  }
}

TEST_CASE("denominator inverse counts root partitions") {
  SUBCASE("unit coefficient at zero") {
    CHECK(weyl_denominator_inverse(2, 6).coeff(Weight::zero(2)) == 1);
  }
  SUBCASE("rank one, single positive root") {
    Character d = weyl_denominator_inverse(1, 4);
    CHECK(d.coeff(Weight{std::vector<int>{-4}}) == 1);  // -2 e_1, one step
  }
  SUBCASE("rank two, two ways to reach e_1 + e_2") {
    Character d = weyl_denominator_inverse(2, 6);
    CHECK(d.coeff(Weight{std::vector<int>{-2, -2}}) == 2);
  }
  SUBCASE("full comparison against the brute-force partition count") {
    for (int rank : {1, 2, 3}) {
      int depth = rank == 3 ? 4 : 6;
      Character d = weyl_denominator_inverse(rank, depth);
      for (const auto& [w, m] : d.sorted_terms()) CHECK(m == kostant_partitions(Weight::zero(rank) - w));
      CHECK(d.coeff(Weight::zero(rank)) == 1);
    }
  }
}

TEST_CASE("denominator inverse does not depend on the root order") {
  for (int rank : {2, 3}) {
    std::vector<Root> order = positive_roots(rank);
    Character reference = weyl_denominator_inverse_ordered(rank, 6, order, Exec::serial);
    std::mt19937 rng(321);
    for (int trial = 0; trial < 3; ++trial) {
      std::shuffle(order.begin(), order.end(), rng);
      Character shuffled = weyl_denominator_inverse_ordered(rank, 6, order, Exec::automatic);
      CHECK(equal_to_depth(reference, shuffled, 6));
    }
  }
}

TEST_CASE("spinor character enumerates the half-parity lattice") {
  SUBCASE("highest weights") {
    for (int rank : {2, 3}) {
      Character even = spinor_character(rank, Parity::even, 8);
      CHECK(even.coeff(spinor_top(rank, Parity::even)) == 1);
      Character odd = spinor_character(rank, Parity::odd, 8);
      CHECK(odd.coeff(spinor_top(rank, Parity::odd)) == 1);
    }
  }
  SUBCASE("rank two spot values") {
    Character even = spinor_character(2, Parity::even, 8);
    CHECK(even.coeff(Weight{std::vector<int>{-3, -3}}) == 1);  // -1/2*(1,1) - e_1 - e_2
    CHECK(even.coeff(Weight{std::vector<int>{-3, -1}}) == 0);  // odd parity point
    Character odd = spinor_character(2, Parity::odd, 8);
    CHECK(odd.coeff(Weight{std::vector<int>{-1, -3}}) == 1);   // the odd top itself
  }
  SUBCASE("every multiplicity is one and the parity is uniform") {
    for (Parity p : {Parity::even, Parity::odd}) {
      Character c = spinor_character(3, p, 7);
      for (const auto& [w, m] : c.sorted_terms()) {
        CHECK(m == 1);
        long sum = 0;
        for (int k = 0; k < 3; ++k) sum += (-1 - w.eps2_at(k)) / 2;
        CHECK(sum % 2 == (p == Parity::odd ? 1 : 0));
      }
    }
  }
}

TEST_CASE("character formula on dominant integral weights matches Freudenthal") {
  for (int rank : {2, 3}) {
    Weight lam = Weight::fundamental(rank, 1);
    Character direct = freudenthal_multiplicities(lam);
    Character formula = kac_wakimoto_character(lam, 8);
    CHECK(equal_to_depth(direct, formula, 8));
  }
}

TEST_CASE("character formula reproduces the spinor enumeration") {
  for (int rank : {2, 3}) {
    for (Parity p : {Parity::even, Parity::odd}) {
      Character listed = spinor_character(rank, p, 8);
      Character formula = kac_wakimoto_character(listed.top(), 8);
      CHECK(equal_to_depth(listed, formula, 8));
    }
  }
}

TEST_CASE("character formula output is plausible on a generic admissible weight") {
  Weight lam = wf({HalfInt(1), h(-1)});  // varpi_1 - varpi_l/2, rank 2
  Character c = kac_wakimoto_character(lam, 4);
  CHECK(c.coeff(lam) == 1);
  CHECK(c.all_coeffs_nonnegative());
  CHECK_THROWS_AS(kac_wakimoto_character(wf({h(0), h(-3)}), 4), DomainError);  // boundary weight
}

TEST_CASE("bounded multiplicity: the maximum coefficient stops growing") {
  // Basic spinors saturate immediately (all multiplicities one).
  for (int rank : {2, 3}) {
    Weight lam = spinor_top(rank, Parity::even);
    Int m6 = kac_wakimoto_character(lam, 6).max_coeff();
    Int m8 = kac_wakimoto_character(lam, 8).max_coeff();
    Int m10 = kac_wakimoto_character(lam, 10).max_coeff();
    CHECK(m6 == 1);
    CHECK(m6 == m8);
    CHECK(m8 == m10);
  }
  // Generic admissible samples saturate by depth 8 (at rank 3 the maximum is
  // still climbing at depth 6, so the flat window starts one step later).
  for (int rank : {2, 3}) {
    std::vector<HalfInt> f(static_cast<size_t>(rank), HalfInt(0));
    f[0] = HalfInt(1);
    f[static_cast<size_t>(rank) - 1] = h(-1);
    Weight lam = wf(f);
    Int m8 = kac_wakimoto_character(lam, 8).max_coeff();
    Int m10 = kac_wakimoto_character(lam, 10).max_coeff();
    Int m12 = kac_wakimoto_character(lam, 12).max_coeff();
    CHECK(m8 == m10);
    CHECK(m10 == m12);
    CHECK(m12 <= 2 * rank - 1);
  }
}

TEST_CASE("depth stability of the pipelines") {
  SuiteReport r = verify_depth_stability(2, 8);
  CHECK(r.passed());
  CHECK(r.cases == 5);
}

TEST_CASE("character JSON is sorted and exact") {
  Character v = wedge_character(2, 1);
  nlohmann::json j = to_json(v);
  CHECK(j["terms"].size() == 4);
  CHECK(j["terms"][0]["weight"]["epsilon"][0] == "1");  // the top comes first
  CHECK(j["exact"] == true);
}

TEST_CASE("equality to depth notices mismatches at the right depth") {
  Character a = spinor_character(2, Parity::even, 8);
  Character b = spinor_character(2, Parity::even, 8);
  // corrupt one coefficient at height 6 (the long root is simple in rank 2)
  Weight deep = a.top();
  for (int t = 0; t < 6; ++t) deep = deep - Root{Root::Kind::lng, 1, 0}.to_weight(2);
  Character c(b.top(), 8, false);
  for (const auto& [w, m] : b.sorted_terms()) c.add_term(w, m);
  c.add_term(deep, 1);
  CHECK(equal_to_depth(a, c, 4));
  CHECK(!equal_to_depth(a, c, 8));
  CHECK_THROWS_AS(equal_to_depth(a, c, 9), TruncationError);
}
