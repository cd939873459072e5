#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "spinform/weyl.hpp"

using namespace spinform;

namespace {

std::vector<std::pair<weyl::Element, int>> collect(int rank) {
  std::vector<std::pair<weyl::Element, int>> all;
  weyl::for_each_element(rank, [&](const weyl::Element& w, int d) { all.emplace_back(w, d); });
  return all;
}

Weight spinor_top(int rank, bool odd) {
  std::vector<HalfInt> f(static_cast<size_t>(rank), HalfInt(0));
  f[static_cast<size_t>(rank) - 1] = HalfInt::from_twice(odd ? -3 : -1);
  if (odd && rank >= 2) f[static_cast<size_t>(rank) - 2] = HalfInt(1);
  return Weight::from_fundamental(f);
}

}  // namespace

TEST_CASE("enumeration size and determinants") {
  auto l1 = collect(1);
  CHECK(l1.size() == 2);
  std::multiset<int> dets;
  for (auto& [w, d] : l1) dets.insert(d);
  CHECK(dets == std::multiset<int>{-1, 1});

  auto l2 = collect(2);
  CHECK(l2.size() == 8);
  int sum = 0;
  for (auto& [w, d] : l2) sum += d;
  CHECK(sum == 0);

  CHECK(collect(3).size() == 48);
  CHECK(weyl::group_order(3) == 48);
  CHECK_THROWS_AS(weyl::for_each_element(9, [](const weyl::Element&, int) {}), ResourceError);
}

TEST_CASE("action on weights") {
  Weight rho2 = Weight::rho(2);  // (2,1)
  weyl::Element id = weyl::Element::identity(2);
  CHECK(weyl::act(id, rho2) == rho2);

  weyl::Element flip = id;
  flip.sign[1] = -1;
  CHECK(weyl::act(flip, rho2).eps2() == std::vector<int>{4, -2});

  weyl::Element swap = id;
  std::swap(swap.src[0], swap.src[1]);
  CHECK(weyl::act(swap, rho2).eps2() == std::vector<int>{2, 4});
}

TEST_CASE("action preserves the multiset of absolute coordinates") {
  std::mt19937 rng(5);
  Weight v{std::vector<int>{3, -1, 2}};
  weyl::for_each_element(3, [&](const weyl::Element& w, int) {
    Weight img = weyl::act(w, v);
    std::multiset<int> a, b;
    for (int k = 0; k < 3; ++k) {
      a.insert(std::abs(v.eps2_at(k)));
      b.insert(std::abs(img.eps2_at(k)));
    }
    CHECK(a == b);
  });
  (void)rng;
}

TEST_CASE("composition closes and det is a homomorphism") {
  auto all = collect(2);
  std::map<std::vector<int>, int> index;
  auto key = [](const weyl::Element& w) {
    std::vector<int> k(w.src.begin(), w.src.end());
    for (int8_t s : w.sign) k.push_back(s);
    return k;
  };
  for (auto& [w, d] : all) index[key(w)] = d;
  for (auto& [a, da] : all)
    for (auto& [b, db] : all) {
      weyl::Element c = weyl::compose(a, b);
      auto it = index.find(key(c));
      REQUIRE(it != index.end());
      CHECK(it->second == da * db);
      CHECK(weyl::det(c) == da * db);
    }
  for (auto& [a, da] : all) {
    weyl::Element inv = weyl::inverse(a);
    CHECK(weyl::compose(a, inv) == weyl::Element::identity(2));
    CHECK(weyl::det(inv) == da);
  }
}

TEST_CASE("reflections square to the identity and negate the root") {
  for (int rank : {2, 3, 4})
    for (const Root& alpha : positive_roots(rank)) {
      weyl::Element s = weyl::reflection(rank, alpha);
      CHECK(weyl::compose(s, s) == weyl::Element::identity(rank));
      CHECK(weyl::det(s) == -1);
      CHECK(weyl::act(s, alpha.to_weight(rank)) == -alpha.to_weight(rank));
    }
}

TEST_CASE("integral subgroup of a dominant integral weight is the full group") {
  for (int rank : {2, 3}) {
    Weight lam = Weight::fundamental(rank, 1);
    CHECK(weyl::integral_subgroup(lam).size() == weyl::group_order(rank));
  }
}

TEST_CASE("integral subgroup of spinor-type weights is the even-sign subgroup") {
  for (int rank : {2, 3, 4}) {
    for (bool odd : {false, true}) {
      auto subgroup = weyl::integral_subgroup(spinor_top(rank, odd));
      CHECK(subgroup.size() == weyl::group_order(rank) / 2);

      // brute force: the elements with an even number of sign flips
      std::set<std::vector<int>> expected, got;
      auto key = [](const weyl::Element& w) {
        std::vector<int> k(w.src.begin(), w.src.end());
        for (int8_t s : w.sign) k.push_back(s);
        return k;
      };
      weyl::for_each_element(rank, [&](const weyl::Element& w, int) {
        int flips = 0;
        for (int8_t s : w.sign) flips += s < 0;
        if (flips % 2 == 0) expected.insert(key(w));
      });
      for (auto& [w, d] : subgroup) got.insert(key(w));
      CHECK(expected == got);
    }
  }
}

TEST_CASE("admissible weights all produce the even-sign subgroup") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> small(0, 3);
  for (int trial = 0; trial < 40; ++trial) {
    int rank = 2 + static_cast<int>(rng() % 4);  // up to rank 5
    std::vector<HalfInt> f(static_cast<size_t>(rank));
    for (int k = 0; k + 1 < rank; ++k) f[static_cast<size_t>(k)] = HalfInt(small(rng));
    f[static_cast<size_t>(rank) - 1] = HalfInt::from_twice(2 * small(rng) + 1);
    Weight lam = Weight::from_fundamental(f);
    REQUIRE(lam.is_bounded_admissible());
    CHECK(weyl::integral_subgroup(lam).size() == weyl::group_order(rank) / 2);
  }
}

TEST_CASE("orbit of a strictly dominant weight has full size") {
  for (int rank : {2, 3}) CHECK(weyl::orbit(Weight::rho(rank)).size() == weyl::group_order(rank));
  CHECK(weyl::orbit(Weight::fundamental(3, 1)).size() == 6);  // stabilized by signs on zeros
}
