#include "spinform/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <map>
#include <mutex>
#include <set>
#include <unordered_set>

namespace spinform {
namespace weyl {

namespace {

constexpr int kMaxRank = 8;

void require_rank(int rank) {
  if (rank < 1) throw RankError("rank must be positive");
  if (rank > kMaxRank) throw ResourceError("Weyl group enumeration limited to rank 8");
}

// 3 bits per src entry plus one sign bit per coordinate; unique for rank <= 8.
uint32_t pack(const Element& w) {
  uint32_t key = 0;
  for (int k = 0; k < w.rank(); ++k) {
    key |= static_cast<uint32_t>(w.src[static_cast<size_t>(k)]) << (3 * k);
    if (w.sign[static_cast<size_t>(k)] < 0) key |= 1u << (24 + k);
  }
  return key;
}

int permutation_sign(const std::vector<uint8_t>& p) {
  int n = static_cast<int>(p.size());
  std::vector<bool> seen(static_cast<size_t>(n), false);
  int sign = 1;
  for (int k = 0; k < n; ++k) {
    if (seen[static_cast<size_t>(k)]) continue;
    int len = 0;
    for (int m = k; !seen[static_cast<size_t>(m)]; m = p[static_cast<size_t>(m)]) {
      seen[static_cast<size_t>(m)] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

}  // namespace

Element Element::identity(int rank) {
  Element e;
  e.src.resize(static_cast<size_t>(rank));
  std::iota(e.src.begin(), e.src.end(), static_cast<uint8_t>(0));
  e.sign.assign(static_cast<size_t>(rank), 1);
  return e;
}

Weight act(const Element& w, const Weight& v) {
  if (w.rank() != v.rank()) throw RankError("group element and weight rank mismatch");
  std::vector<int> out(static_cast<size_t>(v.rank()));
  for (int k = 0; k < v.rank(); ++k)
    out[static_cast<size_t>(k)] = w.sign[static_cast<size_t>(k)] * v.eps2_at(w.src[static_cast<size_t>(k)]);
  return Weight(std::move(out));
}

Element compose(const Element& w1, const Element& w2) {
  if (w1.rank() != w2.rank()) throw RankError("group element rank mismatch");
  Element r;
  r.src.resize(w1.src.size());
  r.sign.resize(w1.sign.size());
  for (size_t k = 0; k < w1.src.size(); ++k) {
    r.src[k] = w2.src[w1.src[k]];
    r.sign[k] = static_cast<int8_t>(w1.sign[k] * w2.sign[w1.src[k]]);
  }
  return r;
}

Element inverse(const Element& w) {
  Element r;
  r.src.resize(w.src.size());
  r.sign.resize(w.sign.size());
  for (size_t k = 0; k < w.src.size(); ++k) {
    r.src[w.src[k]] = static_cast<uint8_t>(k);
    r.sign[w.src[k]] = w.sign[k];
  }
  return r;
}

int det(const Element& w) {
  int d = permutation_sign(w.src);
  for (int8_t s : w.sign) d *= s;
  return d;
}

Element reflection(int rank, const Root& alpha) {
  Element e = Element::identity(rank);
  switch (alpha.kind) {
    case Root::Kind::diff:
      std::swap(e.src[static_cast<size_t>(alpha.i)], e.src[static_cast<size_t>(alpha.j)]);
      break;
    case Root::Kind::sum:
      std::swap(e.src[static_cast<size_t>(alpha.i)], e.src[static_cast<size_t>(alpha.j)]);
      e.sign[static_cast<size_t>(alpha.i)] = -1;
      e.sign[static_cast<size_t>(alpha.j)] = -1;
      break;
    case Root::Kind::lng:
      e.sign[static_cast<size_t>(alpha.i)] = -1;
      break;
  }
  return e;
}

void for_each_element(int rank, const std::function<void(const Element&, int)>& fn) {
  require_rank(rank);
  Element e = Element::identity(rank);
  std::vector<uint8_t> perm(e.src);
  do {
    e.src = perm;
    int psign = permutation_sign(perm);
    for (uint32_t mask = 0; mask < (1u << rank); ++mask) {
      int d = psign;
      for (int k = 0; k < rank; ++k) {
        bool neg = (mask >> k) & 1u;
        e.sign[static_cast<size_t>(k)] = neg ? -1 : 1;
        if (neg) d = -d;
      }
      fn(e, d);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
}

size_t group_order(int rank) {
  size_t n = 1;
  for (int k = 1; k <= rank; ++k) n *= static_cast<size_t>(2 * k);
  return n;
}

std::vector<std::pair<Element, int>> integral_subgroup(const Weight& lam) {
  int rank = lam.rank();
  require_rank(rank);
  Weight shifted = lam + Weight::rho(rank);

  std::vector<Element> generators;
  uint64_t generator_mask = 0;
  std::vector<Root> roots = positive_roots(rank);
  for (size_t r = 0; r < roots.size(); ++r) {
    int p2 = roots[r].pairing2(shifted);
    if (p2 % 2 == 0) {
      generators.push_back(reflection(rank, roots[r]));
      generator_mask |= uint64_t(1) << r;
    }
  }

  // the subgroup depends only on which reflections are integral
  static std::mutex mtx;
  static std::map<std::pair<int, uint64_t>, std::vector<std::pair<Element, int>>> cache;
  std::lock_guard<std::mutex> lock(mtx);
  auto key = std::make_pair(rank, generator_mask);
  auto hit = cache.find(key);
  if (hit != cache.end()) return hit->second;

  // breadth-first closure
  std::vector<Element> elements{Element::identity(rank)};
  std::unordered_set<uint32_t> seen{pack(elements[0])};
  for (size_t head = 0; head < elements.size(); ++head) {
    Element current = elements[head];
    for (const Element& g : generators) {
      Element next = compose(g, current);
      if (seen.insert(pack(next)).second) elements.push_back(std::move(next));
    }
  }

  std::sort(elements.begin(), elements.end(),
            [](const Element& a, const Element& b) { return pack(a) < pack(b); });
  std::vector<std::pair<Element, int>> out;
  out.reserve(elements.size());
  for (Element& e : elements) {
    int d = det(e);
    out.emplace_back(std::move(e), d);
  }
  return cache.emplace(key, std::move(out)).first->second;
}

std::vector<Weight> orbit(const Weight& v) {
  std::set<Weight> points;
  for_each_element(v.rank(), [&](const Element& w, int) { points.insert(act(w, v)); });
  return std::vector<Weight>(points.begin(), points.end());
}

}  // namespace weyl
}  // namespace spinform
