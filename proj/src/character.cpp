#include "spinform/character.hpp"

#include <algorithm>
#include <climits>
#include <cstdint>
#include <functional>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "spinform/config.hpp"
#include "spinform/weyl.hpp"

namespace spinform {

namespace {

// Prefix-sum form of the cone test: heights are tracked times four so that
// half-integral simple-root coefficients stay in integer arithmetic.
std::optional<long> disp_height_x4(const std::vector<int>& disp2) {
  long h = 0;
  long s = 0;
  int l = static_cast<int>(disp2.size());
  for (int k = 0; k < l; ++k) {
    s += disp2[static_cast<size_t>(k)];
    if (s < 0) return std::nullopt;
    h += (k + 1 < l) ? 2 * s : s;
  }
  return h;
}

// Integer simple-root coefficients of a displacement, when they exist.
std::optional<std::vector<int>> disp_cone_coords(const std::vector<int>& disp2) {
  int l = static_cast<int>(disp2.size());
  std::vector<int> c(static_cast<size_t>(l));
  long s = 0;
  for (int k = 0; k < l; ++k) {
    s += disp2[static_cast<size_t>(k)];
    if (s < 0) return std::nullopt;
    if (k + 1 < l) {
      if (s % 2 != 0) return std::nullopt;
      c[static_cast<size_t>(k)] = static_cast<int>(s / 2);
    } else {
      if (s % 4 != 0) return std::nullopt;
      c[static_cast<size_t>(k)] = static_cast<int>(s / 4);
    }
  }
  return c;
}

std::vector<int> cone_to_disp(const std::vector<int>& c) {
  int l = static_cast<int>(c.size());
  std::vector<int> v(static_cast<size_t>(l));
  for (int k = 0; k < l; ++k) {
    long s_cur = (k + 1 < l) ? 2L * c[static_cast<size_t>(k)] : 4L * c[static_cast<size_t>(k)];
    long s_prev = k == 0 ? 0 : 2L * c[static_cast<size_t>(k) - 1];
    v[static_cast<size_t>(k)] = static_cast<int>(s_cur - s_prev);
  }
  return v;
}

long spread_x4(const Character& c) {
  long s = 0;
  for (const auto& [disp2, m] : c.terms()) s = std::max(s, Character::height_x4_of(disp2));
  return s;
}

// Ranks vectors c in N_0^l with sum <= depth; used by the dense kernel.
class ConeIndex {
 public:
  ConeIndex(int rank, int depth) : rank_(rank), depth_(depth) {
    counts_.assign(static_cast<size_t>(rank) + 1, std::vector<uint64_t>(static_cast<size_t>(depth) + 1, 0));
    for (int d = 0; d <= depth; ++d) counts_[0][static_cast<size_t>(d)] = 1;
    overflow_ = false;
    // count(k, d) = count(k-1, d) + count(k, d-1), count(0, d) = count(k, 0) = 1
    for (int k = 1; k <= rank; ++k)
      for (int d = 0; d <= depth; ++d) {
        uint64_t v = d == 0 ? 0 : counts_[static_cast<size_t>(k)][static_cast<size_t>(d) - 1];
        uint64_t w = counts_[static_cast<size_t>(k) - 1][static_cast<size_t>(d)];
        if (v > UINT64_MAX - w) {
          overflow_ = true;
          v = UINT64_MAX;
        } else {
          v += w;
        }
        counts_[static_cast<size_t>(k)][static_cast<size_t>(d)] = v;
      }
  }

  bool overflow() const { return overflow_; }
  uint64_t size() const { return counts_[static_cast<size_t>(rank_)][static_cast<size_t>(depth_)]; }

  uint64_t index_of(const std::vector<int>& c) const {
    uint64_t idx = 0;
    int budget = depth_;
    for (int k = 0; k < rank_; ++k) {
      int ck = c[static_cast<size_t>(k)];
      for (int t = 0; t < ck; ++t)
        idx += counts_[static_cast<size_t>(rank_ - k - 1)][static_cast<size_t>(budget - t)];
      budget -= ck;
    }
    return idx;
  }

  std::vector<std::vector<int>> all_vectors() const {
    std::vector<std::vector<int>> out;
    out.reserve(static_cast<size_t>(size()));
    std::vector<int> c(static_cast<size_t>(rank_), 0);
    emit(c, 0, depth_, out);
    return out;
  }

 private:
  void emit(std::vector<int>& c, int k, int budget, std::vector<std::vector<int>>& out) const {
    if (k == rank_) {
      out.push_back(c);
      return;
    }
    for (int t = 0; t <= budget; ++t) {
      c[static_cast<size_t>(k)] = t;
      emit(c, k + 1, budget - t, out);
    }
    c[static_cast<size_t>(k)] = 0;
  }

  int rank_, depth_;
  bool overflow_;
  std::vector<std::vector<uint64_t>> counts_;
};

constexpr uint64_t kDenseCellLimit = 1u << 22;
constexpr long kParallelWorkThreshold = 1L << 14;

struct SparseTerms {
  std::vector<std::vector<int>> cones;
  std::vector<const Int*> coeffs;
};

// Integer-cone view of the terms at heights <= 4*depth; nullopt if any term
// sits off the integer lattice.
std::optional<SparseTerms> integer_cone_terms(const Character& c, long limit_x4) {
  SparseTerms out;
  for (const auto& [disp2, m] : c.terms()) {
    if (Character::height_x4_of(disp2) > limit_x4) continue;
    auto cc = disp_cone_coords(disp2);
    if (!cc) return std::nullopt;
    out.cones.push_back(std::move(*cc));
    out.coeffs.push_back(&m);
  }
  return out;
}

Character build_from_map(Weight top, int depth, bool exact, std::map<std::vector<int>, Int>&& acc) {
  if (exact) {
    // exact characters advertise their actual spread
    long maxh = 0;
    for (const auto& [disp2, m] : acc)
      if (m != 0) maxh = std::max(maxh, Character::height_x4_of(disp2));
    depth = static_cast<int>((maxh + 3) / 4);
  }
  Character out(std::move(top), depth, exact);
  for (auto& [disp2, m] : acc)
    if (m != 0) out.add_term_disp(disp2, m);
  return out;
}

Character product_sparse(const Character& a, const Character& b, int result_depth, bool exact) {
  long limit = 4L * result_depth;
  std::map<std::vector<int>, Int> acc;
  for (const auto& [da, ma] : a.terms()) {
    long ha = Character::height_x4_of(da);
    if (!exact && ha > limit) continue;
    for (const auto& [db, mb] : b.terms()) {
      long hb = Character::height_x4_of(db);
      if (!exact && ha + hb > limit) continue;
      std::vector<int> d(da);
      for (size_t k = 0; k < d.size(); ++k) d[k] += db[k];
      acc[std::move(d)] += ma * mb;
    }
  }
  return build_from_map(a.top() + b.top(), result_depth, exact, std::move(acc));
}

// out[z] = sum_x a[x] * b[z-x] over integer cone coordinates; each output slot
// is written by exactly one iteration, so the loop parallelizes race-free.
Character product_dense(const SparseTerms& a, const SparseTerms& b, const Weight& top, int rank, int result_depth,
                        bool parallel) {
  ConeIndex index(rank, result_depth);
  std::vector<std::vector<int>> zs = index.all_vectors();
  std::vector<Int> b_dense(static_cast<size_t>(index.size()));
  for (size_t t = 0; t < b.cones.size(); ++t) b_dense[index.index_of(b.cones[t])] = *b.coeffs[t];

  std::vector<Int> out(zs.size());
  const long n = static_cast<long>(zs.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel)
#endif
  for (long zi = 0; zi < n; ++zi) {
    const std::vector<int>& z = zs[static_cast<size_t>(zi)];
    Int acc = 0;
    std::vector<int> y(static_cast<size_t>(rank));
    for (size_t t = 0; t < a.cones.size(); ++t) {
      const std::vector<int>& x = a.cones[t];
      bool ok = true;
      for (int k = 0; k < rank; ++k) {
        int yk = z[static_cast<size_t>(k)] - x[static_cast<size_t>(k)];
        if (yk < 0) {
          ok = false;
          break;
        }
        y[static_cast<size_t>(k)] = yk;
      }
      if (!ok) continue;
      const Int& bv = b_dense[index.index_of(y)];
      if (bv != 0) acc += *a.coeffs[t] * bv;
    }
    if (acc != 0) out[static_cast<size_t>(zi)] = std::move(acc);
  }
  (void)parallel;

  Character result(top, result_depth, false);
  for (size_t zi = 0; zi < zs.size(); ++zi)
    if (out[zi] != 0) result.add_term_disp(cone_to_disp(zs[zi]), out[zi]);
  return result;
}

// Truncated product without the public depth contract; callers are responsible
// for the exactness argument (e.g. one factor complete below the cutoff).
Character product_kernel(const Character& a, const Character& b, int result_depth, Exec exec) {
  if (a.rank() != b.rank()) throw RankError("character rank mismatch");
  bool exact = a.exact() && b.exact() && 4L * result_depth >= spread_x4(a) + spread_x4(b);
  int rank = a.rank();
  long limit = 4L * result_depth;

  auto ca = integer_cone_terms(a, exact ? LONG_MAX : limit);
  auto cb = integer_cone_terms(b, exact ? LONG_MAX : limit);
  if (exact || !ca || !cb) return product_sparse(a, b, result_depth, exact);

  ConeIndex probe(rank, result_depth);
  if (probe.overflow() || probe.size() > kDenseCellLimit) return product_sparse(a, b, result_depth, exact);

  // keep the sparse side small: work is |out| * |sparse side|
  const SparseTerms& small = ca->cones.size() <= cb->cones.size() ? *ca : *cb;
  const SparseTerms& large = ca->cones.size() <= cb->cones.size() ? *cb : *ca;
  long work = static_cast<long>(probe.size()) * static_cast<long>(small.cones.size());
  bool parallel = exec == Exec::parallel || (exec == Exec::automatic && work > kParallelWorkThreshold);
#ifndef _OPENMP
  parallel = false;
#endif
  return product_dense(small, large, a.top() + b.top(), rank, result_depth, parallel);
}

void require_valid_domain(const Weight& lam) {
  if (!lam.is_dominant_integral() && !lam.is_bounded_admissible())
    throw DomainError("character formula needs a dominant integral or bounded admissible weight, got " + lam.str());
}

}  // namespace

Character::Character(Weight top, int depth, bool exact) : top_(std::move(top)), depth_(depth), exact_(exact) {
  if (depth_ < 0) throw DomainError("negative character depth");
}

Character Character::unit(int rank) {
  Character c(Weight::zero(rank), 0, true);
  c.add_term_disp(std::vector<int>(static_cast<size_t>(rank), 0), 1);
  return c;
}

long Character::depth_x4() const { return 4L * depth_; }

long Character::height_x4_of(const std::vector<int>& disp2) {
  auto h = disp_height_x4(disp2);
  if (!h) throw ConsistencyError("term displacement outside the cone");
  return *h;
}

Int Character::coeff(const Weight& w) const {
  require_same_rank(top_, w);
  std::vector<int> disp2(static_cast<size_t>(rank()));
  for (int k = 0; k < rank(); ++k) disp2[static_cast<size_t>(k)] = top_.eps2_at(k) - w.eps2_at(k);
  auto it = terms_.find(disp2);
  return it == terms_.end() ? Int(0) : it->second;
}

void Character::add_term(const Weight& w, const Int& m) {
  require_same_rank(top_, w);
  std::vector<int> disp2(static_cast<size_t>(rank()));
  for (int k = 0; k < rank(); ++k) disp2[static_cast<size_t>(k)] = top_.eps2_at(k) - w.eps2_at(k);
  add_term_disp(std::move(disp2), m);
}

void Character::add_term_disp(std::vector<int> disp2, const Int& m) {
  if (m == 0) return;
  auto h = disp_height_x4(disp2);
  if (!h) throw ConsistencyError("term outside the cone below the top weight");
  if (!exact_ && *h > depth_x4()) throw ConsistencyError("term deeper than the advertised depth");
  auto [it, inserted] = terms_.try_emplace(std::move(disp2), m);
  if (!inserted) {
    it->second += m;
    if (it->second == 0) terms_.erase(it);
  }
}

Weight Character::weight_of(const std::vector<int>& disp2) const {
  std::vector<int> v(top_.eps2());
  for (size_t k = 0; k < v.size(); ++k) v[k] -= disp2[k];
  return Weight(std::move(v));
}

Int Character::mass() const {
  Int s = 0;
  for (const auto& [d, m] : terms_) s += m;
  return s;
}

Int Character::max_coeff() const {
  Int s = 0;
  for (const auto& [d, m] : terms_)
    if (m > s) s = m;
  return s;
}

bool Character::all_coeffs_nonnegative() const {
  for (const auto& [d, m] : terms_)
    if (m < 0) return false;
  return true;
}

Character Character::truncated(int depth) const {
  Character out(top_, depth, false);
  for (const auto& [disp2, m] : terms_)
    if (height_x4_of(disp2) <= 4L * depth) out.add_term_disp(disp2, m);
  return out;
}

std::vector<std::pair<Weight, Int>> Character::sorted_terms() const {
  std::vector<std::pair<const std::vector<int>*, const Int*>> refs;
  refs.reserve(terms_.size());
  for (const auto& [disp2, m] : terms_) refs.emplace_back(&disp2, &m);
  std::sort(refs.begin(), refs.end(), [](const auto& a, const auto& b) {
    long ha = height_x4_of(*a.first), hb = height_x4_of(*b.first);
    if (ha != hb) return ha < hb;
    return *a.first > *b.first;  // descending displacement = ascending weight
  });
  std::vector<std::pair<Weight, Int>> out;
  out.reserve(refs.size());
  for (const auto& [disp2, m] : refs) out.emplace_back(weight_of(*disp2), *m);
  return out;
}

Character add(const Character& a, const Character& b) {
  if (a.rank() != b.rank()) throw RankError("character rank mismatch");
  Weight top = join_upper(a.top(), b.top());
  auto shift_of = [&](const Character& c) {
    auto h = cone_height_x4(top, c.top());
    if (!h) throw ConsistencyError("join is not an upper bound");
    return *h;
  };
  long sa = shift_of(a), sb = shift_of(b);
  bool exact = a.exact() && b.exact();
  long limit_x4;
  int depth;
  if (exact) {
    limit_x4 = LONG_MAX;
    depth = 0;  // exact results advertise their support spread instead
  } else {
    long da = a.exact() ? LONG_MAX : a.depth_x4() + sa;
    long db = b.exact() ? LONG_MAX : b.depth_x4() + sb;
    limit_x4 = std::min(da, db);
    depth = static_cast<int>(limit_x4 / 4);
    limit_x4 = 4L * depth;  // round down to a whole height
  }

  std::map<std::vector<int>, Int> acc;
  auto fold = [&](const Character& c, const Weight& ctop) {
    std::vector<int> shift(static_cast<size_t>(top.rank()));
    for (int k = 0; k < top.rank(); ++k) shift[static_cast<size_t>(k)] = top.eps2_at(k) - ctop.eps2_at(k);
    for (const auto& [disp2, m] : c.terms()) {
      std::vector<int> d(disp2);
      for (size_t k = 0; k < d.size(); ++k) d[k] += shift[k];
      if (!exact && Character::height_x4_of(d) > limit_x4) continue;
      acc[std::move(d)] += m;
    }
  };
  fold(a, a.top());
  fold(b, b.top());
  return build_from_map(top, depth, exact, std::move(acc));
}

CharacterSum::CharacterSum(Weight ref_top, int depth)
    : top_(std::move(ref_top)), depth_(depth), guarantee_x4_(LONG_MAX) {}

void CharacterSum::add(const Character& c, const Int& scale) {
  auto shift_h = cone_height_x4(top_, c.top());
  if (!shift_h) throw ConsistencyError("summand top " + c.top().str() + " is not below " + top_.str());
  if (!c.exact()) guarantee_x4_ = std::min(guarantee_x4_, c.depth_x4() + *shift_h);
  if (scale == 0) return;
  std::vector<int> shift(static_cast<size_t>(top_.rank()));
  for (int k = 0; k < top_.rank(); ++k) shift[static_cast<size_t>(k)] = top_.eps2_at(k) - c.top().eps2_at(k);
  long limit = 4L * depth_;
  for (const auto& [disp2, m] : c.terms()) {
    std::vector<int> d(disp2);
    for (size_t k = 0; k < d.size(); ++k) d[k] += shift[k];
    if (Character::height_x4_of(d) > limit) continue;
    acc_[std::move(d)] += m * scale;
  }
}

Character CharacterSum::finish() const {
  if (guarantee_x4_ < 4L * depth_)
    throw TruncationError("summands guarantee only depth " + std::to_string(guarantee_x4_ / 4));
  Character out(top_, depth_, false);
  for (const auto& [d, m] : acc_)
    if (m != 0) out.add_term_disp(d, m);
  return out;
}

Character scaled(const Character& a, const Int& factor) {
  Character out(a.top(), a.depth(), a.exact());
  if (factor == 0) return out;
  for (const auto& [disp2, m] : a.terms()) out.add_term_disp(disp2, m * factor);
  return out;
}

Character mul(const Character& a, const Character& b, int result_depth, Exec exec) {
  if (a.rank() != b.rank()) throw RankError("character rank mismatch");
  long guarantee;
  if (a.exact() && b.exact())
    guarantee = LONG_MAX;
  else if (a.exact())
    guarantee = b.depth_x4() - spread_x4(a);
  else if (b.exact())
    guarantee = a.depth_x4() - spread_x4(b);
  else
    guarantee = std::min(a.depth_x4(), b.depth_x4());
  if (4L * result_depth > guarantee)
    throw TruncationError("requested product depth " + std::to_string(result_depth) +
                          " exceeds the guaranteed depth " + std::to_string(guarantee / 4));
  return product_kernel(a, b, result_depth, exec);
}

Character mul_serial(const Character& a, const Character& b, int result_depth) {
  if (a.rank() != b.rank()) throw RankError("character rank mismatch");
  bool exact = a.exact() && b.exact() && 4L * result_depth >= spread_x4(a) + spread_x4(b);
  return product_sparse(a, b, result_depth, exact);
}

bool equal_to_depth(const Character& a, const Character& b, int depth) {
  if (a.rank() != b.rank()) throw RankError("character rank mismatch");
  Weight top = join_upper(a.top(), b.top());
  long limit = 4L * depth;
  auto collect = [&](const Character& c) {
    auto shift_h = cone_height_x4(top, c.top());
    if (!shift_h) throw ConsistencyError("join is not an upper bound");
    if (!c.exact() && c.depth_x4() + *shift_h < limit)
      throw TruncationError("character does not guarantee depth " + std::to_string(depth));
    std::map<std::vector<int>, Int> out;
    std::vector<int> shift(static_cast<size_t>(top.rank()));
    for (int k = 0; k < top.rank(); ++k) shift[static_cast<size_t>(k)] = top.eps2_at(k) - c.top().eps2_at(k);
    for (const auto& [disp2, m] : c.terms()) {
      std::vector<int> d(disp2);
      for (size_t k = 0; k < d.size(); ++k) d[k] += shift[k];
      if (Character::height_x4_of(d) <= limit) out.emplace(std::move(d), m);
    }
    return out;
  };
  return collect(a) == collect(b);
}

bool exact_equal(const Character& a, const Character& b) {
  if (!a.exact() || !b.exact()) throw DomainError("exact_equal needs exact characters");
  if (a.rank() != b.rank()) return false;
  auto ta = a.sorted_terms(), tb = b.sorted_terms();
  if (ta.size() != tb.size()) return false;
  for (size_t k = 0; k < ta.size(); ++k)
    if (ta[k].first != tb[k].first || ta[k].second != tb[k].second) return false;
  return true;
}

Character weyl_denominator_inverse_ordered(int rank, int depth, const std::vector<Root>& order, Exec exec) {
  check_rank_guard(rank);
  check_depth_guard(depth);
  Character acc = Character::unit(rank);
  acc = acc.truncated(depth);
  for (const Root& alpha : order) {
    int ht = alpha.height(rank);
    Weight root_w = alpha.to_weight(rank);
    Character series(Weight::zero(rank), depth, false);
    for (int k = 0; k * ht <= depth; ++k) {
      std::vector<int> disp2(static_cast<size_t>(rank));
      for (int c = 0; c < rank; ++c) disp2[static_cast<size_t>(c)] = k * root_w.eps2_at(c);
      series.add_term_disp(std::move(disp2), 1);
    }
    // the dropped geometric-series tail only affects heights beyond the cutoff
    acc = product_kernel(acc, series, depth, exec);
  }
  return acc;
}

Character weyl_denominator_inverse(int rank, int depth) {
  static std::mutex mtx;
  static std::map<int, Character> cache;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(rank);
  if (it == cache.end() || it->second.depth() < depth) {
    Character fresh = weyl_denominator_inverse_ordered(rank, depth, positive_roots(rank), Exec::automatic);
    it = cache.insert_or_assign(it == cache.end() ? cache.begin() : it, rank, std::move(fresh));
  }
  if (it->second.depth() == depth) return it->second;
  return it->second.truncated(depth);
}

Character spinor_character(int rank, Parity parity, int depth) {
  check_rank_guard(rank);
  check_depth_guard(depth);
  std::vector<HalfInt> tf(static_cast<size_t>(rank), HalfInt(0));
  tf[static_cast<size_t>(rank) - 1] = HalfInt::from_twice(-1);
  if (parity == Parity::odd) {
    if (rank >= 2) tf[static_cast<size_t>(rank) - 2] = HalfInt(1);
    tf[static_cast<size_t>(rank) - 1] = HalfInt::from_twice(-3);
  }
  Character out(Weight::from_fundamental(tf), depth, false);

  // unit height (times four) of one step in lattice direction m
  auto unit4 = [&](int m) { return 4L * (rank - 1 - m) + 2; };
  long budget = 4L * depth + (parity == Parity::odd ? 2 : 0);
  std::vector<int> n(static_cast<size_t>(rank), 0);
  auto emit = [&](const std::vector<int>& nv) {
    long sum = 0;
    for (int v : nv) sum += v;
    bool odd = sum % 2 != 0;
    if ((parity == Parity::odd) != odd) return;
    std::vector<int> disp2(static_cast<size_t>(rank));
    for (int k = 0; k < rank; ++k) disp2[static_cast<size_t>(k)] = 2 * nv[static_cast<size_t>(k)];
    if (parity == Parity::odd) disp2[static_cast<size_t>(rank) - 1] -= 2;
    if (Character::height_x4_of(disp2) > 4L * depth) return;
    out.add_term_disp(std::move(disp2), 1);
  };
  std::function<void(int, long)> walk = [&](int m, long used) {
    if (m == rank) {
      emit(n);
      return;
    }
    for (int v = 0; used + unit4(m) * v <= budget; ++v) {
      n[static_cast<size_t>(m)] = v;
      walk(m + 1, used + unit4(m) * v);
    }
    n[static_cast<size_t>(m)] = 0;
  };
  walk(0, 0);
  return out;
}

Character kac_wakimoto_character(const Weight& lam, int depth, Exec exec) {
  int rank = lam.rank();
  check_rank_guard(rank);
  check_depth_guard(depth);
  require_valid_domain(lam);

  Weight rho = Weight::rho(rank);
  Weight shifted = lam + rho;
  std::map<std::vector<int>, Int> num_map;
  auto visit = [&](const weyl::Element& w, int d) {
    Weight mu = weyl::act(w, shifted) - rho;
    std::vector<int> disp2(static_cast<size_t>(rank));
    for (int k = 0; k < rank; ++k) disp2[static_cast<size_t>(k)] = lam.eps2_at(k) - mu.eps2_at(k);
    auto h = disp_height_x4(disp2);
    if (!h) throw ConsistencyError("numerator term above the highest weight");
    if (*h > 4L * depth) return;
    num_map[std::move(disp2)] += d;
  };
  if (lam.is_dominant_integral()) {
    // every reflection is integral here, so the integral subgroup is all of W
    weyl::for_each_element(rank, [&](const weyl::Element& w, int d) { visit(w, d); });
  } else {
    for (const auto& [w, d] : weyl::integral_subgroup(lam)) visit(w, d);
  }
  Character numerator = build_from_map(lam, depth, false, std::move(num_map));

  // The numerator is complete below the cutoff (omitted terms sit deeper than
  // `depth`), so the truncated product is exact to `depth` even though the
  // public contract for exact-by-truncated products is more conservative.
  Character result = product_kernel(numerator, weyl_denominator_inverse(rank, depth), depth, exec);
  if (result.coeff(lam) != 1) throw ConsistencyError("character formula lost the highest weight coefficient");
  return result;
}

nlohmann::json to_json(const Character& c) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [w, m] : c.sorted_terms()) {
    nlohmann::json t{{"weight", to_json(w)}};
    if (m.fits_slong_p())
      t["multiplicity"] = static_cast<long>(m.get_si());
    else
      t["multiplicity"] = m.get_str();
    terms.push_back(std::move(t));
  }
  return nlohmann::json{
      {"top", to_json(c.top())}, {"depth", c.depth()}, {"exact", c.exact()}, {"terms", terms}};
}

SuiteReport verify_spinor_kw(int rank, int depth) {
  SuiteReport report{"spinor-vs-kac-wakimoto", 0, {}, {}};
  for (Parity parity : {Parity::even, Parity::odd}) {
    ++report.cases;
    std::string name = "rank " + std::to_string(rank) + (parity == Parity::even ? " even" : " odd");
    Character listed = spinor_character(rank, parity, depth);
    Character formula = kac_wakimoto_character(listed.top(), depth);
    if (!equal_to_depth(listed, formula, depth))
      report.fail(name, "character formula disagrees with the lattice enumeration");
    if (!formula.all_coeffs_nonnegative()) report.fail(name, "negative coefficient in character formula");
  }
  return report;
}

SuiteReport verify_depth_stability(int rank, int depth) {
  SuiteReport report{"depth-stability", 0, {}, {}};
  auto check = [&](const std::string& name, const Character& shallow, const Character& deep) {
    ++report.cases;
    if (!equal_to_depth(shallow, deep, depth))
      report.fail(name, "coefficients inside depth " + std::to_string(depth) + " changed at depth + 2");
  };
  check("denominator-inverse", weyl_denominator_inverse_ordered(rank, depth, positive_roots(rank), Exec::automatic),
        weyl_denominator_inverse_ordered(rank, depth + 2, positive_roots(rank), Exec::automatic));
  check("spinor-even", spinor_character(rank, Parity::even, depth), spinor_character(rank, Parity::even, depth + 2));
  check("spinor-odd", spinor_character(rank, Parity::odd, depth), spinor_character(rank, Parity::odd, depth + 2));
  Character even_depth = spinor_character(rank, Parity::even, depth);
  check("kac-wakimoto-basic", kac_wakimoto_character(even_depth.top(), depth),
        kac_wakimoto_character(even_depth.top(), depth + 2));
  std::vector<HalfInt> f(static_cast<size_t>(rank), HalfInt(0));
  f[0] = HalfInt(1);
  f[static_cast<size_t>(rank) - 1] = HalfInt::from_twice(-1);
  Weight sample = Weight::from_fundamental(f);
  check("kac-wakimoto-sample", kac_wakimoto_character(sample, depth), kac_wakimoto_character(sample, depth + 2));
  return report;
}

}  // namespace spinform
