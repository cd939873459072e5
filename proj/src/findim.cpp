#include "spinform/findim.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "spinform/config.hpp"

namespace spinform {

namespace {

Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Int r = 1;
  for (int t = 0; t < k; ++t) {
    r *= n - t;
    r /= t + 1;
  }
  return r;
}

// Dominant integral weights mu <= lam: descending non-negative integral tuples
// bounded by the first coordinate of lam, filtered through the cone test.
std::vector<Weight> dominant_weights_below(const Weight& lam) {
  int l = lam.rank();
  std::vector<Weight> out;
  std::vector<int> a(static_cast<size_t>(l), 0);
  std::function<void(int, int)> walk = [&](int k, int bound) {
    if (k == l) {
      Weight mu{std::vector<int>(a)};
      if (cone_coords(lam, mu)) out.push_back(std::move(mu));
      return;
    }
    for (int v = bound; v >= 0; v -= 2) {
      a[static_cast<size_t>(k)] = v;
      walk(k + 1, v);
    }
  };
  walk(0, lam.eps2_at(0));
  return out;
}

Weight dominant_representative(const Weight& w) {
  std::vector<int> v(w.eps2());
  for (int& c : v) c = std::abs(c);
  std::sort(v.begin(), v.end(), std::greater<int>());
  return Weight(std::move(v));
}

// All distinct signed permutations of the coordinates of a dominant weight.
std::vector<Weight> weyl_orbit_of_dominant(const Weight& mu) {
  std::vector<int> base(mu.eps2());
  std::sort(base.begin(), base.end());
  std::vector<Weight> out;
  do {
    std::vector<size_t> nonzero;
    for (size_t k = 0; k < base.size(); ++k)
      if (base[k] != 0) nonzero.push_back(k);
    for (uint32_t mask = 0; mask < (1u << nonzero.size()); ++mask) {
      std::vector<int> v(base);
      for (size_t b = 0; b < nonzero.size(); ++b)
        if ((mask >> b) & 1u) v[nonzero[b]] = -v[nonzero[b]];
      out.emplace_back(std::move(v));
    }
  } while (std::next_permutation(base.begin(), base.end()));
  return out;
}

}  // namespace

ModuleLabel ModuleLabel::finite(Weight w) {
  if (!w.is_dominant_integral())
    throw DomainError("finite label needs a dominant integral weight, got " + w.str());
  return ModuleLabel{Family::finite, std::move(w)};
}

ModuleLabel ModuleLabel::bounded(Weight w) {
  if (!w.is_bounded_admissible())
    throw DomainError("bounded label needs an admissible weight, got " + w.str());
  return ModuleLabel{Family::bounded, std::move(w)};
}

std::string ModuleLabel::str() const {
  return (family == Family::finite ? "F" : "L") + hw.str();
}

void Decomposition::add(ModuleLabel label, int multiplicity) {
  if (multiplicity <= 0) throw DomainError("summand multiplicity must be positive");
  summands[std::move(label)] += multiplicity;
}

int Decomposition::multiplicity(const ModuleLabel& label) const {
  auto it = summands.find(label);
  return it == summands.end() ? 0 : it->second;
}

int Decomposition::total_count() const {
  int n = 0;
  for (const auto& [label, m] : summands) n += m;
  return n;
}

bool Decomposition::multiplicity_free() const {
  for (const auto& [label, m] : summands)
    if (m != 1) return false;
  return true;
}

std::string Decomposition::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [label, m] : summands) {
    if (!first) os << " + ";
    first = false;
    if (m != 1) os << m << "*";
    os << label.str();
  }
  if (first) os << "0";
  return os.str();
}

nlohmann::json to_json(const Decomposition& d) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [label, m] : d.summands) {
    nlohmann::json coords = nlohmann::json::array();
    for (const HalfInt& h : label.hw.fundamental_coords()) coords.push_back(h.str());
    arr.push_back(nlohmann::json{{"family", label.family == ModuleLabel::Family::finite ? "Finite" : "Bounded"},
                                 {"fundamental_coords", coords},
                                 {"multiplicity", m}});
  }
  return nlohmann::json{{"summands", arr}};
}

Int weyl_dimension(const Weight& lam) {
  if (!lam.is_dominant_integral())
    throw DomainError("Weyl dimension needs a dominant integral weight, got " + lam.str());
  int rank = lam.rank();
  Weight shifted = lam + Weight::rho(rank);
  Weight rho = Weight::rho(rank);
  Int num = 1, den = 1;
  for (const Root& alpha : positive_roots(rank)) {
    num *= alpha.pairing2(shifted);
    den *= alpha.pairing2(rho);
  }
  Int q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (r != 0) throw ConsistencyError("Weyl dimension quotient is not integral");
  return q;
}

Character freudenthal_multiplicities(const Weight& lam, Exec exec) {
  if (!lam.is_dominant_integral())
    throw DomainError("Freudenthal recursion needs a dominant integral weight, got " + lam.str());
  int rank = lam.rank();
  check_rank_guard(rank);
  Int dim = weyl_dimension(lam);
  if (!dim.fits_slong_p()) throw ResourceError("module dimension overflows the guard");
  check_dimension_guard(dim.get_si());

  std::vector<Weight> dominants = dominant_weights_below(lam);
  std::vector<long> heights(dominants.size());
  for (size_t k = 0; k < dominants.size(); ++k) heights[k] = *cone_height_x4(lam, dominants[k]);
  std::vector<size_t> order(dominants.size());
  for (size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    if (heights[a] != heights[b]) return heights[a] < heights[b];
    return dominants[a] < dominants[b];
  });

  std::unordered_map<Weight, Int, WeightHash> mult;
  mult.reserve(dominants.size() * 2);
  const std::vector<Root> roots = positive_roots(rank);
  const Weight rho = Weight::rho(rank);
  const long norm_top = inner_x4(lam + rho, lam + rho);

  auto compute_one = [&](const Weight& mu) -> Int {
    Int acc = 0;
    for (const Root& alpha : roots) {
      Weight alpha_w = alpha.to_weight(rank);
      Weight nu = mu;
      while (true) {
        nu = nu + alpha_w;
        if (!cone_height_x4(lam, nu)) break;
        Weight rep = dominant_representative(nu);
        auto it = mult.find(rep);
        if (it == mult.end()) continue;
        acc += it->second * inner_x4(nu, alpha_w);
      }
    }
    long denom = norm_top - inner_x4(mu + rho, mu + rho);
    if (denom == 0) {
      if (acc != 0) throw ConsistencyError("Freudenthal denominator vanished on a live weight");
      return 0;
    }
    Int num = 2 * acc;
    Int q, r;
    Int d(denom);
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), d.get_mpz_t());
    if (r != 0) throw ConsistencyError("Freudenthal quotient is not integral");
    return q;
  };

  bool parallel = exec != Exec::serial;
#ifndef _OPENMP
  parallel = false;
#endif

  size_t head = 0;
  while (head < order.size()) {
    size_t tail = head;
    while (tail < order.size() && heights[order[tail]] == heights[order[head]]) ++tail;
    if (heights[order[head]] == 0) {
      for (size_t k = head; k < tail; ++k) mult[dominants[order[k]]] = 1;  // the highest weight itself
    } else {
      std::vector<Int> level(tail - head);
      const long n = static_cast<long>(tail - head);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel && n > 4)
#endif
      for (long k = 0; k < n; ++k)
        level[static_cast<size_t>(k)] = compute_one(dominants[order[head + static_cast<size_t>(k)]]);
      (void)parallel;
      for (size_t k = head; k < tail; ++k) {
        Int& m = level[k - head];
        if (m != 0) mult[dominants[order[k]]] = std::move(m);
      }
    }
    head = tail;
  }

  long max_h = 0;
  Character out(lam, 0, true);
  {
    // depth advertises the deepest support height
    for (const auto& [mu, m] : mult)
      for (const Weight& w : weyl_orbit_of_dominant(mu)) {
        auto h = cone_height_x4(lam, w);
        if (!h) throw ConsistencyError("orbit point escaped the cone");
        max_h = std::max(max_h, *h);
      }
  }
  out = Character(lam, static_cast<int>((max_h + 3) / 4), true);
  for (const auto& [mu, m] : mult)
    for (const Weight& w : weyl_orbit_of_dominant(mu)) out.add_term(w, m);
  if (out.mass() != dim) throw ConsistencyError("character mass does not match the Weyl dimension");
  return out;
}

Character wedge_character(int rank, int i) {
  check_rank_guard(rank);
  if (i < 0 || i > 2 * rank) throw DomainError("wedge degree out of range");
  std::vector<Weight> items;
  for (int k = 0; k < rank; ++k) items.push_back(Weight::basis_vector(rank, k));
  for (int k = 0; k < rank; ++k) items.push_back(-Weight::basis_vector(rank, k));

  // subset DP; iterate counts high to low so each basis weight is used once
  std::vector<std::map<Weight, Int>> dp(static_cast<size_t>(i) + 1);
  dp[0][Weight::zero(rank)] = 1;
  for (const Weight& item : items)
    for (int j = i; j >= 1; --j)
      for (const auto& [w, m] : dp[static_cast<size_t>(j) - 1]) dp[static_cast<size_t>(j)][w + item] += m;

  Weight top = Weight::fundamental(rank, std::min(i, 2 * rank - i));
  long max_h = 0;
  for (const auto& [w, m] : dp[static_cast<size_t>(i)]) {
    auto h = cone_height_x4(top, w);
    if (!h) throw ConsistencyError("wedge weight above the expected top");
    max_h = std::max(max_h, *h);
  }
  Character out(top, static_cast<int>((max_h + 3) / 4), true);
  for (const auto& [w, m] : dp[static_cast<size_t>(i)])
    if (m != 0) out.add_term(w, m);
  return out;
}

Decomposition wedge_decomposition(int rank, int i) {
  check_rank_guard(rank);
  if (i < 0 || i > 2 * rank) throw DomainError("wedge degree out of range");
  int eff = std::min(i, 2 * rank - i);
  Decomposition d;
  for (int p = 0; 2 * p <= eff; ++p) d.add(ModuleLabel::finite(Weight::fundamental(rank, eff - 2 * p)));
  return d;
}

SuiteReport verify_wedge(int rank) {
  SuiteReport report{"wedge-decomposition", 0, {}, {}};
  std::map<Weight, Character> freudenthal_cache;
  for (int k = 0; k <= rank; ++k) {
    Weight w = Weight::fundamental(rank, k);
    freudenthal_cache.emplace(w, freudenthal_multiplicities(w));
  }

  for (int i = 0; i <= 2 * rank; ++i) {
    ++report.cases;
    std::string name = "l=" + std::to_string(rank) + " i=" + std::to_string(i);
    Decomposition dec = wedge_decomposition(rank, i);

    Int dim_sum = 0;
    for (const auto& [label, m] : dec.summands) dim_sum += m * weyl_dimension(label.hw);
    if (dim_sum != binomial(2 * rank, i)) {
      report.fail(name, "dimension sum " + dim_sum.get_str() + " != C(2l,i)");
      continue;
    }

    Character sum = Character::unit(rank);
    bool first = true;
    for (const auto& [label, m] : dec.summands) {
      Character piece = scaled(freudenthal_cache.at(label.hw), m);
      sum = first ? std::move(piece) : add(sum, piece);
      first = false;
    }
    if (!exact_equal(sum, wedge_character(rank, i)))
      report.fail(name, "Freudenthal character sum differs from the wedge character");
  }
  return report;
}

SuiteReport verify_finite_oracles(int rank, int max_sum, int depth) {
  SuiteReport report{"finite-character-oracles", 0, {}, {}};
  std::vector<std::vector<int>> coeff_sets;
  std::vector<int> f(static_cast<size_t>(rank), 0);
  std::function<void(int, int)> walk = [&](int k, int left) {
    if (k == rank) {
      coeff_sets.push_back(f);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      f[static_cast<size_t>(k)] = v;
      walk(k + 1, left - v);
    }
    f[static_cast<size_t>(k)] = 0;
  };
  walk(0, max_sum);

  for (const std::vector<int>& coords : coeff_sets) {
    std::vector<HalfInt> hf(coords.size());
    for (size_t k = 0; k < coords.size(); ++k) hf[k] = HalfInt(coords[k]);
    Weight lam = Weight::from_fundamental(hf);
    ++report.cases;
    Character direct = freudenthal_multiplicities(lam);
    Character formula = kac_wakimoto_character(lam, depth);
    if (!equal_to_depth(direct, formula, depth))
      report.fail(lam.str(), "Freudenthal and character-formula multiplicities disagree");
  }
  return report;
}

}  // namespace spinform
