#include "spinform/forms.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "spinform/config.hpp"

namespace spinform {

namespace {

long spread_x4_of(const Character& c) {
  long s = 0;
  for (const auto& [disp2, m] : c.terms()) s = std::max(s, Character::height_x4_of(disp2));
  return s;
}

Weight basic_spinor_top(int rank) {
  std::vector<HalfInt> f(static_cast<size_t>(rank), HalfInt(0));
  f[static_cast<size_t>(rank) - 1] = HalfInt::from_twice(-1);
  return Weight::from_fundamental(f);
}

// Sum of character-formula characters over a decomposition, each computed just
// deep enough to be exact to `depth` below the reference top.
Character kw_sum(const Decomposition& dec, const Weight& ref_top, int depth) {
  CharacterSum sum(ref_top, depth);
  for (const auto& [label, mult] : dec.summands) {
    auto shift = cone_height_x4(ref_top, label.hw);
    if (!shift) throw ConsistencyError("summand top is not below the product top");
    int local_depth = std::max(0, depth - static_cast<int>(*shift / 4));
    sum.add(kac_wakimoto_character(label.hw, local_depth), mult);
  }
  return sum.finish();
}

}  // namespace

std::vector<NodeIndex> node_indices(int rank) {
  if (rank < 2) throw RankError("node set needs rank >= 2");
  std::vector<NodeIndex> out;
  for (int i = 0; i <= 2 * rank; ++i)
    for (int j = 0; j <= std::min(i, 2 * rank - i); ++j) out.push_back({i, j});
  return out;
}

bool node_in_range(int rank, NodeIndex idx) {
  if (idx.i < 0 || idx.j < 0 || idx.i > 2 * rank) return false;
  return idx.j <= std::min(idx.i, 2 * rank - idx.i);
}

std::vector<Weight> spinor_product_weights(const Weight& nu) {
  if (!nu.is_dominant_integral())
    throw DomainError("spinor tensor rule needs a dominant integral weight, got " + nu.str());
  int rank = nu.rank();
  std::vector<int> bounds(static_cast<size_t>(rank));
  std::vector<int> f2 = nu.fundamental2();
  for (int k = 0; k + 1 < rank; ++k) bounds[static_cast<size_t>(k)] = f2[static_cast<size_t>(k)] / 2;
  bounds[static_cast<size_t>(rank) - 1] = f2[static_cast<size_t>(rank) - 1] + 1;  // 2*nu_l + 1

  std::vector<Weight> out;
  std::vector<int> d(static_cast<size_t>(rank), 0);
  std::function<void(int, int)> walk = [&](int k, int parity) {
    if (k == rank) {
      if (parity == 0) {
        std::vector<int> eps2(nu.eps2());
        for (int m = 0; m < rank; ++m) eps2[static_cast<size_t>(m)] -= 2 * d[static_cast<size_t>(m)];
        out.emplace_back(std::move(eps2));
      }
      return;
    }
    for (int v = 0; v <= bounds[static_cast<size_t>(k)]; ++v) {
      d[static_cast<size_t>(k)] = v;
      walk(k + 1, (parity + v) % 2);
    }
    d[static_cast<size_t>(k)] = 0;
  };
  walk(0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

Decomposition tensor_with_spinor(const Weight& nu) {
  int rank = nu.rank();
  Weight half_last = basic_spinor_top(rank);  // -varpi_l/2 in epsilon coordinates
  Decomposition dec;
  for (const Weight& kappa : spinor_product_weights(nu)) {
    Weight hw = kappa + half_last;
    if (!hw.is_bounded_admissible())
      throw ConsistencyError("spinor tensor rule produced inadmissible label " + hw.str());
    dec.add(ModuleLabel::bounded(std::move(hw)));
  }
  return dec;
}

std::vector<Weight> defining_weight_set(int rank) {
  check_rank_guard(rank);
  std::vector<Weight> out;
  for (int k = 0; k < rank; ++k) out.push_back(Weight::basis_vector(rank, k));
  for (int k = 0; k < rank; ++k) out.push_back(-Weight::basis_vector(rank, k));
  return out;
}

Decomposition tensor_with_defining(const Weight& lam) {
  if (!lam.is_bounded_admissible())
    throw DomainError("defining tensor rule needs a bounded admissible weight, got " + lam.str());
  Decomposition dec;
  for (const Weight& shift : defining_weight_set(lam.rank())) {
    Weight candidate = lam + shift;
    if (candidate.is_bounded_admissible()) dec.add(ModuleLabel::bounded(std::move(candidate)));
  }
  return dec;
}

Decomposition forms_spinor_decomposition(int rank, int i) {
  check_rank_guard(rank);
  if (i < 0 || i > 2 * rank) throw DomainError("form degree out of range");
  Decomposition out;
  for (const auto& [label, mult] : wedge_decomposition(rank, i).summands) {
    Decomposition piece = tensor_with_spinor(label.hw);
    for (const auto& [inner, m] : piece.summands) out.add(inner, m * mult);
  }
  if (!out.multiplicity_free())
    throw ConsistencyError("form decomposition is not multiplicity free at degree " + std::to_string(i));
  return out;
}

ModuleLabel node_label(int rank, NodeIndex idx) {
  if (!node_in_range(rank, idx)) throw DomainError("node " + idx.str() + " outside the index set");
  std::vector<HalfInt> f(static_cast<size_t>(rank), HalfInt(0));
  if (idx.i == rank && idx.j == rank - 1) {
    f[static_cast<size_t>(rank) - 2] = HalfInt(2);
    f[static_cast<size_t>(rank) - 1] = HalfInt::from_twice(-3);
  } else if (idx.i == rank && idx.j == rank) {
    f[static_cast<size_t>(rank) - 1] = HalfInt::from_twice(1);
  } else if (idx.j == 0) {
    if (idx.i % 2 == 0) {
      f[static_cast<size_t>(rank) - 1] = HalfInt::from_twice(-1);
    } else {
      f[static_cast<size_t>(rank) - 2] = HalfInt(1);
      f[static_cast<size_t>(rank) - 1] = HalfInt::from_twice(-3);
    }
  } else if (idx.i % 2 == idx.j % 2) {
    f[static_cast<size_t>(idx.j) - 1] = HalfInt(1);
    f[static_cast<size_t>(rank) - 1] = HalfInt::from_twice(-1);
  } else {
    f[static_cast<size_t>(idx.j) - 1] = f[static_cast<size_t>(idx.j) - 1] + HalfInt(1);
    f[static_cast<size_t>(rank) - 2] = f[static_cast<size_t>(rank) - 2] + HalfInt(1);
    f[static_cast<size_t>(rank) - 1] = HalfInt::from_twice(-3);
  }
  return ModuleLabel::bounded(Weight::from_fundamental(f));
}

namespace {

// Transcribed node labels of the rank-3 reference table, as doubled
// fundamental coordinates.
struct FixtureEntry {
  int i, j;
  int f2[3];
};
constexpr FixtureEntry kRank3Table[] = {
    {0, 0, {0, 0, -1}}, {1, 0, {0, 2, -3}}, {1, 1, {2, 0, -1}}, {2, 0, {0, 0, -1}},
    {2, 1, {2, 2, -3}}, {2, 2, {0, 2, -1}}, {3, 0, {0, 2, -3}}, {3, 1, {2, 0, -1}},
    {3, 2, {0, 4, -3}}, {3, 3, {0, 0, 1}},  {4, 0, {0, 0, -1}}, {4, 1, {2, 2, -3}},
    {4, 2, {0, 2, -1}}, {5, 0, {0, 2, -3}}, {5, 1, {2, 0, -1}}, {6, 0, {0, 0, -1}},
};

}  // namespace

SuiteReport verify_forms_table(int rank, int depth) {
  SuiteReport report{"forms-decomposition", 0, {}, {}};

  std::vector<Decomposition> columns;
  columns.reserve(static_cast<size_t>(2 * rank) + 1);
  for (int i = 0; i <= 2 * rank; ++i) columns.push_back(forms_spinor_decomposition(rank, i));

  for (int i = 0; i <= 2 * rank; ++i) {
    const Decomposition& computed = columns[static_cast<size_t>(i)];
    std::string name = "l=" + std::to_string(rank) + " i=" + std::to_string(i);

    ++report.cases;
    int expected_count = std::min(i, 2 * rank - i) + 1;
    if (computed.distinct_count() != expected_count)
      report.fail(name, "expected " + std::to_string(expected_count) + " summands, got " +
                            std::to_string(computed.distinct_count()));

    ++report.cases;
    Decomposition from_table;
    for (int j = 0; j <= std::min(i, 2 * rank - i); ++j) from_table.add(node_label(rank, {i, j}));
    if (!(from_table == computed))
      report.fail(name, "closed-form labels " + from_table.str() + " differ from computed " + computed.str());

    ++report.cases;
    if (!(computed == columns[static_cast<size_t>(2 * rank - i)]))
      report.fail(name, "degree " + std::to_string(i) + " and its dual decompose differently");

    if (i <= rank) {
      ++report.cases;
      if (!exact_equal(wedge_character(rank, i), wedge_character(rank, 2 * rank - i)))
        report.fail(name, "wedge characters of dual degrees differ");
    }

    // the finite spread inflates the spinor expansion, so cap the character
    // check at high rank to stay inside the resource guards
    int identity_cap = rank <= 4 ? rank : 2;
    if (i <= identity_cap) {
      ++report.cases;
      Character wedge = wedge_character(rank, i);
      int spread = static_cast<int>((spread_x4_of(wedge) + 3) / 4);
      Character lhs = mul(wedge, spinor_character(rank, Parity::even, depth + spread), depth);
      Character rhs = kw_sum(computed, lhs.top(), depth);
      if (!equal_to_depth(lhs, rhs, depth))
        report.fail(name, "character identity fails at depth " + std::to_string(depth));
    }
  }

  if (rank == 3) {
    ++report.cases;
    for (const FixtureEntry& e : kRank3Table) {
      std::vector<HalfInt> f{HalfInt::from_twice(e.f2[0]), HalfInt::from_twice(e.f2[1]),
                             HalfInt::from_twice(e.f2[2])};
      Weight expected = Weight::from_fundamental(f);
      ModuleLabel got = node_label(rank, {e.i, e.j});
      if (got.hw != expected) {
        report.fail("reference table (" + std::to_string(e.i) + "," + std::to_string(e.j) + ")",
                    "label " + got.hw.str() + " differs from transcribed " + expected.str());
        break;
      }
    }
  }
  return report;
}

SuiteReport verify_spinor_tensor_identity(int rank, int max_sum, int depth) {
  SuiteReport report{"spinor-tensor-identity", 0, {}, {}};
  std::vector<int> f(static_cast<size_t>(rank), 0);
  std::vector<Weight> nus;
  std::function<void(int, int)> walk = [&](int k, int left) {
    if (k == rank) {
      std::vector<HalfInt> hf(f.size());
      for (size_t m = 0; m < f.size(); ++m) hf[m] = HalfInt(f[m]);
      nus.push_back(Weight::from_fundamental(hf));
      return;
    }
    for (int v = 0; v <= left; ++v) {
      f[static_cast<size_t>(k)] = v;
      walk(k + 1, left - v);
    }
    f[static_cast<size_t>(k)] = 0;
  };
  walk(0, max_sum);

  for (const Weight& nu : nus) {
    ++report.cases;
    Character finite = freudenthal_multiplicities(nu);
    int spread = static_cast<int>((spread_x4_of(finite) + 3) / 4);
    Character lhs = mul(finite, spinor_character(rank, Parity::even, depth + spread), depth);
    Character rhs = kw_sum(tensor_with_spinor(nu), lhs.top(), depth);
    if (!equal_to_depth(lhs, rhs, depth))
      report.fail(nu.str(), "tensor-with-spinor identity fails at depth " + std::to_string(depth));
  }
  return report;
}

SuiteReport verify_defining_tensor_identity(int rank, int depth) {
  SuiteReport report{"defining-tensor-identity", 0, {}, {}};
  std::set<Weight> labels;
  for (const NodeIndex& idx : node_indices(rank)) labels.insert(node_label(rank, idx).hw);

  Character defining = wedge_character(rank, 1);
  int spread = static_cast<int>((spread_x4_of(defining) + 3) / 4);
  for (const Weight& lam : labels) {
    ++report.cases;
    Character lhs = mul(kac_wakimoto_character(lam, depth + spread), defining, depth);
    Character rhs = kw_sum(tensor_with_defining(lam), lhs.top(), depth);
    if (!equal_to_depth(lhs, rhs, depth))
      report.fail(lam.str(), "tensor-with-defining identity fails at depth " + std::to_string(depth));
  }
  return report;
}

}  // namespace spinform
