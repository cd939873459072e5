#include "spinform/weight.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace spinform {

std::optional<HalfInt> HalfInt::parse(std::string_view s) {
  if (s.empty()) return std::nullopt;
  bool neg = false;
  size_t pos = 0;
  if (s[0] == '+' || s[0] == '-') {
    neg = s[0] == '-';
    pos = 1;
  }
  size_t slash = s.find('/', pos);
  std::string_view num = s.substr(pos, slash == std::string_view::npos ? s.size() - pos : slash - pos);
  if (num.empty()) return std::nullopt;
  int value = 0;
  auto [p, ec] = std::from_chars(num.data(), num.data() + num.size(), value);
  if (ec != std::errc() || p != num.data() + num.size()) return std::nullopt;
  int twice = 2 * value;
  if (slash != std::string_view::npos) {
    std::string_view den = s.substr(slash + 1);
    if (den == "2")
      twice = value;
    else if (den == "1")
      twice = 2 * value;
    else
      return std::nullopt;
  }
  return HalfInt::from_twice(neg ? -twice : twice);
}

Weight Weight::zero(int rank) { return Weight(std::vector<int>(static_cast<size_t>(rank), 0)); }

Weight Weight::fundamental(int rank, int i) {
  if (i < 0 || i > rank) throw RankError("fundamental weight index out of range");
  std::vector<int> v(static_cast<size_t>(rank), 0);
  for (int k = 0; k < i; ++k) v[static_cast<size_t>(k)] = 2;
  return Weight(std::move(v));
}

Weight Weight::rho(int rank) {
  std::vector<int> v(static_cast<size_t>(rank));
  for (int k = 0; k < rank; ++k) v[static_cast<size_t>(k)] = 2 * (rank - k);
  return Weight(std::move(v));
}

Weight Weight::basis_vector(int rank, int k) {
  std::vector<int> v(static_cast<size_t>(rank), 0);
  v.at(static_cast<size_t>(k)) = 2;
  return Weight(std::move(v));
}

Weight Weight::from_fundamental(const std::vector<HalfInt>& coeffs) {
  int l = static_cast<int>(coeffs.size());
  std::vector<int> v(static_cast<size_t>(l), 0);
  // a_k = sum_{i >= k} lambda_i
  int tail = 0;
  for (int k = l - 1; k >= 0; --k) {
    tail += coeffs[static_cast<size_t>(k)].twice();
    v[static_cast<size_t>(k)] = tail;
  }
  return Weight(std::move(v));
}

Weight Weight::from_epsilon(const std::vector<HalfInt>& coords) {
  std::vector<int> v(coords.size());
  for (size_t k = 0; k < coords.size(); ++k) v[k] = coords[k].twice();
  return Weight(std::move(v));
}

std::vector<int> Weight::fundamental2() const {
  int l = rank();
  std::vector<int> f(static_cast<size_t>(l), 0);
  for (int k = 0; k + 1 < l; ++k) f[static_cast<size_t>(k)] = eps2_[static_cast<size_t>(k)] - eps2_[static_cast<size_t>(k) + 1];
  if (l > 0) f[static_cast<size_t>(l) - 1] = eps2_[static_cast<size_t>(l) - 1];
  return f;
}

std::vector<HalfInt> Weight::fundamental_coords() const {
  std::vector<int> f = fundamental2();
  std::vector<HalfInt> out(f.size());
  for (size_t k = 0; k < f.size(); ++k) out[k] = HalfInt::from_twice(f[k]);
  return out;
}

bool Weight::is_dominant_integral() const {
  for (int f : fundamental2())
    if (f < 0 || f % 2 != 0) return false;
  return true;
}

bool Weight::is_bounded_admissible() const {
  std::vector<int> f = fundamental2();
  int l = rank();
  if (l < 1) return false;
  for (int k = 0; k + 1 < l; ++k) {
    int fk = f[static_cast<size_t>(k)];
    if (fk < 0 || fk % 2 != 0) return false;
  }
  int fl = f[static_cast<size_t>(l) - 1];
  if (fl % 2 == 0) return false;  // last coordinate must be in Z + 1/2
  int fprev = l >= 2 ? f[static_cast<size_t>(l) - 2] : 0;
  return fprev + 2 * fl + 6 > 0;  // doubled form of lambda_{l-1} + 2 lambda_l + 3 > 0
}

Weight Weight::operator+(const Weight& o) const {
  require_same_rank(*this, o);
  std::vector<int> v(eps2_);
  for (size_t k = 0; k < v.size(); ++k) v[k] += o.eps2_[k];
  return Weight(std::move(v));
}

Weight Weight::operator-(const Weight& o) const {
  require_same_rank(*this, o);
  std::vector<int> v(eps2_);
  for (size_t k = 0; k < v.size(); ++k) v[k] -= o.eps2_[k];
  return Weight(std::move(v));
}

Weight Weight::operator-() const {
  std::vector<int> v(eps2_);
  for (int& c : v) c = -c;
  return Weight(std::move(v));
}

std::string Weight::str() const {
  std::ostringstream os;
  os << '(';
  auto f = fundamental_coords();
  for (size_t k = 0; k < f.size(); ++k) {
    if (k) os << ',';
    os << f[k].str();
  }
  os << ')';
  return os.str();
}

void require_same_rank(const Weight& a, const Weight& b) {
  if (a.rank() != b.rank()) throw RankError("weights of different rank");
}

Weight Root::to_weight(int rank) const {
  std::vector<int> v(static_cast<size_t>(rank), 0);
  switch (kind) {
    case Kind::diff:
      v.at(static_cast<size_t>(i)) = 2;
      v.at(static_cast<size_t>(j)) = -2;
      break;
    case Kind::sum:
      v.at(static_cast<size_t>(i)) = 2;
      v.at(static_cast<size_t>(j)) = 2;
      break;
    case Kind::lng:
      v.at(static_cast<size_t>(i)) = 4;
      break;
  }
  return Weight(std::move(v));
}

int Root::pairing2(const Weight& a) const {
  switch (kind) {
    case Kind::diff:
      return a.eps2_at(i) - a.eps2_at(j);
    case Kind::sum:
      return a.eps2_at(i) + a.eps2_at(j);
    case Kind::lng:
      return a.eps2_at(i);
  }
  return 0;
}

int Root::height(int rank) const {
  switch (kind) {
    case Kind::diff:
      return j - i;
    case Kind::sum:
      return (j - i) + 2 * (rank - 1 - j) + 1;
    case Kind::lng:
      return 2 * (rank - 1 - i) + 1;
  }
  return 0;
}

std::vector<Root> positive_roots(int rank) {
  std::vector<Root> roots;
  roots.reserve(static_cast<size_t>(rank) * static_cast<size_t>(rank));
  for (int i = 0; i < rank; ++i)
    for (int j = i + 1; j < rank; ++j) roots.push_back({Root::Kind::diff, i, j});
  for (int i = 0; i < rank; ++i)
    for (int j = i + 1; j < rank; ++j) roots.push_back({Root::Kind::sum, i, j});
  for (int i = 0; i < rank; ++i) roots.push_back({Root::Kind::lng, i, 0});
  return roots;
}

std::optional<long> cone_height_x4(const Weight& top, const Weight& w) {
  require_same_rank(top, w);
  int l = top.rank();
  long h = 0;
  long s = 0;
  for (int k = 0; k < l; ++k) {
    s += top.eps2_at(k) - w.eps2_at(k);
    if (s < 0) return std::nullopt;
    h += (k + 1 < l) ? 2 * s : s;
  }
  return h;
}

std::optional<std::vector<int>> cone_coords(const Weight& top, const Weight& w) {
  require_same_rank(top, w);
  int l = top.rank();
  std::vector<int> c(static_cast<size_t>(l), 0);
  long s = 0;
  for (int k = 0; k < l; ++k) {
    s += top.eps2_at(k) - w.eps2_at(k);
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

Weight join_upper(const Weight& a, const Weight& b) {
  require_same_rank(a, b);
  std::vector<int> v(a.eps2());
  for (size_t k = 0; k < v.size(); ++k) v[k] = std::max(v[k], b.eps2()[k]);
  return Weight(std::move(v));
}

long inner_x4(const Weight& a, const Weight& b) {
  require_same_rank(a, b);
  long s = 0;
  for (int k = 0; k < a.rank(); ++k) s += static_cast<long>(a.eps2_at(k)) * b.eps2_at(k);
  return s;
}

nlohmann::json to_json(const Weight& w) {
  nlohmann::json fund = nlohmann::json::array();
  for (const HalfInt& h : w.fundamental_coords()) fund.push_back(h.str());
  nlohmann::json eps = nlohmann::json::array();
  for (int k = 0; k < w.rank(); ++k) eps.push_back(w.eps(k).str());
  return nlohmann::json{{"fundamental", fund}, {"epsilon", eps}};
}

Weight weight_from_json(const nlohmann::json& j) {
  const nlohmann::json& eps = j.at("epsilon");
  std::vector<HalfInt> coords;
  coords.reserve(eps.size());
  for (const auto& e : eps) {
    auto h = HalfInt::parse(e.get<std::string>());
    if (!h) throw DomainError("bad coordinate in weight JSON");
    coords.push_back(*h);
  }
  return Weight::from_epsilon(coords);
}

}  // namespace spinform
