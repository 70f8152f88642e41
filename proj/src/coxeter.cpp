#include "tdlc/coxeter.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <sstream>
#include <unordered_set>

#include "tdlc/error.hpp"

namespace tdlc {

CoxeterSystem::CoxeterSystem(std::vector<std::vector<std::size_t>> m) : m_(std::move(m)) {
  const std::size_t n = m_.size();
  for (std::size_t s = 0; s < n; ++s) {
    if (m_[s].size() != n) throw Error(ErrorCode::InvalidInput, "Coxeter matrix is not square");
    if (m_[s][s] != 1) throw Error(ErrorCode::InvalidInput, "Coxeter matrix needs m_ss = 1");
  }
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = 0; t < n; ++t) {
      if (s == t) continue;
      if (m_[s][t] != m_[t][s]) throw Error(ErrorCode::InvalidInput, "Coxeter matrix is not symmetric");
      if (m_[s][t] == 1) throw Error(ErrorCode::InvalidInput, "off-diagonal Coxeter labels must be >= 2");
    }
}

CoxeterSystem CoxeterSystem::restrict_to(std::span<const std::size_t> nodes) const {
  std::vector<std::vector<std::size_t>> out(nodes.size(), std::vector<std::size_t>(nodes.size()));
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t j = 0; j < nodes.size(); ++j) out[i][j] = m(nodes[i], nodes[j]);
  return CoxeterSystem(std::move(out));
}

std::string FiniteType::name() const {
  if (family == 'I') return m == 6 ? "G2" : "I2(" + std::to_string(m) + ")";
  return std::string(1, family) + std::to_string(rank);
}

std::vector<std::size_t> FiniteType::degrees() const {
  std::vector<std::size_t> d;
  const std::size_t n = rank;
  switch (family) {
    case 'A':
      for (std::size_t i = 2; i <= n + 1; ++i) d.push_back(i);
      break;
    case 'B':
      for (std::size_t i = 1; i <= n; ++i) d.push_back(2 * i);
      break;
    case 'D':
      for (std::size_t i = 1; i < n; ++i) d.push_back(2 * i);
      d.push_back(n);
      break;
    case 'E':
      if (n == 6) d = {2, 5, 6, 8, 9, 12};
      if (n == 7) d = {2, 6, 8, 10, 12, 14, 18};
      if (n == 8) d = {2, 8, 12, 14, 18, 20, 24, 30};
      break;
    case 'F':
      d = {2, 6, 8, 12};
      break;
    case 'H':
      d = n == 3 ? std::vector<std::size_t>{2, 6, 10} : std::vector<std::size_t>{2, 12, 20, 30};
      break;
    case 'I':
      d = {2, m};
      break;
    default:
      throw Error(ErrorCode::Internal, "unknown finite family");
  }
  std::sort(d.begin(), d.end());
  return d;
}

namespace {

std::optional<FiniteType> classify_component(const CoxeterSystem& c, const std::vector<std::size_t>& nodes) {
  const std::size_t k = nodes.size();
  FiniteType ft;
  ft.nodes = nodes;
  ft.rank = k;
  if (k == 1) return ft;

  std::map<std::size_t, std::vector<std::size_t>> adj;
  std::vector<std::size_t> labels;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      const std::size_t m = c.m(nodes[i], nodes[j]);
      if (m == 2) continue;
      if (m == kInfinity) return std::nullopt;
      adj[nodes[i]].push_back(nodes[j]);
      adj[nodes[j]].push_back(nodes[i]);
      labels.push_back(m);
    }

  if (k == 2) {
    const std::size_t m = labels.at(0);
    if (m == 3) {
      ft.family = 'A';
    } else if (m == 4) {
      ft.family = 'B';
    } else {
      ft.family = 'I';
      ft.m = m;
    }
    return ft;
  }

  if (labels.size() != k - 1) return std::nullopt;  // connected, so not a tree
  std::size_t n4 = 0, n5 = 0;
  for (std::size_t m : labels) {
    if (m >= 6) return std::nullopt;
    n4 += m == 4;
    n5 += m == 5;
  }
  std::vector<std::size_t> branch, ends;
  for (std::size_t v : nodes) {
    const std::size_t deg = adj[v].size();
    if (deg > 3) return std::nullopt;
    if (deg == 3) branch.push_back(v);
    if (deg == 1) ends.push_back(v);
  }
  if (branch.size() > 1) return std::nullopt;

  if (n4 + n5 == 0) {
    if (branch.empty()) {
      ft.family = 'A';
      return ft;
    }
    const std::size_t center = branch[0];
    std::vector<std::size_t> arms;
    for (std::size_t start : adj[center]) {
      std::size_t len = 1, prev = center, cur = start;
      while (adj[cur].size() == 2) {
        const std::size_t next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
        prev = cur;
        cur = next;
        ++len;
      }
      arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] != 1) return std::nullopt;
    if (arms[1] == 1) {
      ft.family = 'D';
      return ft;
    }
    if (arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) {
      ft.family = 'E';
      return ft;
    }
    return std::nullopt;
  }

  if (n4 + n5 != 1 || !branch.empty()) return std::nullopt;
  // walk the path from one end and locate the special edge
  std::vector<std::size_t> path{ends.at(0)};
  while (path.size() < k) {
    const std::size_t cur = path.back();
    for (std::size_t nb : adj[cur])
      if (path.size() < 2 || nb != path[path.size() - 2]) {
        path.push_back(nb);
        break;
      }
  }
  std::size_t pos = 0;
  for (std::size_t i = 0; i + 1 < k; ++i)
    if (c.m(path[i], path[i + 1]) != 3) pos = i;
  const bool at_end = pos == 0 || pos == k - 2;
  if (n4 == 1) {
    if (at_end) {
      ft.family = 'B';
      return ft;
    }
    if (k == 4) {
      ft.family = 'F';
      return ft;
    }
    return std::nullopt;
  }
  if (at_end && (k == 3 || k == 4)) {
    ft.family = 'H';
    return ft;
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::vector<FiniteType>> classify(const CoxeterSystem& c, std::span<const std::size_t> t) {
  std::vector<std::size_t> nodes(t.begin(), t.end());
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  for (std::size_t s : nodes)
    if (s >= c.size()) throw Error(ErrorCode::InvalidInput, "generator index out of range");

  std::vector<FiniteType> out;
  std::vector<bool> done(c.size(), false);
  for (std::size_t s : nodes) {
    if (done[s]) continue;
    std::vector<std::size_t> comp{s};
    done[s] = true;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (std::size_t u : nodes)
        if (!done[u] && c.m(comp[i], u) != 2) {
          done[u] = true;
          comp.push_back(u);
        }
    std::sort(comp.begin(), comp.end());
    auto ft = classify_component(c, comp);
    if (!ft) return std::nullopt;
    out.push_back(std::move(*ft));
  }
  return out;
}

bool is_spherical(const CoxeterSystem& c, std::span<const std::size_t> t) { return classify(c, t).has_value(); }

bool is_finite(const CoxeterSystem& c) {
  std::vector<std::size_t> all(c.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return is_spherical(c, all);
}

// ---------------------------------------------------------------------------

CartanMatrix::CartanMatrix(std::vector<std::vector<std::int64_t>> a) : a_(std::move(a)) {
  const std::size_t n = a_.size();
  if (n == 0) throw Error(ErrorCode::InvalidInput, "empty Cartan matrix");
  for (std::size_t i = 0; i < n; ++i) {
    if (a_[i].size() != n) throw Error(ErrorCode::InvalidInput, "Cartan matrix is not square");
    if (a_[i][i] != 2) throw Error(ErrorCode::InvalidInput, "Cartan matrix needs a_ii = 2");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (a_[i][j] > 0) throw Error(ErrorCode::InvalidInput, "Cartan matrix needs a_ij <= 0 off the diagonal");
      if ((a_[i][j] == 0) != (a_[j][i] == 0))
        throw Error(ErrorCode::InvalidInput, "Cartan matrix needs a_ij = 0 iff a_ji = 0");
    }
}

namespace {

struct CartanBuilder {
  std::vector<std::vector<std::int64_t>> a;
  explicit CartanBuilder(std::size_t n) : a(n, std::vector<std::int64_t>(n, 0)) {
    for (std::size_t i = 0; i < n; ++i) a[i][i] = 2;
  }
  CartanBuilder& edge(std::size_t i, std::size_t j, std::int64_t aij = -1, std::int64_t aji = -1) {
    a[i][j] = aij;
    a[j][i] = aji;
    return *this;
  }
  CartanBuilder& chain(std::size_t from, std::size_t to) {
    for (std::size_t i = from; i < to; ++i) edge(i, i + 1);
    return *this;
  }
};

std::pair<char, std::size_t> parse_type(const std::string& name) {
  if (name.size() < 2 || !std::isalpha(static_cast<unsigned char>(name[0])))
    throw Error(ErrorCode::InvalidInput, "unknown Cartan type '" + name + "'");
  const char family = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
  std::size_t rank = 0;
  for (std::size_t i = 1; i < name.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(name[i])))
      throw Error(ErrorCode::InvalidInput, "unknown Cartan type '" + name + "'");
    rank = rank * 10 + static_cast<std::size_t>(name[i] - '0');
    if (rank > 64) throw Error(ErrorCode::InvalidInput, "rank too large in '" + name + "'");
  }
  return {family, rank};
}

}  // namespace

CartanMatrix CartanMatrix::preset(const std::string& name) {
  const auto [family, n] = parse_type(name);
  auto bad = [&] { return Error(ErrorCode::InvalidInput, "no finite Cartan type '" + name + "'"); };
  switch (family) {
    case 'A':
      if (n < 1) throw bad();
      return CartanMatrix(CartanBuilder(n).chain(0, n - 1).a);
    case 'B':
      if (n < 2) throw bad();
      return CartanMatrix(CartanBuilder(n).chain(0, n - 1).edge(n - 2, n - 1, -1, -2).a);
    case 'C':
      if (n < 2) throw bad();
      return CartanMatrix(CartanBuilder(n).chain(0, n - 1).edge(n - 2, n - 1, -2, -1).a);
    case 'D':
      if (n < 4) throw bad();
      return CartanMatrix(CartanBuilder(n).chain(0, n - 2).edge(n - 3, n - 1).a);
    case 'E':
      if (n < 6 || n > 8) throw bad();
      return CartanMatrix(CartanBuilder(n).chain(0, n - 2).edge(2, n - 1).a);
    case 'F':
      if (n != 4) throw bad();
      return CartanMatrix(CartanBuilder(4).chain(0, 3).edge(1, 2, -1, -2).a);
    case 'G':
      if (n != 2) throw bad();
      return CartanMatrix(CartanBuilder(2).edge(0, 1, -1, -3).a);
    default:
      throw bad();
  }
}

CartanMatrix CartanMatrix::submatrix(std::span<const std::size_t> nodes) const {
  std::vector<std::vector<std::int64_t>> out(nodes.size(), std::vector<std::int64_t>(nodes.size()));
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t j = 0; j < nodes.size(); ++j) out[i][j] = at(nodes[i], nodes[j]);
  return CartanMatrix(std::move(out));
}

CoxeterSystem CartanMatrix::coxeter() const {
  const std::size_t n = size();
  std::vector<std::vector<std::size_t>> m(n, std::vector<std::size_t>(n, 1));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      switch (a_[i][j] * a_[j][i]) {
        case 0: m[i][j] = 2; break;
        case 1: m[i][j] = 3; break;
        case 2: m[i][j] = 4; break;
        case 3: m[i][j] = 6; break;
        default: m[i][j] = kInfinity;
      }
    }
  return CoxeterSystem(std::move(m));
}

AffineDiagram AffineDiagram::preset(const std::string& name) {
  std::string core = name;
  if (core.rfind("affine ", 0) == 0) core = core.substr(7);
  else if (!core.empty() && core[0] == '~') core = core.substr(1);
  else throw Error(ErrorCode::InvalidInput, "affine presets are named 'affine X' or '~X'");
  const auto [family, n] = parse_type(core);
  auto bad = [&] { return Error(ErrorCode::InvalidInput, "no affine Cartan type '" + name + "'"); };
  const std::size_t size = n + 1;
  AffineDiagram d;
  switch (family) {
    case 'A':
      if (n < 1) throw bad();
      if (n == 1) {
        d.affine = CartanMatrix(CartanBuilder(2).edge(0, 1, -2, -2).a);
      } else {
        d.affine = CartanMatrix(CartanBuilder(size).chain(0, n).edge(n, 0).a);
      }
      break;
    case 'B':
      if (n < 3) throw bad();
      d.affine = CartanMatrix(CartanBuilder(size).edge(0, 2).chain(1, n).edge(n - 1, n, -1, -2).a);
      break;
    case 'C':
      if (n < 2) throw bad();
      d.affine = CartanMatrix(CartanBuilder(size).chain(0, n).edge(0, 1, -1, -2).edge(n - 1, n, -2, -1).a);
      break;
    case 'D':
      if (n < 4) throw bad();
      d.affine = CartanMatrix(CartanBuilder(size).edge(0, 2).chain(1, n - 1).edge(n - 2, n).a);
      break;
    case 'E':
      if (n == 6) d.affine = CartanMatrix(CartanBuilder(7).chain(0, 4).edge(2, 5).edge(5, 6).a);
      else if (n == 7) d.affine = CartanMatrix(CartanBuilder(8).chain(0, 6).edge(3, 7).a);
      else if (n == 8) d.affine = CartanMatrix(CartanBuilder(9).chain(0, 7).edge(5, 8).a);
      else throw bad();
      break;
    case 'F':
      if (n != 4) throw bad();
      d.affine = CartanMatrix(CartanBuilder(5).chain(0, 4).edge(2, 3, -1, -2).a);
      break;
    case 'G':
      if (n != 2) throw bad();
      d.affine = CartanMatrix(CartanBuilder(3).chain(0, 2).edge(1, 2, -1, -3).a);
      break;
    default:
      throw bad();
  }
  return d;
}

CartanMatrix AffineDiagram::finite_part() const {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < affine.size(); ++i)
    if (i != extended_node) keep.push_back(i);
  if (keep.empty()) throw Error(ErrorCode::InvalidInput, "affine diagram needs at least two nodes");
  return affine.submatrix(keep);
}

// ---------------------------------------------------------------------------

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPolynomial IntPolynomial::t_analogue(std::size_t d) {
  return IntPolynomial(std::vector<mpz_class>(d, mpz_class(1)));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<mpz_class> out(c_.size() + o.c_.size() - 1, mpz_class(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
  return IntPolynomial(std::move(out));
}

std::optional<IntPolynomial> IntPolynomial::divide_exact(const IntPolynomial& divisor) const {
  if (divisor.is_zero()) throw Error(ErrorCode::InvalidInput, "division by the zero polynomial");
  if (is_zero()) return IntPolynomial{};
  if (degree() < divisor.degree()) return std::nullopt;
  std::vector<mpz_class> rem = c_;
  const std::size_t dd = divisor.c_.size() - 1;
  std::vector<mpz_class> quot(c_.size() - dd, mpz_class(0));
  const mpz_class& lead = divisor.c_.back();
  for (std::size_t k = quot.size(); k-- > 0;) {
    const mpz_class& top = rem[k + dd];
    if (top == 0) continue;
    if (top % lead != 0) return std::nullopt;
    quot[k] = top / lead;
    for (std::size_t j = 0; j <= dd; ++j) rem[k + j] -= quot[k] * divisor.c_[j];
  }
  for (const auto& r : rem)
    if (r != 0) return std::nullopt;
  return IntPolynomial(std::move(quot));
}

mpz_class IntPolynomial::evaluate(const mpz_class& t) const {
  mpz_class acc = 0;
  for (std::size_t k = c_.size(); k-- > 0;) acc = acc * t + c_[k];
  return acc;
}

Rational IntPolynomial::evaluate(const Rational& t) const {
  Rational acc = 0;
  for (std::size_t k = c_.size(); k-- > 0;) acc = acc * t + Rational(c_[k]);
  acc.canonicalize();
  return acc;
}

std::string IntPolynomial::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    mpz_class a = c_[k];
    if (!first) os << (a < 0 ? " - " : " + ");
    else if (a < 0) os << "-";
    a = abs(a);
    first = false;
    if (k == 0 || a != 1) os << a.get_str();
    if (k >= 1) os << "t";
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

IntSeries::IntSeries(const IntPolynomial& p, std::size_t precision) : c_(precision + 1, mpz_class(0)) {
  for (std::size_t k = 0; k <= precision; ++k) c_[k] = p[k];
}

void IntSeries::divide_one_minus_t_power(std::size_t k) {
  if (k == 0) throw Error(ErrorCode::InvalidInput, "1 - t^0 is not invertible");
  for (std::size_t i = k; i < c_.size(); ++i) c_[i] += c_[i - k];
}

// ---------------------------------------------------------------------------

namespace {

using Mat = std::vector<std::int64_t>;

struct MatHash {
  std::size_t operator()(const Mat& m) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (std::int64_t x : m) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
    return h;
  }
};

// w s_i: column j becomes col_j - a_ij col_i
Mat times_reflection(const Mat& w, const CartanMatrix& a, std::size_t i) {
  const std::size_t n = a.size();
  Mat out = w;
  for (std::size_t j = 0; j < n; ++j) {
    const std::int64_t aij = a.at(i, j);
    if (aij == 0) continue;
    for (std::size_t r = 0; r < n; ++r) {
      std::int64_t prod = 0, res = 0;
      if (__builtin_mul_overflow(aij, w[r * n + i], &prod) || __builtin_sub_overflow(w[r * n + j], prod, &res))
        throw Error(ErrorCode::StateExplosion, "reflection matrix entries overflow 64 bits");
      out[r * n + j] = res;
    }
  }
  return out;
}

}  // namespace

std::vector<std::uint64_t> enumerate_by_length(const CartanMatrix& a, std::optional<std::size_t> max_len,
                                               std::size_t cap) {
  const std::size_t n = a.size();
  Mat id(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) id[i * n + i] = 1;

  std::vector<std::uint64_t> counts{1};
  std::unordered_set<Mat, MatHash> prev;
  std::unordered_set<Mat, MatHash> cur{id};
  std::size_t visited = 1;
  // lengths of w and w s_i differ by exactly one, so layer l+1 only needs
  // deduplication against layers l-1 and l+1
  while (!max_len || counts.size() <= *max_len) {
    std::unordered_set<Mat, MatHash> next;
    for (const Mat& w : cur)
      for (std::size_t i = 0; i < n; ++i) {
        Mat x = times_reflection(w, a, i);
        if (prev.count(x) || next.count(x)) continue;
        next.insert(std::move(x));
        if (++visited > cap)
          throw Error(ErrorCode::StateExplosion, "more than " + std::to_string(cap) + " group elements visited");
      }
    if (next.empty()) break;
    counts.push_back(next.size());
    prev = std::move(cur);
    cur = std::move(next);
  }
  return counts;
}

IntPolynomial poincare_poly(const CartanMatrix& a, std::size_t cap) {
  if (!is_finite(a.coxeter())) throw Error(ErrorCode::InvalidInput, "Weyl group is infinite");
  const auto counts = enumerate_by_length(a, std::nullopt, cap);
  std::vector<mpz_class> c;
  for (auto x : counts) c.emplace_back(static_cast<unsigned long>(x));
  return IntPolynomial(std::move(c));
}

IntPolynomial poincare_from_classification(const CoxeterSystem& c) {
  std::vector<std::size_t> all(c.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  const auto types = classify(c, all);
  if (!types) throw Error(ErrorCode::InvalidInput, "Coxeter group is infinite");
  IntPolynomial p({mpz_class(1)});
  for (const auto& t : *types)
    for (std::size_t d : t.degrees()) p = p * IntPolynomial::t_analogue(d);
  return p;
}

std::vector<std::size_t> exponents(const IntPolynomial& p) {
  auto fail = [&] {
    return Error(ErrorCode::NotAProductOfTAnalogues, p.to_string() + " is not a product of t-analogues");
  };
  if (p.is_zero()) throw fail();
  std::vector<std::size_t> out;
  IntPolynomial rest = p;
  // the largest d with [d]_t | p is always one of the factors
  while (rest.degree() > 0) {
    bool found = false;
    for (std::size_t d = static_cast<std::size_t>(rest.degree()) + 1; d >= 2; --d) {
      if (auto q = rest.divide_exact(IntPolynomial::t_analogue(d))) {
        out.push_back(d - 1);
        rest = std::move(*q);
        found = true;
        break;
      }
    }
    if (!found) throw fail();
  }
  if (!(rest == IntPolynomial({mpz_class(1)}))) throw fail();
  std::sort(out.begin(), out.end());
  IntPolynomial check({mpz_class(1)});
  for (std::size_t m : out) check = check * IntPolynomial::t_analogue(m + 1);
  if (!(check == p)) throw Error(ErrorCode::Internal, "exponent factorisation does not multiply back");
  return out;
}

bool bott_check(const CartanMatrix& finite, const CartanMatrix& affine, std::size_t n) {
  const IntPolynomial p = poincare_poly(finite);
  IntSeries series(p, n);
  for (std::size_t m : exponents(p)) series.divide_one_minus_t_power(m);
  const auto counts = enumerate_by_length(affine, n);
  for (std::size_t k = 0; k <= n; ++k) {
    const mpz_class bfs(static_cast<unsigned long>(k < counts.size() ? counts[k] : 0));
    if (series.coeffs()[k] != bfs) return false;
  }
  return true;
}

AlternatingSum alternating_sum(const AffineDiagram& d, const Rational& q) {
  const std::size_t n1 = d.affine.size();
  if (n1 < 2) throw Error(ErrorCode::InvalidInput, "affine diagram needs at least two nodes");
  if (n1 > 20) throw Error(ErrorCode::InvalidInput, "affine diagram too large");
  if (d.extended_node >= n1) throw Error(ErrorCode::InvalidInput, "extended node out of range");
  if (q <= 1) throw Error(ErrorCode::InvalidInput, "q must exceed 1");
  const CoxeterSystem cox = d.affine.coxeter();

  AlternatingSum out;
  const std::uint32_t full = (1u << n1) - 1;
  for (std::uint32_t mask = 0; mask < full; ++mask) {
    std::vector<std::size_t> nodes;
    for (std::size_t i = 0; i < n1; ++i)
      if (mask >> i & 1u) nodes.push_back(i);
    const CoxeterSystem sub = cox.restrict_to(nodes);
    if (!is_finite(sub)) throw Error(ErrorCode::InvalidInput, "a proper subdiagram is not of finite type");
    const Rational term = Rational(1) / poincare_from_classification(sub).evaluate(q);
    if (nodes.size() % 2 == 1) out.lhs += term;
    else out.lhs -= term;
  }
  out.lhs.canonicalize();

  const IntPolynomial pw = poincare_from_classification(d.finite_part().coxeter());
  const auto ms = exponents(pw);
  Rational num = ms.size() % 2 == 0 ? -1 : 1;
  for (std::size_t m : ms) {
    Rational qm = 1;
    for (std::size_t i = 0; i < m; ++i) qm *= q;
    num *= 1 - qm;
  }
  out.rhs = num / pw.evaluate(q);
  out.rhs.canonicalize();
  return out;
}

bool alternating_sum_identity(const AffineDiagram& d, const Rational& q) { return alternating_sum(d, q).holds(); }

}  // namespace tdlc
