#include "tdlc/finite_group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

#include "tdlc/error.hpp"

namespace tdlc {

using Element = FiniteGroup::Element;

FiniteGroup FiniteGroup::from_table(Table table, std::string name) {
  const std::size_t n = table.size();
  if (n == 0) throw Error(ErrorCode::InvalidInput, "group table is empty");
  for (const auto& row : table) {
    if (row.size() != n) throw Error(ErrorCode::InvalidInput, "group table is not square");
    for (Element x : row)
      if (x >= n) throw Error(ErrorCode::InvalidInput, "group table entry out of range");
  }
  FiniteGroup g;
  g.table_ = std::move(table);
  g.name_ = std::move(name);
  bool found = false;
  for (Element e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (Element a = 0; a < n && ok; ++a) ok = g.table_[e][a] == a && g.table_[a][e] == a;
    if (ok) {
      g.identity_ = e;
      found = true;
    }
  }
  if (!found) throw Error(ErrorCode::InvalidInput, "group table has no identity");
  g.inverse_.assign(n, 0);
  for (Element a = 0; a < n; ++a) {
    auto it = std::find(g.table_[a].begin(), g.table_[a].end(), g.identity_);
    if (it == g.table_[a].end()) throw Error(ErrorCode::InvalidInput, "element without inverse");
    const auto b = static_cast<Element>(it - g.table_[a].begin());
    if (g.table_[b][a] != g.identity_) throw Error(ErrorCode::InvalidInput, "one-sided inverse");
    g.inverse_[a] = b;
  }
  for (Element a = 0; a < n; ++a) {
    std::vector<bool> seen(n, false);
    for (Element b = 0; b < n; ++b) {
      if (seen[g.table_[a][b]]) throw Error(ErrorCode::InvalidInput, "group table row is not a permutation");
      seen[g.table_[a][b]] = true;
    }
  }
  if (n <= 512)
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        for (Element c = 0; c < n; ++c)
          if (g.table_[g.table_[a][b]][c] != g.table_[a][g.table_[b][c]])
            throw Error(ErrorCode::InvalidInput, "group table is not associative");
  return g;
}

FiniteGroup FiniteGroup::from_permutations(const std::vector<std::vector<std::uint32_t>>& generators,
                                           std::string name) {
  std::size_t degree = generators.empty() ? 1 : generators.front().size();
  for (const auto& p : generators) {
    if (p.size() != degree) throw Error(ErrorCode::InvalidInput, "permutations of different degree");
    std::vector<std::uint32_t> s = p;
    std::sort(s.begin(), s.end());
    for (std::size_t i = 0; i < degree; ++i)
      if (s[i] != i) throw Error(ErrorCode::InvalidInput, "not a permutation");
  }
  using Perm = std::vector<std::uint32_t>;
  Perm id(degree);
  std::iota(id.begin(), id.end(), 0U);
  // (p*q)(i) = p(q(i)): apply q first
  auto compose = [](const Perm& p, const Perm& q) {
    Perm r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
    return r;
  };
  std::vector<Perm> elems{id};
  std::map<Perm, Element> index{{id, 0}};
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const auto& s : generators) {
      Perm next = compose(elems[i], s);
      if (index.emplace(next, static_cast<Element>(elems.size())).second) {
        elems.push_back(std::move(next));
        if (elems.size() > 100000) throw Error(ErrorCode::StateExplosion, "permutation group too large");
      }
    }
  Table table(elems.size(), std::vector<Element>(elems.size()));
  for (std::size_t a = 0; a < elems.size(); ++a)
    for (std::size_t b = 0; b < elems.size(); ++b) table[a][b] = index.at(compose(elems[a], elems[b]));
  FiniteGroup g = from_table(std::move(table), std::move(name));
  g.perms_ = std::move(elems);
  return g;
}

FiniteGroup FiniteGroup::trivial() { return FiniteGroup(); }

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidInput, "cyclic group of order 0");
  Table t(n, std::vector<Element>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = static_cast<Element>((a + b) % n);
  return from_table(std::move(t), "C" + std::to_string(n));
}

FiniteGroup FiniteGroup::dihedral(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidInput, "dihedral group of order 0");
  if (n == 1) return from_table(cyclic(2).table(), "D1");
  if (n == 2) return from_table(preset("V4").table(), "D2");
  std::vector<std::uint32_t> rot(n), ref(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    rot[i] = (i + 1) % static_cast<std::uint32_t>(n);
    ref[i] = (static_cast<std::uint32_t>(n) - i) % static_cast<std::uint32_t>(n);
  }
  return from_permutations({rot, ref}, "D" + std::to_string(n));
}

FiniteGroup FiniteGroup::symmetric(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidInput, "symmetric group on 0 points");
  if (n == 1) return trivial();
  std::vector<std::uint32_t> cyc(n), swp(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    cyc[i] = (i + 1) % static_cast<std::uint32_t>(n);
    swp[i] = i;
  }
  std::swap(swp[0], swp[1]);
  return from_permutations({cyc, swp}, "S" + std::to_string(n));
}

FiniteGroup FiniteGroup::alternating(std::size_t n) {
  if (n < 3) return from_table(trivial().table(), "A" + std::to_string(n));
  std::vector<std::vector<std::uint32_t>> gens;
  for (std::uint32_t k = 2; k < n; ++k) {
    std::vector<std::uint32_t> c(n);
    std::iota(c.begin(), c.end(), 0U);
    c[0] = 1;
    c[1] = k;
    c[k] = 0;
    gens.push_back(std::move(c));
  }
  return from_permutations(gens, "A" + std::to_string(n));
}

FiniteGroup FiniteGroup::preset(const std::string& name) {
  if (name == "1" || name == "trivial") return trivial();
  if (name == "V4") {
    Table t(4, std::vector<Element>(4));
    for (Element a = 0; a < 4; ++a)
      for (Element b = 0; b < 4; ++b) t[a][b] = a ^ b;
    return from_table(std::move(t), "V4");
  }
  if (name.size() >= 2) {
    const std::string digits = name.substr(1);
    if (!std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw Error(ErrorCode::InvalidInput, "unknown group preset " + name);
    const std::size_t n = std::stoul(digits);
    if (n > 7 && name[0] != 'C' && name[0] != 'D')
      throw Error(ErrorCode::InvalidInput, "group preset too large: " + name);
    switch (name[0]) {
      case 'C': return cyclic(n);
      case 'D': return dihedral(n);
      case 'S': return symmetric(n);
      case 'A': return alternating(n);
      default: break;
    }
  }
  throw Error(ErrorCode::InvalidInput, "unknown group preset " + name);
}

std::vector<Element> FiniteGroup::subgroup(const std::vector<Element>& gens) const {
  std::vector<bool> in(order(), false);
  std::vector<Element> elems{identity_};
  in[identity_] = true;
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (Element s : gens) {
      if (s >= order()) throw Error(ErrorCode::InvalidInput, "generator out of range");
      const Element x = mul(elems[i], s);
      if (!in[x]) {
        in[x] = true;
        elems.push_back(x);
      }
    }
  std::sort(elems.begin(), elems.end());
  return elems;
}

Element FiniteGroup::left_coset_rep(Element a, const std::vector<bool>& in_h) const {
  if (in_h[a]) return identity_;
  Element best = a;
  for (Element h = 0; h < order(); ++h)
    if (in_h[h]) best = std::min(best, mul(a, h));
  return best;
}

bool extend_homomorphism(const FiniteGroup& from, const FiniteGroup& to,
                         const std::vector<std::pair<Element, Element>>& images,
                         std::vector<Element>& out) {
  constexpr Element unset = ~Element{0};
  out.assign(from.order(), unset);
  out[from.identity()] = to.identity();
  std::vector<Element> frontier{from.identity()};
  for (std::size_t i = 0; i < frontier.size(); ++i)
    for (auto [g, img] : images) {
      if (g >= from.order() || img >= to.order()) return false;
      const Element x = from.mul(frontier[i], g);
      const Element y = to.mul(out[frontier[i]], img);
      if (out[x] == unset) {
        out[x] = y;
        frontier.push_back(x);
      } else if (out[x] != y) {
        return false;
      }
    }
  if (std::find(out.begin(), out.end(), unset) != out.end()) return false;
  for (Element a = 0; a < from.order(); ++a)
    for (Element b = 0; b < from.order(); ++b)
      if (out[from.mul(a, b)] != to.mul(out[a], out[b])) return false;
  return true;
}

}  // namespace tdlc
