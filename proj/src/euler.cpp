#include "tdlc/euler.hpp"

#include "tdlc/error.hpp"

namespace tdlc {

HaarValue hs_rank_permutation(const std::string& o) { return {Rational(1), o}; }

HaarValue chi_from_resolution(const ResolutionDescription& r) {
  Rational total = 0;
  r.scale.volume(r.base);
  for (std::size_t k = 0; k < r.degrees.size(); ++k)
    for (const auto& label : r.degrees[k]) {
      const Rational c = r.scale.rebase(hs_rank_permutation(label), r.base).coeff;
      if (k % 2 == 0) total += c;
      else total -= c;
    }
  total.canonicalize();
  return {total, r.base};
}

ResolutionDescription resolution_of(const GraphOfGroups& g) {
  ResolutionDescription r;
  r.base = "1";
  r.scale.declare("1");
  r.degrees.resize(2);
  for (std::size_t v = 0; v < g.base().num_vertices(); ++v) {
    const std::string label = "A_v" + std::to_string(v);
    r.scale.declare_overgroup(label, "1", Rational(static_cast<long>(g.vertex_group(v).order())));
    r.degrees[0].push_back(label);
  }
  for (std::size_t e : g.base().positive_edges()) {
    const std::string label = "A_e" + std::to_string(e);
    r.scale.declare_overgroup(label, "1", Rational(static_cast<long>(g.edge_group(e).order())));
    r.degrees[1].push_back(label);
  }
  return r;
}

namespace {

IntPolynomial weyl_poincare(const CartanMatrix& a) {
  const CoxeterSystem c = a.coxeter();
  const IntPolynomial from_degrees = poincare_from_classification(c);
  // enumerate when feasible, otherwise rely on the classification degrees
  if (from_degrees.evaluate(mpz_class(1)) <= kDefaultStateCap) return poincare_poly(a);
  return from_degrees;
}

}  // namespace

HaarValue chevalley_chi(const CartanMatrix& finite, long q) {
  if (q < 2) throw Error(ErrorCode::InvalidInput, "q must be at least 2");
  const IntPolynomial p = weyl_poincare(finite);
  const mpz_class qz(q);
  const auto ms = exponents(p);
  mpz_class num = ms.size() % 2 == 0 ? 1 : -1;
  for (std::size_t m : ms) {
    mpz_class qm;
    mpz_pow_ui(qm.get_mpz_t(), qz.get_mpz_t(), m);
    num *= qm - 1;
  }
  Rational chi(num, p.evaluate(qz));
  chi.canonicalize();
  return {chi, "Iw"};
}

HaarValue chi_via_parahoric_sum(const AffineDiagram& d, long q) {
  if (q < 2) throw Error(ErrorCode::InvalidInput, "q must be at least 2");
  const std::size_t n1 = d.affine.size();
  if (n1 < 2) throw Error(ErrorCode::InvalidInput, "affine diagram needs at least two nodes");
  if (n1 > 20) throw Error(ErrorCode::InvalidInput, "affine diagram too large");
  const CoxeterSystem cox = d.affine.coxeter();
  const std::size_t n = n1 - 1;

  ResolutionDescription r;
  r.base = "Iw";
  r.scale.declare("Iw");
  r.degrees.resize(n + 1);
  const std::uint32_t full = (1u << n1) - 1;
  for (std::uint32_t mask = 0; mask < full; ++mask) {
    std::vector<std::size_t> nodes;
    std::string label = "P_{";
    for (std::size_t i = 0; i < n1; ++i)
      if (mask >> i & 1u) {
        if (!nodes.empty()) label += ",";
        label += std::to_string(i);
        nodes.push_back(i);
      }
    label += "}";
    const IntPolynomial p = poincare_from_classification(cox.restrict_to(nodes));
    r.scale.declare_overgroup(label, "Iw", Rational(p.evaluate(mpz_class(q))));
    // faces of codimension |I| sit in degree n - |I|
    r.degrees[n - nodes.size()].push_back(label);
  }
  return chi_from_resolution(r);
}

}  // namespace tdlc
