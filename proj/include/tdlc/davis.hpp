#pragma once

#include <cstddef>
#include <vector>

#include "tdlc/coxeter.hpp"
#include "tdlc/simplicial.hpp"

namespace tdlc {

/// Spherical subsets of S ordered by (size, lexicographic); index 0 is the
/// empty set.
struct SphericalPoset {
  std::vector<std::vector<std::size_t>> subsets;

  /// Throws PosetTooLarge past `cap` subsets.
  static SphericalPoset of(const CoxeterSystem& c, std::size_t cap = 4096);
  std::size_t size() const noexcept { return subsets.size(); }
};

/// K is the order complex of the spherical poset (vertex i = subsets[i]);
/// mirrors[s] is the full subcomplex on the subsets containing s.
struct DavisChamber {
  CoxeterSystem system;
  SphericalPoset poset;
  SimplicialComplex k;
  std::vector<SimplicialComplex> mirrors;

  /// Union of the mirrors K_s over s not in t.
  SimplicialComplex mirror_union_outside(const std::vector<std::size_t>& t) const;
};

/// Throws WFinite (unless allow_finite), PosetTooLarge.
DavisChamber build_chamber(const CoxeterSystem& c, std::size_t cap = 4096, bool allow_finite = false);

struct TableEntry {
  std::vector<std::size_t> t;
  std::vector<std::size_t> dims;  // dims[k] = dim H^k(K, K^{S-T}; Q)

  friend bool operator==(const TableEntry&, const TableEntry&) = default;
};

struct DualityVerdict {
  std::size_t cd = 0;
  bool is_duality = true;
  std::vector<TableEntry> table;

  friend bool operator==(const DualityVerdict&, const DualityVerdict&) = default;
};

struct DavisOptions {
  /// Skip T = empty set.
  bool skip_empty_t = false;
  std::size_t jobs = 1;
};

DualityVerdict relative_table(const DavisChamber& ch, const DavisOptions& opt = {});

/// Finite W gives cd 0 and duality with an empty table.
DualityVerdict davis_verdict(const CoxeterSystem& c, const DavisOptions& opt = {});

/// Same table for the Weyl group of a Kac-Moody Cartan matrix. Throws WFinite.
DualityVerdict kac_moody_verdict(const CartanMatrix& a, const DavisOptions& opt = {});

}  // namespace tdlc
