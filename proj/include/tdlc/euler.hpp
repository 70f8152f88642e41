#pragma once

#include <string>
#include <vector>

#include "tdlc/coxeter.hpp"
#include "tdlc/graph_of_groups.hpp"
#include "tdlc/haar.hpp"

namespace tdlc {

/// Rank of Q[G/O]: 1 * mu_O.
HaarValue hs_rank_permutation(const std::string& o);

/// P_k = sum_j Q[G/O_{k,j}] for k = 0..N, with the subgroup volumes in
/// `scale` and the answer expressed over `base`.
struct ResolutionDescription {
  std::vector<std::vector<std::string>> degrees;
  HaarScale scale;
  std::string base;
};

/// sum_k (-1)^k sum_j mu_{O_{k,j}} over `base`. Throws UnknownIndex.
HaarValue chi_from_resolution(const ResolutionDescription& r);

/// Vertex groups in degree 0, positive edge groups in degree 1, base the
/// trivial subgroup "1".
ResolutionDescription resolution_of(const GraphOfGroups& g);

/// (-1)^n prod (q^{m_i} - 1) / p_W(q) * mu_Iw, n the rank. Throws
/// InvalidInput for q < 2.
HaarValue chevalley_chi(const CartanMatrix& finite, long q);

/// sum over proper I of (-1)^{n-|I|} mu_{P_I} with |P_I : Iw| = p_{W(I)}(q),
/// over base Iw.
HaarValue chi_via_parahoric_sum(const AffineDiagram& d, long q);

}  // namespace tdlc
