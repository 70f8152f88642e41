#include "tdlc/davis.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "tdlc/error.hpp"

namespace tdlc {

SphericalPoset SphericalPoset::of(const CoxeterSystem& c, std::size_t cap) {
  SphericalPoset p;
  p.subsets.push_back({});
  // spherical subsets are closed downwards, so grow each one by larger indices
  for (std::size_t i = 0; i < p.subsets.size(); ++i) {
    const auto base = p.subsets[i];
    const std::size_t from = base.empty() ? 0 : base.back() + 1;
    for (std::size_t s = from; s < c.size(); ++s) {
      auto t = base;
      t.push_back(s);
      if (!is_spherical(c, t)) continue;
      if (p.subsets.size() >= cap)
        throw Error(ErrorCode::PosetTooLarge, "more than " + std::to_string(cap) + " spherical subsets");
      p.subsets.push_back(std::move(t));
    }
  }
  std::stable_sort(p.subsets.begin(), p.subsets.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return p;
}

namespace {

bool proper_subset(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

DavisChamber build_chamber(const CoxeterSystem& c, std::size_t cap, bool allow_finite) {
  if (!allow_finite && is_finite(c)) throw Error(ErrorCode::WFinite, "W is finite; its rational dimension is 0");
  DavisChamber ch;
  ch.system = c;
  ch.poset = SphericalPoset::of(c, cap);
  const auto& sets = ch.poset.subsets;
  const std::size_t n = sets.size();

  std::vector<std::vector<std::size_t>> up(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (proper_subset(sets[i], sets[j])) up[i].push_back(j);

  std::vector<Simplex> chains;
  Simplex chain;
  auto extend = [&](auto&& self, std::size_t last) -> void {
    chains.push_back(chain);
    for (std::size_t j : up[last]) {
      chain.push_back(static_cast<Vertex>(j));
      self(self, j);
      chain.pop_back();
    }
  };
  for (std::size_t i = 0; i < n; ++i) {
    chain = {static_cast<Vertex>(i)};
    extend(extend, i);
  }
  ch.k = SimplicialComplex::from_simplices(std::move(chains));

  for (std::size_t s = 0; s < c.size(); ++s) {
    std::vector<Vertex> keep;
    for (std::size_t i = 0; i < n; ++i)
      if (std::binary_search(sets[i].begin(), sets[i].end(), s)) keep.push_back(static_cast<Vertex>(i));
    ch.mirrors.push_back(ch.k.induced(keep));
  }
  return ch;
}

SimplicialComplex DavisChamber::mirror_union_outside(const std::vector<std::size_t>& t) const {
  std::vector<SimplicialComplex> parts;
  for (std::size_t s = 0; s < mirrors.size(); ++s)
    if (!std::binary_search(t.begin(), t.end(), s)) parts.push_back(mirrors[s]);
  return SimplicialComplex::union_of(parts);
}

DualityVerdict relative_table(const DavisChamber& ch, const DavisOptions& opt) {
  std::vector<std::vector<std::size_t>> ts;
  for (const auto& t : ch.poset.subsets)
    if (!(opt.skip_empty_t && t.empty())) ts.push_back(t);

  std::vector<TableEntry> table(ts.size());
  auto work = [&](std::size_t i) {
    table[i].t = ts[i];
    table[i].dims = relative_cohomology(ch.k, ch.mirror_union_outside(ts[i]));
  };

  const std::size_t jobs = std::max<std::size_t>(1, std::min(opt.jobs, ts.size()));
  if (jobs == 1) {
    for (std::size_t i = 0; i < ts.size(); ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_lock;
    std::vector<std::thread> pool;
    for (std::size_t j = 0; j < jobs; ++j)
      pool.emplace_back([&] {
        for (std::size_t i; (i = next++) < ts.size();) {
          try {
            work(i);
          } catch (...) {
            std::lock_guard lock(failure_lock);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
  }

  DualityVerdict v;
  v.table = std::move(table);
  bool any = false;
  for (const auto& e : v.table)
    for (std::size_t k = 0; k < e.dims.size(); ++k)
      if (e.dims[k] != 0) {
        v.cd = any ? std::max(v.cd, k) : k;
        any = true;
      }
  v.is_duality = true;
  for (const auto& e : v.table)
    for (std::size_t k = 0; k < e.dims.size(); ++k)
      if (e.dims[k] != 0 && k != v.cd) v.is_duality = false;
  return v;
}

DualityVerdict davis_verdict(const CoxeterSystem& c, const DavisOptions& opt) {
  if (is_finite(c)) return {};
  return relative_table(build_chamber(c), opt);
}

DualityVerdict kac_moody_verdict(const CartanMatrix& a, const DavisOptions& opt) {
  return relative_table(build_chamber(a.coxeter()), opt);
}

}  // namespace tdlc
