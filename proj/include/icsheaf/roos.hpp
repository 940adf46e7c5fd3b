#pragma once

#include <map>
#include <memory>
#include <vector>

#include "icsheaf/injective.hpp"

namespace icsheaf {

// Strict chains s0 < ... < sp inside a cell set, grouped by length.
struct ChainTable {
  std::vector<std::vector<std::vector<int>>> by_length;  // [p] -> chains of p+1 cells
  std::vector<std::map<std::vector<int>, int>> index;

  int max_p() const { return static_cast<int>(by_length.size()) - 1; }
};

inline ChainTable chains_in(const SimplicialComplex& c, const CellSet& u) {
  ChainTable t;
  std::vector<std::vector<int>> frontier;
  for (int id : u.ids()) frontier.push_back({id});
  while (!frontier.empty()) {
    std::sort(frontier.begin(), frontier.end());
    std::map<std::vector<int>, int> idx;
    for (std::size_t i = 0; i < frontier.size(); ++i) idx.emplace(frontier[i], static_cast<int>(i));
    std::vector<std::vector<int>> next;
    for (const auto& ch : frontier)
      for (int v : c.upset(ch.back()))
        if (u.contains(v)) {
          auto e = ch;
          e.push_back(v);
          next.push_back(std::move(e));
        }
    t.by_length.push_back(std::move(frontier));
    t.index.push_back(std::move(idx));
    frontier = std::move(next);
  }
  return t;
}

// C^{p,q} = sum over p-chains in u of S(max)^q; horizontal nerve
// differential with the last face mapped by restriction.
template <class K>
struct RoosModel {
  ChainTable chains;
  std::vector<std::vector<int>> offsets;  // [p*(q window)+...] handled via helper
  DoubleComplex<K> dc;
  int q_lo;
  int q_hi;

  int chain_offset(int p, int q, int chain) const { return offsets[p * (q_hi - q_lo + 1) + (q - q_lo)][chain]; }
};

template <class K>
RoosModel<K> roos_model(const CellSheafComplex<K>& s, const CellSet& u) {
  const auto& c = s.complex();
  ChainTable chains = chains_in(c, u);
  int q_lo = s.lo();
  int q_hi = s.hi();
  int p_hi = chains.max_p();
  RoosModel<K> m{std::move(chains), {}, DoubleComplex<K>(0, p_hi, q_lo, q_hi), q_lo, q_hi};
  if (p_hi < 0 || q_hi < q_lo) return m;
  int qn = q_hi - q_lo + 1;
  m.offsets.resize((p_hi + 1) * qn);
  for (int p = 0; p <= p_hi; ++p)
    for (int q = q_lo; q <= q_hi; ++q) {
      auto& off = m.offsets[p * qn + (q - q_lo)];
      int total = 0;
      for (const auto& ch : m.chains.by_length[p]) {
        off.push_back(total);
        total += s.stalk(ch.back()).dim(q);
      }
      m.dc.set_dim(p, q, total);
    }
  for (int p = 0; p <= p_hi; ++p)
    for (int q = q_lo; q <= q_hi; ++q) {
      const auto& chs = m.chains.by_length[p];
      BlockBuilder<K> v(m.dc.dim(p, q + 1), m.dc.dim(p, q));
      for (std::size_t k = 0; k < chs.size(); ++k)
        if (q < q_hi)
          v.add_block(m.chain_offset(p, q + 1, static_cast<int>(k)), m.chain_offset(p, q, static_cast<int>(k)),
                      s.stalk(chs[k].back()).d(q));
      if (q < q_hi) m.dc.set_dv(p, q, v.build());
      if (p == p_hi) continue;
      BlockBuilder<K> h(m.dc.dim(p + 1, q), m.dc.dim(p, q));
      const auto& longer = m.chains.by_length[p + 1];
      for (std::size_t k = 0; k < longer.size(); ++k) {
        const auto& ch = longer[k];
        int dst = m.chain_offset(p + 1, q, static_cast<int>(k));
        int width = s.stalk(ch.back()).dim(q);
        for (int i = 0; i <= p + 1; ++i) {
          std::vector<int> face = ch;
          face.erase(face.begin() + i);
          int src_chain = m.chains.index[p].at(face);
          int src = m.chain_offset(p, q, src_chain);
          K sign = (i % 2 == 0) ? K(1) : K(-1);
          if (i < p + 1) {
            h.add_identity(dst, src, width, sign);
          } else {
            const auto* r = s.restriction(ch[p], ch[p + 1]).at(q);
            if (r) h.add_block(dst, src, *r, sign);
          }
        }
      }
      m.dc.set_dh(p, q, h.build());
    }
  return m;
}

// Derived sections over u computed by the chain model, ignoring any
// presentation.
template <class K>
CochainComplex<K> roos_sections(const CellSheafComplex<K>& s, const CellSet& u, bool check = false) {
  auto m = roos_model(s, u);
  if (m.chains.max_p() < 0 || s.hi() < s.lo()) return CochainComplex<K>(s.lo(), {}, {});
  return total_complex(m.dc, check);
}

// The chain model read as a complex of injectives: the summand of a chain
// is based at its minimum.
template <class K>
InjectiveComplex<K> roos_resolution(const CellSheafComplex<K>& s, const CellSet& u) {
  auto m = roos_model(s, u);
  InjectiveComplex<K> k;
  k.complex = s.complex_ptr();
  if (m.chains.max_p() < 0 || s.hi() < s.lo()) {
    k.lo = s.lo();
    return k;
  }
  auto tot = total_complex(m.dc, false);
  k.lo = tot.lo();
  for (int t = tot.lo(); t <= tot.hi(); ++t) {
    std::vector<int> b;
    b.reserve(tot.dim(t));
    for (int p = 0; p <= m.chains.max_p(); ++p) {
      int q = t - p;
      if (q < m.q_lo || q > m.q_hi) continue;
      for (const auto& ch : m.chains.by_length[p]) b.insert(b.end(), s.stalk(ch.back()).dim(q), ch.front());
    }
    k.base.push_back(std::move(b));
  }
  for (int t = tot.lo(); t < tot.hi(); ++t) k.d.push_back(tot.d(t));
  return k;
}

}  // namespace icsheaf
