#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "d0/axioms.hpp"
#include "d0/lp.hpp"

namespace d0::oracles {

inline bool independent(const WeightedGraph& g, const std::vector<int>& s) {
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = a + 1; b < s.size(); ++b)
      if (g.adjacent(s[a], s[b])) return false;
  return true;
}

inline std::int64_t weight_of(const WeightedGraph& g, const std::vector<int>& s) {
  std::int64_t w = 0;
  for (int v : s) w += g.weight[v];
  return w;
}

// Exhaustive over subsets for small graphs.
inline std::int64_t mis_subsets(const WeightedGraph& g) {
  std::int64_t best = 0;
  std::vector<std::uint32_t> nb(g.n, 0);
  for (int u = 0; u < g.n; ++u)
    for (int v = 0; v < g.n; ++v)
      if (g.adjacent(u, v)) nb[u] |= 1U << v;
  for (std::uint32_t S = 0; S < (1U << g.n); ++S) {
    bool ok = true;
    std::int64_t w = 0;
    for (int v = 0; v < g.n && ok; ++v)
      if ((S >> v) & 1U) {
        ok = (nb[v] & S) == 0;
        w += g.weight[v];
      }
    if (ok) best = std::max(best, w);
  }
  return best;
}

// Enumerates maximal independent sets (cliques of the complement) with
// Bron-Kerbosch; with positive weights the optimum is among them.
inline std::int64_t mis_bron_kerbosch(const WeightedGraph& g) {
  std::int64_t best = 0;
  std::function<void(std::uint32_t, std::uint32_t, std::uint32_t, std::int64_t)> rec =
      [&](std::uint32_t R, std::uint32_t P, std::uint32_t X, std::int64_t w) {
        if (!P && !X) {
          best = std::max(best, w);
          return;
        }
        for (int v = 0; v < g.n; ++v) {
          if (!((P >> v) & 1U)) continue;
          std::uint32_t non = 0;
          for (int u = 0; u < g.n; ++u)
            if (u != v && !g.adjacent(u, v)) non |= 1U << u;
          rec(R | (1U << v), P & non, X & non, w + g.weight[v]);
          P &= ~(1U << v);
          X |= 1U << v;
        }
        (void)R;
      };
  rec(0, (g.n == 32 ? ~0U : ((1U << g.n) - 1U)), 0, 0);
  return best;
}

inline WeightedGraph random_graph(std::mt19937_64& rng, int n, double p, int wmax) {
  WeightedGraph g(n);
  std::uniform_real_distribution<double> u(0, 1);
  for (int v = 0; v < n; ++v) g.weight[v] = 1 + static_cast<std::int64_t>(rng() % wmax);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (u(rng) < p) g.add_edge(a, b);
  return g;
}

// Blocks are random partitions of a universe of `U` ranks, rows keep a random
// positive weight or are dropped.
inline PackingInstance random_instance(std::mt19937_64& rng, int blocks, int U) {
  PackingInstance inst;
  for (int b = 0; b < blocks; ++b) {
    inst.block_names.push_back("block" + std::to_string(b));
    int classes = 2 + static_cast<int>(rng() % 4);
    std::vector<std::vector<std::uint32_t>> parts(classes);
    for (int r = 0; r < U; ++r) parts[rng() % classes].push_back(static_cast<std::uint32_t>(r));
    for (int c = 0; c < classes; ++c) {
      if (parts[c].empty() || rng() % 4 == 0) continue;
      inst.rows.push_back({b, c, "row", parts[c], 1 + static_cast<std::int64_t>(rng() % 3)});
    }
  }
  return inst;
}

inline bool disjoint_rows(const PackingInstance& inst, const std::vector<int>& rows) {
  std::vector<int> seen;
  for (int r : rows)
    for (std::uint32_t x : inst.rows[r].support) seen.push_back(static_cast<int>(x));
  std::sort(seen.begin(), seen.end());
  return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

}  // namespace d0::oracles

namespace d0::oracles {

// Every pattern a D0 graph can show on one KR_{2,5} hypercube of S_6: choose
// the occupied vertices among its 16, type full squares freely, read off the
// 8 entries.
inline std::set<HypercubePattern> realizable_patterns() {
  PartialD0Graph s6 = PartialD0Graph::minimal(all_permutations(6));
  Hypercube h;
  for (const Hypercube& c : hypercubes(s6))
    if (c.i == 2 && c.j == 5) h = c;
  std::vector<Word> verts;
  for (const KRSquare& sq : h.squares())
    for (const Word& w : sq.members()) verts.push_back(w);
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  std::array<std::array<int, 4>, 8> slot{};
  for (int k = 0; k < 8; ++k) {
    KRSquare sq = h.square(k / 4, k % 4);
    for (int m = 0; m < 4; ++m)
      slot[k][m] = static_cast<int>(std::lower_bound(verts.begin(), verts.end(), sq.member(m)) - verts.begin());
  }
  std::set<HypercubePattern> realizable;
  for (std::uint32_t S = 0; S < (1U << verts.size()); ++S) {
    HypercubePattern base;
    std::vector<int> full;
    bool ok = true;
    for (int k = 0; k < 8 && ok; ++k) {
      int mask = 0;
      for (int m = 0; m < 4; ++m)
        if ((S >> slot[k][m]) & 1U) mask |= 1 << m;
      if (mask == 0) base[k] = SquareType::Irrelevant;
      else if (mask == 0b0011 || mask == 0b1100) base[k] = SquareType::Knuth;
      else if (mask == 0b0101 || mask == 0b1010) base[k] = SquareType::Rotation;
      else if (mask == 0b1111) full.push_back(k);
      else ok = false;
    }
    if (!ok) continue;
    for (std::uint32_t c = 0; c < (1U << full.size()); ++c) {
      HypercubePattern t = base;
      for (std::size_t f = 0; f < full.size(); ++f)
        t[full[f]] = ((c >> f) & 1U) ? SquareType::Rotation : SquareType::Knuth;
      realizable.insert(t);
    }
  }
  return realizable;
}

}  // namespace d0::oracles
