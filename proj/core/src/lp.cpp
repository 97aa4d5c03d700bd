#include "d0/lp.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "d0/d0graph.hpp"
#include "d0/ncsf.hpp"

namespace d0 {

int LinearProgram::num_rows() const {
  int t = 0;
  for (const auto& bj : b) t += static_cast<int>(bj.size());
  return t;
}

LinearProgram build_lp(int d, const Partition& lambda, const std::vector<Bijectivization>& specs) {
  if (lambda.size() != d) throw std::invalid_argument("build_lp: |lambda| must equal d");
  LinearProgram lp;
  lp.d = d;
  lp.lambda = lambda;
  const std::vector<Word> perms = all_permutations(d);
  lp.coeff.resize(perms.size());
  for (std::size_t r = 0; r < perms.size(); ++r) {
    lp.coeff[r] = coeff_in_J(lambda, perms[r]);
    lp.M += lp.coeff[r];
  }
  for (const Bijectivization& spec : specs) {
    ClassMatrix cm = class_matrix(spec, d);
    std::vector<std::uint8_t> seen(perms.size(), 0);
    for (const auto& row : cm.rows)
      for (std::uint32_t r : row) {
        if (seen[r]++) throw std::logic_error("build_lp: classes of " + spec.name() + " overlap");
      }
    if (std::find(seen.begin(), seen.end(), 0) != seen.end())
      throw std::invalid_argument("build_lp: classes of " + spec.name() + " do not cover W_d");
    std::vector<std::int64_t> bj;
    for (const auto& row : cm.rows) {
      std::int64_t s = 0;
      for (std::uint32_t r : row) s += lp.coeff[r];
      bj.push_back(s);
    }
    lp.b.push_back(std::move(bj));
    lp.blocks.push_back(std::move(cm));
  }
  return lp;
}

std::int64_t PackingInstance::total_weight() const {
  std::int64_t s = 0;
  for (const auto& r : rows) s += r.weight;
  return s;
}

std::vector<std::int64_t> PackingInstance::block_weights(int block) const {
  std::vector<std::int64_t> out;
  for (const auto& r : rows)
    if (r.block == block) out.push_back(r.weight);
  return out;
}

PackingInstance prune(const LinearProgram& lp) {
  PackingInstance inst;
  inst.d = lp.d;
  inst.lambda = lp.lambda;
  inst.M = lp.M;
  for (std::size_t j = 0; j < lp.blocks.size(); ++j) {
    const ClassMatrix& cm = lp.blocks[j];
    inst.block_names.push_back(cm.spec.name());
    for (int i = 0; i < cm.num_rows(); ++i) {
      // A row of negative weight never enters an optimal packing either.
      if (lp.b[j][i] <= 0) continue;
      inst.rows.push_back({static_cast<int>(j), i, cm.spec.name() + " " + cm.labels[i], cm.rows[i], lp.b[j][i]});
    }
  }
  return inst;
}

WeightedGraph::WeightedGraph(int n)
    : n(n), weight(n, 1), adj(n, std::vector<std::uint64_t>((n + 63) / 64, 0)) {}

void WeightedGraph::add_edge(int u, int v) {
  if (u == v) throw std::invalid_argument("WeightedGraph: loop");
  adj[u][v >> 6] |= 1ULL << (v & 63);
  adj[v][u >> 6] |= 1ULL << (u & 63);
}

int WeightedGraph::num_edges() const {
  int e = 0;
  for (const auto& row : adj)
    for (std::uint64_t x : row) e += std::popcount(x);
  return e / 2;
}

namespace {

// Rows whose supports meet, found through the rows containing each rank.
std::vector<std::pair<int, int>> meeting_rows(const PackingInstance& inst) {
  std::vector<std::vector<int>> at;
  for (int i = 0; i < inst.num_rows(); ++i)
    for (std::uint32_t r : inst.rows[i].support) {
      if (r >= at.size()) at.resize(r + 1);
      at[r].push_back(i);
    }
  std::vector<std::pair<int, int>> pairs;
  for (const auto& rs : at)
    for (std::size_t x = 0; x < rs.size(); ++x)
      for (std::size_t y = x + 1; y < rs.size(); ++y) pairs.emplace_back(rs[x], rs[y]);
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  return pairs;
}

}  // namespace

WeightedGraph row_conflict_graph(const PackingInstance& inst) {
  WeightedGraph g(inst.num_rows());
  for (int i = 0; i < g.n; ++i) g.weight[i] = inst.rows[i].weight;
  for (auto [u, v] : meeting_rows(inst)) g.add_edge(u, v);
  return g;
}

ConflictGraph conflict_graph(const PackingInstance& inst) {
  ConflictGraph cg;
  std::vector<int> first;
  for (int i = 0; i < inst.num_rows(); ++i) {
    first.push_back(static_cast<int>(cg.block_of.size()));
    for (std::int64_t c = 0; c < inst.rows[i].weight; ++c) cg.block_of.push_back(i);
  }
  cg.graph = WeightedGraph(static_cast<int>(cg.block_of.size()));
  for (auto [u, v] : meeting_rows(inst))
    for (std::int64_t a = 0; a < inst.rows[u].weight; ++a)
      for (std::int64_t b = 0; b < inst.rows[v].weight; ++b)
        cg.graph.add_edge(first[u] + static_cast<int>(a), first[v] + static_cast<int>(b));
  return cg;
}

namespace {

using Bits = std::vector<std::uint64_t>;

int lowest(const Bits& s) {
  for (std::size_t w = 0; w < s.size(); ++w)
    if (s[w]) return static_cast<int>(w * 64 + std::countr_zero(s[w]));
  return -1;
}

bool empty(const Bits& s) {
  return std::all_of(s.begin(), s.end(), [](std::uint64_t x) { return x == 0; });
}

class MisSolver {
 public:
  explicit MisSolver(const WeightedGraph& g) : g_(g) {}

  IndependentSet run() {
    Bits cand((g_.n + 63) / 64, 0);
    for (int v = 0; v < g_.n; ++v) cand[v >> 6] |= 1ULL << (v & 63);
    best_.value = -1;
    std::vector<int> cur;
    search(cand, 0, cur);
    best_.nodes = nodes_;
    return best_;
  }

 private:
  // Greedy clique cover of the candidates; each clique contributes its
  // heaviest vertex.
  std::int64_t cover_bound(const Bits& cand) const {
    std::vector<std::vector<int>> cliques;
    std::vector<std::int64_t> heaviest;
    Bits rest = cand;
    for (int v = lowest(rest); v >= 0; v = lowest(rest)) {
      rest[v >> 6] &= ~(1ULL << (v & 63));
      bool placed = false;
      for (std::size_t c = 0; c < cliques.size() && !placed; ++c) {
        if (std::all_of(cliques[c].begin(), cliques[c].end(), [&](int u) { return g_.adjacent(u, v); })) {
          cliques[c].push_back(v);
          heaviest[c] = std::max(heaviest[c], g_.weight[v]);
          placed = true;
        }
      }
      if (!placed) {
        cliques.push_back({v});
        heaviest.push_back(g_.weight[v]);
      }
    }
    std::int64_t s = 0;
    for (std::int64_t h : heaviest) s += std::max<std::int64_t>(h, 0);
    return s;
  }

  void search(Bits cand, std::int64_t value, std::vector<int>& cur) {
    ++nodes_;
    if (empty(cand)) {
      if (value > best_.value) {
        best_.value = value;
        best_.vertices = cur;
      }
      return;
    }
    if (value + cover_bound(cand) <= best_.value) return;
    int v = lowest(cand);
    cand[v >> 6] &= ~(1ULL << (v & 63));
    if (g_.weight[v] > 0) {
      Bits with = cand;
      for (std::size_t w = 0; w < with.size(); ++w) with[w] &= ~g_.adj[v][w];
      cur.push_back(v);
      search(with, value + g_.weight[v], cur);
      cur.pop_back();
    }
    search(cand, value, cur);
  }

  const WeightedGraph& g_;
  IndependentSet best_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

IndependentSet max_weight_independent_set(const WeightedGraph& g) {
  if (g.n == 0) return {};
  return MisSolver(g).run();
}

Packing max_weight_packing(const PackingInstance& inst) {
  IndependentSet s = max_weight_independent_set(row_conflict_graph(inst));
  return {s.value, s.vertices, s.nodes};
}

std::vector<int> theta(const ConflictGraph& cg, const std::vector<int>& rows) {
  std::vector<int> out;
  for (int v = 0; v < cg.num_vertices(); ++v)
    if (std::binary_search(rows.begin(), rows.end(), cg.block_of[v])) out.push_back(v);
  return out;
}

Counterexample extract_counterexample(const PackingInstance& inst, const LinearProgram& lp,
                                      const std::vector<int>& rows) {
  Counterexample cx;
  std::vector<std::uint8_t> in(factorial(inst.d), 0);
  for (int i : rows) {
    cx.selected_weight += inst.rows.at(i).weight;
    for (std::uint32_t r : inst.rows[i].support) {
      if (in[r]) throw std::invalid_argument("extract_counterexample: selected classes overlap");
      in[r] = 1;
    }
  }
  if (cx.selected_weight <= inst.M)
    throw std::invalid_argument("extract_counterexample: selection weight does not exceed M");
  for (std::uint32_t r = 0; r < in.size(); ++r) {
    Word w = lehmer_unrank(r, inst.d);
    if (in[r]) {
      cx.W.push_back(w);
    } else {
      cx.W_bar.push_back(w);
      cx.certificate_direct += lp.coeff[r];
    }
  }
  cx.certificate = inst.M - cx.selected_weight;
  cx.W_is_kr = is_kr_set(cx.W);
  cx.W_bar_is_kr = is_kr_set(cx.W_bar);
  return cx;
}

const char* verdict_str(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Fails: return "fails";
    case Verdict::Unknown: return "undecided";
  }
  return "?";
}

PackingBoundReport check_packing_bound(const PackingInstance& inst, const LinearProgram& lp) {
  PackingBoundReport rep;
  rep.M = inst.M;
  Packing p = max_weight_packing(inst);
  rep.integer_optimum = p.value;
  // The real optimum of the dual is at least the integer optimum.
  if (p.value > inst.M) {
    rep.dual_value = Verdict::Fails;
    rep.positive_sum = Verdict::Fails;
    std::int64_t cert = inst.M - p.value;
    rep.certificate = cert < 0 ? Verdict::Fails : Verdict::Holds;
    return rep;
  }
  // J_lambda with no negative coefficient on W_d is itself a positive sum.
  if (std::all_of(lp.coeff.begin(), lp.coeff.end(), [](std::int64_t c) { return c >= 0; })) {
    rep.positive_sum = rep.dual_value = rep.certificate = Verdict::Holds;
  }
  return rep;
}

std::string PackingBoundReport::str() const {
  std::ostringstream out;
  out << "M = " << M << "\n";
  out << "optimal integer value " << integer_optimum << "\n";
  out << "(i)-(iii) " << verdict_str(positive_sum) << "\n";
  out << "(iv) " << verdict_str(dual_value) << "\n";
  out << "(v) " << verdict_str(certificate) << "\n";
  return out.str();
}

std::vector<Bijectivization> standard_specs(int kmax) {
  std::vector<Bijectivization> specs;
  for (int k = 1; k <= kmax; ++k) specs.push_back(Bijectivization::lam(k));
  specs.push_back(Bijectivization::plactic());
  return specs;
}

std::vector<int> reference_selection(const PackingInstance& inst) {
  if (inst.d != 8) throw std::invalid_argument("reference_selection: needs d = 8");
  const std::uint32_t r3 = static_cast<std::uint32_t>(lehmer_rank(Word::parse("78634521")));
  const std::uint32_t r7 = static_cast<std::uint32_t>(lehmer_rank(Word::parse("75183642")));
  auto has = [](const PackingRow& row, std::uint32_t r) {
    return std::binary_search(row.support.begin(), row.support.end(), r);
  };
  std::vector<int> sel;
  for (int i = 0; i < inst.num_rows(); ++i) {
    const PackingRow& row = inst.rows[i];
    const std::string& name = inst.block_names[row.block];
    if (name == "plactic" && row.label != "plactic P=12/34/56/78") sel.push_back(i);
    if (name == "lam3" && has(row, r3)) sel.push_back(i);
    if (name == "lam7" && has(row, r7)) sel.push_back(i);
  }
  std::sort(sel.begin(), sel.end());
  return sel;
}

std::string instance_report(const PackingInstance& inst) {
  std::ostringstream out;
  out << "d = " << inst.d << ", lambda = " << inst.lambda.str() << ", M = " << inst.M << "\n";
  out << "rows " << inst.num_rows() << ", total weight " << inst.total_weight() << "\n";
  for (std::size_t j = 0; j < inst.block_names.size(); ++j) {
    out << "b'" << (j + 1) << " (" << inst.block_names[j] << "):";
    for (std::int64_t w : inst.block_weights(static_cast<int>(j))) out << ' ' << w;
    out << "\n";
  }
  return out.str();
}

}  // namespace d0
