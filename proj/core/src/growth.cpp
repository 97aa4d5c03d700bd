#include "d0/growth.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <stdexcept>

namespace d0 {

// ---------------------------------------------------------------- index

HypercubeIndex::HypercubeIndex(const PartialD0Graph& g) : through_(g.num_squares()) {
  std::map<Hypercube, int> seen;
  for (int s = 0; s < g.num_squares(); ++s)
    for (const Hypercube& h : hypercubes_through(g, s)) seen.emplace(h, 0);
  cubes_.reserve(seen.size());
  for (auto& [h, id] : seen) {
    id = static_cast<int>(cubes_.size());
    cubes_.push_back(h);
    ids_.push_back(hypercube_square_ids(g, h));
  }
  for (int h = 0; h < size(); ++h)
    for (int s : ids_[h])
      if (s >= 0) through_[s].push_back(h);
}

HypercubePattern HypercubeIndex::pattern(const PartialD0Graph& g, int h) const {
  HypercubePattern t;
  for (int k = 0; k < 8; ++k) t[k] = ids_[h][k] < 0 ? SquareType::Irrelevant : g.type(ids_[h][k]);
  return t;
}

// ---------------------------------------------------------------- forcing

namespace {

bool typed(SquareType t) { return t == SquareType::Knuth || t == SquareType::Rotation; }

class SquareQueue {
 public:
  explicit SquareQueue(int n) : queued_(n, 0) {}
  void push(int x) {
    if (!queued_[x]) {
      queued_[x] = 1;
      q_.push_back(x);
    }
  }
  bool empty() const { return q_.empty(); }
  int pop() {
    int x = q_.front();
    q_.pop_front();
    queued_[x] = 0;
    return x;
  }

 private:
  std::vector<char> queued_;
  std::deque<int> q_;
};

}  // namespace

ForceResult force_axiom5(PartialD0Graph& g, const std::vector<int>* seeds, const Trace& trace) {
  ForceResult res;
  const int n = g.degree();
  SquareQueue q(g.num_squares());
  if (seeds) {
    for (int s : *seeds) q.push(s);
  } else {
    for (int s = 0; s < g.num_squares(); ++s)
      if (typed(g.type(s))) q.push(s);
  }

  // Both squares must end with equal types; -1 stands for a missing square.
  auto unify = [&](int x, int y) {
    SquareType tx = x < 0 ? SquareType::Irrelevant : g.type(x);
    SquareType ty = y < 0 ? SquareType::Irrelevant : g.type(y);
    if (tx == ty) return true;
    if (tx != SquareType::Undetermined && ty != SquareType::Undetermined) {
      auto nm = [&](int s) { return s < 0 ? std::string("(none)") : g.square(s).str(); };
      res.ok = false;
      res.failure = "squares " + nm(x) + " and " + nm(y) + " have types " + type_char(tx) + " and " + type_char(ty);
      return false;
    }
    int s = tx == SquareType::Undetermined ? x : y;
    SquareType t = tx == SquareType::Undetermined ? ty : tx;
    g.assign(s, t);
    ++res.determined;
    if (trace) trace("force " + g.square(s).str() + " " + type_char(t));
    q.push(s);
    return true;
  };

  while (!q.empty()) {
    const int s = q.pop();
    if (!typed(g.type(s))) continue;
    const int c = g.square(s).color;
    for (int m = 0; m < 4; ++m) {
      const int v = g.square_member(s, m);
      if (v < 0) continue;
      // Edges of other colors at v carry the type of s to their other end.
      for (int i = 2; i <= n - 1; ++i) {
        if (std::abs(i - c) < 3) continue;
        int w = g.neighbor(v, i);
        if (w >= 0 && !unify(s, g.square_at(w, c))) return res;
      }
      // The edge of s at v carries the types of the squares at v.
      int w = g.neighbor(v, c);
      if (w < 0) continue;
      for (int j = 2; j <= n - 1; ++j) {
        if (std::abs(j - c) < 3) continue;
        int sv = g.square_at(v, j);
        if (sv >= 0 && !unify(sv, g.square_at(w, j))) return res;
      }
    }
  }
  return res;
}

std::optional<HypercubePattern> advanced_force_pattern(const HypercubePattern& t) {
  std::vector<const HypercubePattern*> cov;
  for (const HypercubePattern& p : valid_patterns())
    if (covers(p, t)) cov.push_back(&p);
  if (cov.empty()) return std::nullopt;
  HypercubePattern out = t;
  for (int k = 0; k < 8; ++k) {
    if (t[k] != SquareType::Undetermined) continue;
    SquareType first = (*cov.front())[k];
    if (std::all_of(cov.begin(), cov.end(), [&](const HypercubePattern* p) { return (*p)[k] == first; }))
      out[k] = first;
  }
  return out;
}

ForceResult advanced_force_axiom5(PartialD0Graph& g, const HypercubeIndex& index, const std::vector<int>* seeds,
                                  const Trace& trace) {
  ForceResult res;
  SquareQueue q(index.size());
  if (seeds) {
    for (int s : *seeds)
      for (int h : index.through(s)) q.push(h);
  } else {
    for (int h = 0; h < index.size(); ++h) q.push(h);
  }
  while (!q.empty()) {
    const int h = q.pop();
    HypercubePattern t = index.pattern(g, h);
    std::optional<HypercubePattern> done = advanced_force_pattern(t);
    if (!done) {
      res.ok = false;
      res.failure = "hypercube " + index.cube(h).square(0, 0).str() + " x " + index.cube(h).square(0, 2).str() +
                    " has pattern " + pattern_str(t) + " covered by no valid pattern";
      return res;
    }
    for (int k = 0; k < 8; ++k) {
      if (t[k] != SquareType::Undetermined || (*done)[k] == SquareType::Undetermined) continue;
      const int s = index.ids(h)[k];
      g.assign(s, (*done)[k]);
      ++res.determined;
      if (trace) trace("force " + g.square(s).str() + " " + type_char((*done)[k]));
      for (int h2 : index.through(s)) q.push(h2);
    }
  }
  return res;
}

ForceResult advanced_force_axiom5(PartialD0Graph& g) {
  HypercubeIndex index(g);
  return advanced_force_axiom5(g, index);
}

// ---------------------------------------------------------------- GrowD5Graph

GrowD5Result grow_d5(PartialD0Graph g, const Trace& trace) {
  GrowD5Result out;
  bool first = true;
  int cursor = 0;
  // Squares only ever become determined, so the least undetermined index never decreases.
  while (true) {
    while (cursor < g.num_squares() && g.type(cursor) != SquareType::Undetermined) ++cursor;
    if (cursor == g.num_squares()) break;
    g.assign(cursor, SquareType::Knuth);
    ++out.choices;
    if (trace) trace("choose " + g.square(cursor).str() + " K");
    std::vector<int> seed{cursor};
    ForceResult r = first ? force_axiom5(g, nullptr, trace) : force_axiom5(g, &seed, trace);
    first = false;
    if (!r.ok) {
      out.failure = r.failure;
      out.graph = std::move(g);
      return out;
    }
  }
  out.ok = true;
  out.graph = std::move(g);
  return out;
}

// ---------------------------------------------------------------- Q graph

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

std::vector<std::vector<int>> q_components(const PartialD0Graph& g, const HypercubeIndex& index,
                                           const std::vector<int>& squares) {
  std::vector<char> in(g.num_squares(), 0);
  std::vector<int> vs;
  for (int s : squares)
    if (g.type(s) == SquareType::Undetermined && !in[s]) {
      in[s] = 1;
      vs.push_back(s);
    }
  std::sort(vs.begin(), vs.end());
  UnionFind uf(g.num_squares());
  for (int s : vs)
    for (int h : index.through(s))
      for (int t : index.ids(h))
        if (t >= 0 && in[t]) uf.unite(s, t);
  std::map<int, std::vector<int>> by_root;
  for (int s : vs) by_root[uf.find(s)].push_back(s);
  std::vector<std::vector<int>> comps;
  for (auto& [root, c] : by_root) comps.push_back(std::move(c));
  std::stable_sort(comps.begin(), comps.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.front() < b.front();
  });
  return comps;
}

QGraph q_graph(const PartialD0Graph& g, const HypercubeIndex& index) {
  QGraph q;
  for (int s = 0; s < g.num_squares(); ++s)
    if (g.type(s) == SquareType::Undetermined) q.squares.push_back(s);
  q.components = q_components(g, index, q.squares);
  return q;
}

// ---------------------------------------------------------------- stat_b

std::vector<int> b_set(const SignedColoredGraph& g, int i) {
  std::vector<int> out;
  if (i < 4 || i > g.degree() - 2) return out;
  for (int w = 0; w < g.size(); ++w) {
    int a = g.neighbor(w, i - 2);
    if (a < 0) continue;
    int b = g.neighbor(a, i);
    if (b < 0) continue;
    int c = g.neighbor(b, i - 2);
    int d = g.neighbor(w, i);
    if (c < 0 || d < 0) continue;
    int e = g.neighbor(d, i - 2);
    if (e < 0) continue;
    std::array<int, 6> six{c, b, a, w, d, e};
    std::sort(six.begin(), six.end());
    if (std::adjacent_find(six.begin(), six.end()) != six.end()) continue;
    if (itype_W(g, w, i + 1) && !itype_W(g, a, i + 1)) out.push_back(w);
  }
  return out;
}

std::optional<std::int64_t> stat_b(const SignedColoredGraph& g) {
  if (!check_axiom4b(g)) return std::nullopt;
  std::int64_t s = 0;
  for (int i = 4; i <= g.degree() - 2; ++i) s += static_cast<std::int64_t>(b_set(g, i).size());
  return s;
}

std::optional<std::int64_t> stat_b(const PartialD0Graph& g) { return stat_b(g.to_signed()); }

// ---------------------------------------------------------------- GrowDGraph

const char* grow_status_str(GrowStatus s) {
  switch (s) {
    case GrowStatus::Finished: return "finished";
    case GrowStatus::Failure: return "failure";
    case GrowStatus::Aborted: return "aborted";
  }
  return "?";
}

namespace {

using Stat = std::optional<std::int64_t>;

bool stat_le(const Stat& x, const Stat& y) {
  if (!y) return true;
  return x && *x <= *y;
}

struct State {
  PartialD0Graph g;
  bool closed = false;  // a fixpoint of AdvancedForceAxiom5
};

class Grower {
 public:
  Grower(const HypercubeIndex& index, const GrowOptions& opt) : index_(index), opt_(opt) {}

  std::pair<State, Stat> grow(State H, const std::vector<int>& Q) {
    for (const std::vector<int>& C : q_components(H.g, index_, Q)) {
      auto [G, stat] = one(H, C);
      H = std::move(G);
      if (!stat) return {std::move(H), std::nullopt};
    }
    Stat s = stat_b(H.g);
    return {std::move(H), s};
  }

  std::uint64_t choices() const { return choices_; }
  bool aborted() const { return aborted_; }

 private:
  // Sets X to t and forces; nullopt on FAILURE.
  std::optional<State> branch(const State& H, int X, SquareType t) {
    State S = H;
    S.g.assign(X, t);
    if (opt_.trace) opt_.trace("choose " + S.g.square(X).str() + " " + type_char(t));
    std::vector<int> seed{X};
    ForceResult r = advanced_force_axiom5(S.g, index_, S.closed ? &seed : nullptr, opt_.trace);
    if (!r.ok) {
      if (opt_.trace) opt_.trace("failure: " + r.failure);
      return std::nullopt;
    }
    S.closed = true;
    return S;
  }

  std::vector<int> still_open(const State& S, const std::vector<int>& C) const {
    std::vector<int> out;
    for (int s : C)
      if (S.g.type(s) == SquareType::Undetermined) out.push_back(s);
    return out;
  }

  std::pair<State, Stat> one(const State& H, const std::vector<int>& C0) {
    std::vector<int> C = still_open(H, C0);
    if (C.empty()) return {H, std::int64_t{0}};
    if (aborted_ || (opt_.budget && choices_ >= opt_.budget)) {
      aborted_ = true;
      return {H, std::nullopt};
    }
    ++choices_;
    const int X = C.front();
    const bool small = static_cast<int>(C.size()) <= opt_.small;

    std::optional<State> GK = branch(H, X, SquareType::Knuth);
    if (!GK) return {H, std::nullopt};
    std::vector<int> QK = still_open(*GK, C);
    auto [K, statK] = grow(std::move(*GK), QK);
    if (small) {
      if (aborted_) return {std::move(K), std::nullopt};
      std::optional<State> GR = branch(H, X, SquareType::Rotation);
      if (!GR) return {H, std::nullopt};
      std::vector<int> QR = still_open(*GR, C);
      auto [R, statR] = grow(std::move(*GR), QR);
      if (stat_le(statK, statR)) return {std::move(K), statK};
      return {std::move(R), statR};
    }
    if (statK || aborted_) return {std::move(K), statK};
    std::optional<State> GR = branch(H, X, SquareType::Rotation);
    if (!GR) return {H, std::nullopt};
    std::vector<int> QR = still_open(*GR, C);
    return grow(std::move(*GR), QR);
  }

  const HypercubeIndex& index_;
  const GrowOptions& opt_;
  std::uint64_t choices_ = 0;
  bool aborted_ = false;
};

}  // namespace

GrowOutcome grow_d_graph(const PartialD0Graph& g, const std::vector<int>& q_squares, const GrowOptions& opt) {
  HypercubeIndex index(g);
  Grower grower(index, opt);
  auto [S, stat] = grower.grow(State{g, false}, q_squares);
  GrowOutcome out;
  out.graph = std::move(S.g);
  out.stat = stat;
  out.choices = grower.choices();
  out.status = grower.aborted() ? GrowStatus::Aborted : (stat ? GrowStatus::Finished : GrowStatus::Failure);
  return out;
}

GrowOutcome grow_d_graph(const PartialD0Graph& g, const GrowOptions& opt) {
  std::vector<int> all;
  for (int s = 0; s < g.num_squares(); ++s)
    if (g.type(s) == SquareType::Undetermined) all.push_back(s);
  return grow_d_graph(g, all, opt);
}

// ---------------------------------------------------------------- seeds

std::vector<Word> largest_component_after_all_knuth(const std::vector<Word>& W) {
  PartialD0Graph g = PartialD0Graph::minimal(W).complete_all(SquareType::Knuth);
  std::vector<std::vector<int>> comps = g.components();
  if (comps.empty()) return {};
  std::size_t best = 0;
  for (std::size_t c = 1; c < comps.size(); ++c)
    if (comps[c].size() > comps[best].size()) best = c;
  std::vector<Word> out;
  for (int v : comps[best]) out.push_back(g.vertex(v));
  return out;
}

PartialD0Graph random_d0_graph(int n, int N, std::mt19937_64& rng, double p) {
  PartialD0Graph g = PartialD0Graph::minimal(repetition_free_words(n, N), N);
  std::bernoulli_distribution coin(0.5);
  for (int s = 0; s < g.num_squares(); ++s)
    if (g.type(s) == SquareType::Undetermined) g.assign(s, coin(rng) ? SquareType::Knuth : SquareType::Rotation);
  if (p >= 1.0) return g;
  std::bernoulli_distribution keep(p);
  std::vector<std::vector<int>> comps = g.components();
  std::vector<int> vs;
  for (const auto& c : comps)
    if (keep(rng)) vs.insert(vs.end(), c.begin(), c.end());
  if (vs.empty()) vs = comps[std::uniform_int_distribution<std::size_t>(0, comps.size() - 1)(rng)];
  std::sort(vs.begin(), vs.end());
  return g.induced(vs);
}

}  // namespace d0
