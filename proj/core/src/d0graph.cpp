#include "d0/d0graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace d0 {

// ---------------------------------------------------------------- signed graph

SignedColoredGraph::SignedColoredGraph(int degree, std::vector<std::uint32_t> descents)
    : n_(degree), des_(std::move(descents)) {
  if (degree < 1 || degree > kMaxLength) throw std::invalid_argument("SignedColoredGraph: degree");
  const std::size_t slots = static_cast<std::size_t>(n_ + 1) * des_.size();
  E_.assign(slots, -1);
  etype_.assign(slots, 0);
}

std::optional<EdgeType> SignedColoredGraph::edge_type(int v, int color) const {
  if (!has_color(color)) return std::nullopt;
  switch (etype_[static_cast<std::size_t>(color) * size() + v]) {
    case 1: return EdgeType::Knuth;
    case 2: return EdgeType::Rotation;
    default: return std::nullopt;
  }
}

void SignedColoredGraph::add_edge(int color, int u, int v, std::optional<EdgeType> type) {
  if (!has_color(color)) throw std::invalid_argument("add_edge: color out of range");
  if (u == v || u < 0 || v < 0 || u >= size() || v >= size()) throw std::invalid_argument("add_edge: endpoints");
  const std::size_t base = static_cast<std::size_t>(color) * size();
  if (E_[base + u] != -1 || E_[base + v] != -1) throw std::invalid_argument("add_edge: endpoint already matched");
  E_[base + u] = v;
  E_[base + v] = u;
  std::uint8_t t = !type ? 0 : (*type == EdgeType::Knuth ? 1 : 2);
  etype_[base + u] = etype_[base + v] = t;
}

void SignedColoredGraph::set_labels(std::vector<Word> labels) {
  if (static_cast<int>(labels.size()) != size()) throw std::invalid_argument("set_labels: size");
  labels_ = std::move(labels);
}

SignedColoredGraph SignedColoredGraph::restrict(int i, int j) const {
  if (i < 1 || j > n_ || j - i < 1) throw std::invalid_argument("restrict: interval");
  const int m = j - i + 1;
  const std::uint32_t mask = (m - 1 >= 32) ? ~0U : ((1U << (m - 1)) - 1U);
  std::vector<std::uint32_t> des(des_.size());
  for (std::size_t v = 0; v < des_.size(); ++v) des[v] = (des_[v] >> (i - 1)) & mask;
  SignedColoredGraph out(m, std::move(des));
  const int V = size();
  for (int c = i + 1; c <= j - 1; ++c) {
    const std::size_t src = static_cast<std::size_t>(c) * V;
    const std::size_t dst = static_cast<std::size_t>(c - i + 1) * V;
    std::copy_n(E_.begin() + src, V, out.E_.begin() + dst);
    std::copy_n(etype_.begin() + src, V, out.etype_.begin() + dst);
  }
  if (!labels_.empty()) {
    out.labels_.reserve(V);
    for (const Word& w : labels_) out.labels_.push_back(subword(w, i - 1, m));
  }
  out.origin_.resize(V);
  for (int v = 0; v < V; ++v) out.origin_[v] = origin(v);
  return out;
}

std::vector<std::vector<int>> SignedColoredGraph::components() const {
  const int V = size();
  std::vector<int> comp(V, -1);
  std::vector<std::vector<int>> out;
  std::vector<int> stack;
  for (int s = 0; s < V; ++s) {
    if (comp[s] != -1) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    comp[s] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      out[id].push_back(v);
      for (int c = 2; c <= n_ - 1; ++c) {
        int w = neighbor(v, c);
        if (w >= 0 && comp[w] == -1) {
          comp[w] = id;
          stack.push_back(w);
        }
      }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

FExpansion SignedColoredGraph::fexpansion(const std::vector<int>& vertices) const {
  FExpansion f(n_);
  for (int v : vertices) f.add(des_[v], 1);
  return f;
}

FExpansion SignedColoredGraph::fexpansion() const {
  FExpansion f(n_);
  for (std::uint32_t d : des_) f.add(d, 1);
  return f;
}

// ---------------------------------------------------------------- skeleton

struct SquareKey {
  std::uint64_t base;
  int color;
  friend bool operator==(const SquareKey&, const SquareKey&) = default;
};

struct SquareKeyHash {
  std::size_t operator()(const SquareKey& k) const noexcept {
    std::uint64_t h = (k.base + static_cast<std::uint64_t>(k.color) * 0x632BE59BD9B4E019ULL) * 0x9E3779B97F4A7C15ULL;
    return static_cast<std::size_t>(h ^ (h >> 31));
  }
};

struct D0Skeleton {
  int n = 0;
  int N = 0;
  std::vector<Word> vertices;  // sorted
  std::unordered_map<Word, int, WordHash> index;
  std::vector<KRSquare> squares;  // canonical order
  std::vector<std::array<std::int32_t, 4>> members;
  std::vector<std::uint8_t> occupancy;
  std::vector<std::int32_t> at;  // vertex-major, (n+1) slots per vertex
  std::unordered_map<SquareKey, int, SquareKeyHash> lookup;

  int square_at(int v, int color) const {
    if (color < 2 || color > n - 1) return -1;
    return at[static_cast<std::size_t>(v) * (n + 1) + color];
  }
};

namespace {

// Type forced on a square that meets W in exactly two words.
SquareType forced_type(const std::array<std::int32_t, 4>& mem) {
  int first = -1, second = -1;
  for (int m = 0; m < 4; ++m) {
    if (mem[m] < 0) continue;
    (first < 0 ? first : second) = m;
  }
  return ((first ^ second) == 1) ? SquareType::Knuth : SquareType::Rotation;
}

bool is_forced_pair(const std::array<std::int32_t, 4>& mem) {
  int first = -1, second = -1;
  for (int m = 0; m < 4; ++m) {
    if (mem[m] < 0) continue;
    (first < 0 ? first : second) = m;
  }
  return (first ^ second) != 3;
}

void validate_vertex_set(const std::vector<Word>& W, int N) {
  if (W.empty()) return;
  const int n = W.front().size();
  for (const Word& w : W) {
    if (w.size() != n) throw std::invalid_argument("vertex set: words of different lengths");
    if (!w.repetition_free()) throw std::invalid_argument("vertex set: word " + w.str() + " repeats a letter");
    validate_letters(w, N);
  }
}

std::shared_ptr<D0Skeleton> make_skeleton(std::vector<Word> W, int N) {
  std::sort(W.begin(), W.end());
  if (std::adjacent_find(W.begin(), W.end()) != W.end()) throw std::invalid_argument("vertex set: duplicate word");
  int maxl = 0;
  for (const Word& w : W) maxl = std::max(maxl, w.max_letter());
  if (N == 0) N = maxl;
  validate_vertex_set(W, N);

  auto sk = std::make_shared<D0Skeleton>();
  sk->n = W.empty() ? 0 : W.front().size();
  sk->N = N;
  sk->vertices = std::move(W);
  const int V = static_cast<int>(sk->vertices.size());
  sk->index.reserve(V * 2);
  for (int v = 0; v < V; ++v) sk->index.emplace(sk->vertices[v], v);

  sk->squares = kr_squares_of(sk->vertices);
  const int S = static_cast<int>(sk->squares.size());
  sk->members.assign(S, {-1, -1, -1, -1});
  sk->occupancy.assign(S, 0);
  sk->lookup.reserve(S * 2);
  for (int s = 0; s < S; ++s) {
    const KRSquare& sq = sk->squares[s];
    sk->lookup.emplace(SquareKey{sq.base.packed(), sq.color}, s);
  }
  sk->at.assign(static_cast<std::size_t>(V) * (sk->n + 1), -1);
  for (int v = 0; v < V; ++v) {
    const Word& w = sk->vertices[v];
    for (int c = 2; c <= sk->n - 1; ++c) {
      int m = kr_member_index(w, c);
      if (m < 0) continue;
      Word base = with_window(w, c, 0);
      int s = sk->lookup.at(SquareKey{base.packed(), c});
      sk->members[s][m] = v;
      ++sk->occupancy[s];
      sk->at[static_cast<std::size_t>(v) * (sk->n + 1) + c] = s;
    }
  }
  return sk;
}

}  // namespace

KRSetReport kr_set_report(const std::vector<Word>& W) {
  auto sk = make_skeleton(W, 0);
  for (std::size_t s = 0; s < sk->squares.size(); ++s) {
    int occ = sk->occupancy[s];
    if (occ == 4) continue;
    if (occ == 2 && is_forced_pair(sk->members[s])) continue;
    return {false, sk->squares[s].str()};
  }
  return {};
}

bool is_kr_set(const std::vector<Word>& W) { return kr_set_report(W).is_kr_set; }

std::vector<Word> complement(const std::vector<Word>& W, int n, int N) {
  long total = 1;
  for (int i = 0; i < n; ++i) {
    total *= (N - i);
    if (total > 50'000'000) throw std::invalid_argument("complement: ambient set too large");
  }
  std::unordered_set<Word, WordHash> in(W.begin(), W.end());
  std::vector<Word> out;
  for (const Word& w : repetition_free_words(n, N))
    if (!in.count(w)) out.push_back(w);
  return out;
}

// ---------------------------------------------------------------- partial D0 graph

PartialD0Graph PartialD0Graph::build(std::vector<Word> W, int N) {
  PartialD0Graph g;
  auto sk = make_skeleton(std::move(W), N);
  const int S = static_cast<int>(sk->squares.size());
  g.types_.assign(S, SquareType::Undetermined);
  for (int s = 0; s < S; ++s) {
    int occ = sk->occupancy[s];
    if (occ == 4) continue;
    if (occ != 2 || !is_forced_pair(sk->members[s]))
      throw std::invalid_argument("not a KR set: square " + sk->squares[s].str() + " meets W in " + std::to_string(occ) +
                                  " word(s) that cannot form an edge");
    g.types_[s] = forced_type(sk->members[s]);
  }
  g.sk_ = std::move(sk);
  return g;
}

PartialD0Graph PartialD0Graph::minimal(std::vector<Word> W, int N) { return build(std::move(W), N); }

PartialD0Graph PartialD0Graph::typed(std::vector<Word> W, const std::function<SquareType(const KRSquare&)>& rule,
                                     int N) {
  PartialD0Graph g = build(std::move(W), N);
  for (int s = 0; s < g.num_squares(); ++s) {
    SquareType t = rule(g.square(s));
    if (t != SquareType::Knuth && t != SquareType::Rotation)
      throw std::invalid_argument("typed: rule must return Knuth or Rotation");
    if (g.types_[s] == SquareType::Undetermined) {
      g.types_[s] = t;
    } else if (g.types_[s] != t) {
      throw std::invalid_argument("typed: square " + g.square(s).str() + " meets W in a pair of the wrong type");
    }
  }
  return g;
}

int PartialD0Graph::degree() const { return sk_ ? sk_->n : 0; }
int PartialD0Graph::alphabet() const { return sk_ ? sk_->N : 0; }
int PartialD0Graph::num_vertices() const { return sk_ ? static_cast<int>(sk_->vertices.size()) : 0; }

const std::vector<Word>& PartialD0Graph::vertices() const {
  static const std::vector<Word> empty;
  return sk_ ? sk_->vertices : empty;
}

const Word& PartialD0Graph::vertex(int v) const { return sk_->vertices[v]; }

int PartialD0Graph::index_of(const Word& w) const {
  if (!sk_) return -1;
  auto it = sk_->index.find(w);
  return it == sk_->index.end() ? -1 : it->second;
}

int PartialD0Graph::num_squares() const { return static_cast<int>(types_.size()); }
const KRSquare& PartialD0Graph::square(int s) const { return sk_->squares[s]; }

int PartialD0Graph::find_square(const KRSquare& sq) const {
  if (!sk_) return -1;
  auto it = sk_->lookup.find(SquareKey{sq.base.packed(), sq.color});
  if (it == sk_->lookup.end() || sk_->squares[it->second] != sq) return -1;
  return it->second;
}

int PartialD0Graph::square_member(int s, int m) const { return sk_->members[s][m]; }
int PartialD0Graph::square_occupancy(int s) const { return sk_->occupancy[s]; }

int PartialD0Graph::square_at(int v, int color) const { return sk_->square_at(v, color); }

int PartialD0Graph::member_at(int v, int color) const {
  return square_at(v, color) < 0 ? -1 : kr_member_index(sk_->vertices[v], color);
}

int PartialD0Graph::neighbor(int v, int color) const {
  int s = square_at(v, color);
  if (s < 0) return -1;
  SquareType t = types_[s];
  if (t != SquareType::Knuth && t != SquareType::Rotation) return -1;
  return sk_->members[s][partner_member(kr_member_index(sk_->vertices[v], color), t)];
}

void PartialD0Graph::check_type(int s, SquareType t) const {
  if (sk_->occupancy[s] == 4) {
    if (t == SquareType::Irrelevant) throw std::invalid_argument("full square cannot be irrelevant");
    return;
  }
  if (t != forced_type(sk_->members[s]))
    throw std::invalid_argument("square " + sk_->squares[s].str() + " has a forced type");
}

void PartialD0Graph::assign(int s, SquareType t) {
  if (s < 0 || s >= num_squares()) throw std::out_of_range("assign: square index");
  if (t != SquareType::Knuth && t != SquareType::Rotation) throw std::invalid_argument("assign: type must be K or R");
  if (types_[s] != SquareType::Undetermined)
    throw std::invalid_argument("assign: square " + sk_->squares[s].str() + " is already determined");
  types_[s] = t;
}

PartialD0Graph PartialD0Graph::complete_all(SquareType t) const {
  if (t != SquareType::Knuth && t != SquareType::Rotation) throw std::invalid_argument("complete_all: type must be K or R");
  PartialD0Graph out = *this;
  for (SquareType& x : out.types_)
    if (x == SquareType::Undetermined) x = t;
  return out;
}

void PartialD0Graph::set_types(std::vector<SquareType> types) {
  if (static_cast<int>(types.size()) != num_squares()) throw std::invalid_argument("set_types: size");
  for (int s = 0; s < num_squares(); ++s) check_type(s, types[s]);
  types_ = std::move(types);
}

int PartialD0Graph::num_undetermined() const {
  return static_cast<int>(std::count(types_.begin(), types_.end(), SquareType::Undetermined));
}

std::vector<Edge> PartialD0Graph::edges() const {
  std::vector<Edge> out;
  for (int s = 0; s < num_squares(); ++s) {
    SquareType t = types_[s];
    if (t != SquareType::Knuth && t != SquareType::Rotation) continue;
    const auto& mem = sk_->members[s];
    EdgeType et = t == SquareType::Knuth ? EdgeType::Knuth : EdgeType::Rotation;
    for (int m = 0; m < 4; ++m) {
      int p = partner_member(m, t);
      if (m < p && mem[m] >= 0 && mem[p] >= 0)
        out.push_back({sk_->squares[s].color, et, std::min(mem[m], mem[p]), std::max(mem[m], mem[p])});
    }
  }
  return out;
}

SignedColoredGraph PartialD0Graph::to_signed() const {
  const int V = num_vertices();
  std::vector<std::uint32_t> des(V);
  for (int v = 0; v < V; ++v) des[v] = descent_set(sk_->vertices[v]).bits();
  SignedColoredGraph g(std::max(degree(), 1), std::move(des));
  for (const Edge& e : edges()) g.add_edge(e.color, e.u, e.v, e.type);
  g.set_labels(vertices());
  return g;
}

std::vector<std::vector<int>> PartialD0Graph::components() const {
  // Undetermined squares join their members as well: they are not yet split.
  const int V = num_vertices();
  std::vector<int> parent(V);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };
  for (int s = 0; s < num_squares(); ++s) {
    const auto& mem = sk_->members[s];
    if (types_[s] == SquareType::Undetermined) {
      for (int m = 1; m < 4; ++m) unite(mem[0], mem[m]);
      continue;
    }
    for (int m = 0; m < 4; ++m) {
      int p = partner_member(m, types_[s]);
      if (mem[m] >= 0 && mem[p] >= 0) unite(mem[m], mem[p]);
    }
  }
  std::vector<std::vector<int>> out;
  std::vector<int> slot(V, -1);
  for (int v = 0; v < V; ++v) {
    int r = find(v);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[slot[r]].push_back(v);
  }
  return out;
}

PartialD0Graph PartialD0Graph::induced(const std::vector<int>& vertex_indices) const {
  std::vector<Word> W;
  W.reserve(vertex_indices.size());
  for (int v : vertex_indices) W.push_back(vertex(v));
  PartialD0Graph out = build(std::move(W), alphabet());
  for (int s = 0; s < out.num_squares(); ++s) {
    int old = find_square(out.square(s));
    SquareType t = types_[old];
    if (out.types_[s] == SquareType::Undetermined) {
      out.types_[s] = t;
    } else if (t != SquareType::Undetermined && t != out.types_[s]) {
      throw std::invalid_argument("induced: subset cuts an edge of square " + out.square(s).str());
    } else if (t == SquareType::Undetermined) {
      throw std::invalid_argument("induced: subset splits undetermined square " + out.square(s).str());
    }
  }
  return out;
}

DeltaSchur PartialD0Graph::generating_function() const { return delta_schur(vertices()); }

}  // namespace d0
