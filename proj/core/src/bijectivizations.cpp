#include "d0/bijectivizations.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace d0 {

namespace {

std::string trim(std::string_view s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string_view::npos) return {};
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(a, b - a + 1));
}

std::vector<std::string> split(const std::string& s, const std::string& seps) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (seps.find(ch) != std::string::npos) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(trim(cur));
  return out;
}

Partition parse_shape(const std::string& s) {
  std::string t = trim(s);
  if (t.empty() || t == "0" || t == "∅" || t == "()") return Partition(std::vector<int>{});
  return Partition::parse(t);
}

std::vector<Cell> skew_cells(const Partition& outer, const Partition& inner) {
  if (inner.length() > outer.length()) throw std::invalid_argument("skew shape: inner shape not contained");
  std::vector<Cell> cells;
  for (int r = 0; r < outer.length(); ++r) {
    if (inner.part(r) > outer.part(r)) throw std::invalid_argument("skew shape: inner shape not contained");
    for (int c = inner.part(r); c < outer.part(r); ++c) cells.push_back({r, c, c - r});
  }
  return cells;
}

std::vector<Cell> parse_component(const std::string& token) {
  std::string t = trim(token);
  if (!t.empty() && t.front() == '[') {
    std::string digits;
    for (char ch : t) digits += (ch == '[' || ch == ']' || ch == ',') ? ' ' : ch;
    std::istringstream in(digits);
    std::vector<int> xs;
    int x;
    while (in >> x) xs.push_back(x);
    if (xs.size() % 3 != 0) throw std::invalid_argument("cells must be (row, col, content) triples: " + t);
    std::vector<Cell> cells;
    for (std::size_t i = 0; i < xs.size(); i += 3) cells.push_back({xs[i], xs[i + 1], xs[i + 2]});
    return cells;
  }
  std::size_t slash = t.find('/');
  if (slash == std::string::npos) return skew_cells(parse_shape(t), Partition(std::vector<int>{}));
  return skew_cells(parse_shape(t.substr(0, slash)), parse_shape(t.substr(slash + 1)));
}

}  // namespace

SkewTuple::SkewTuple(std::vector<std::vector<Cell>> components) : comps_(std::move(components)) {
  for (auto& comp : comps_) {
    std::sort(comp.begin(), comp.end());
    if (std::adjacent_find(comp.begin(), comp.end(), [](const Cell& x, const Cell& y) {
          return x.row == y.row && x.col == y.col;
        }) != comp.end())
      throw std::invalid_argument("skew tuple: repeated cell");
  }
}

SkewTuple SkewTuple::parse(std::string_view text) {
  std::string t = trim(text);
  std::size_t mid = t.find(")/(");
  if (!t.empty() && t.front() == '(' && t.back() == ')' && mid != std::string::npos) {
    std::vector<std::string> outer = split(t.substr(1, mid - 1), ",");
    std::vector<std::string> inner = split(t.substr(mid + 3, t.size() - mid - 4), ",");
    if (outer.size() != inner.size()) throw std::invalid_argument("skew tuple: outer and inner tuples differ in length");
    std::vector<std::vector<Cell>> comps;
    for (std::size_t i = 0; i < outer.size(); ++i) comps.push_back(skew_cells(parse_shape(outer[i]), parse_shape(inner[i])));
    return SkewTuple(std::move(comps));
  }
  if (!t.empty() && t.front() == '(' && t.back() == ')') t = t.substr(1, t.size() - 2);
  std::vector<std::string> tokens;
  if (t.find_first_of(";\n") != std::string::npos)
    tokens = split(t, ";\n");
  else if (t.find('[') == std::string::npos)
    tokens = split(t, ",");
  else
    tokens = {t};
  std::vector<std::vector<Cell>> comps;
  for (const std::string& tok : tokens)
    if (!tok.empty()) comps.push_back(parse_component(tok));
  return SkewTuple(std::move(comps));
}

SkewTuple SkewTuple::from_shapes(const std::vector<std::pair<Partition, Partition>>& shapes) {
  std::vector<std::vector<Cell>> comps;
  for (const auto& [outer, inner] : shapes) comps.push_back(skew_cells(outer, inner));
  return SkewTuple(std::move(comps));
}

int SkewTuple::size() const {
  int s = 0;
  for (const auto& comp : comps_) s += static_cast<int>(comp.size());
  return s;
}

std::vector<int> SkewTuple::letters() const {
  std::vector<int> out;
  for (int i = 0; i < k(); ++i)
    for (const Cell& z : comps_[i]) out.push_back(shifted_content(i, z));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<int, int>> SkewTuple::precedences() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < k(); ++i) {
    const auto& comp = comps_[i];
    auto find = [&](int r, int c) -> const Cell* {
      auto it = std::lower_bound(comp.begin(), comp.end(), Cell{r, c, std::numeric_limits<int>::min()});
      return (it != comp.end() && it->row == r && it->col == c) ? &*it : nullptr;
    };
    for (const Cell& z : comp) {
      // The cell to the east and the cell to the south come later.
      for (const Cell* next : {find(z.row, z.col + 1), find(z.row + 1, z.col)})
        if (next) out.emplace_back(shifted_content(i, z), shifted_content(i, *next));
    }
  }
  return out;
}

void SkewTuple::validate(int N) const {
  if (k() < 1) throw std::invalid_argument("skew tuple: need at least one component");
  for (int i = 0; i < k(); ++i) {
    const auto& comp = comps_[i];
    std::set<std::pair<int, int>> at;
    for (const Cell& z : comp) at.emplace(z.row, z.col);
    for (const Cell& z : comp) {
      if (z.content - (z.col - z.row) != comp.front().content - (comp.front().col - comp.front().row))
        throw std::invalid_argument("skew tuple: contents inconsistent with cell positions");
      if (at.count({z.row, z.col + 1}) && at.count({z.row + 1, z.col}) && at.count({z.row + 1, z.col + 1}))
        throw std::invalid_argument("skew tuple: component " + std::to_string(i) + " contains a 2x2 square");
    }
  }
  std::vector<int> ls = letters();
  if (std::adjacent_find(ls.begin(), ls.end()) != ls.end()) throw std::invalid_argument("skew tuple: repeated shifted content");
  if (!ls.empty() && ls.front() < 1) throw std::invalid_argument("skew tuple: shifted contents must be positive");
  int bound = N == 0 ? kMaxLetter : std::min(N, kMaxLetter);
  if (!ls.empty() && ls.back() > bound) throw std::invalid_argument("skew tuple: shifted content exceeds alphabet");
}

std::string SkewTuple::str() const {
  std::string out;
  for (int i = 0; i < k(); ++i) {
    if (i) out += "; ";
    for (std::size_t j = 0; j < comps_[i].size(); ++j) {
      const Cell& z = comps_[i][j];
      if (j) out += ' ';
      out += "[" + std::to_string(z.row) + " " + std::to_string(z.col) + " " + std::to_string(z.content) + "]";
    }
  }
  return out;
}

Word wbeta(const SkewTuple& beta) {
  beta.validate();
  Word w;
  for (int i = 0; i < beta.k(); ++i) {
    std::vector<Cell> cells = beta.components()[i];
    // Antidiagonals from the northwest; each read from southwest to northeast.
    std::sort(cells.begin(), cells.end(), [](const Cell& x, const Cell& y) {
      if (x.row + x.col != y.row + y.col) return x.row + x.col < y.row + y.col;
      return x.row > y.row;
    });
    for (const Cell& z : cells) w.push_back(beta.shifted_content(i, z));
  }
  return w;
}

std::vector<Word> words_of(const SkewTuple& beta) {
  beta.validate();
  std::vector<int> ls = beta.letters();
  const int n = static_cast<int>(ls.size());
  std::vector<int> index(kMaxLetter + 1, -1);
  for (int p = 0; p < n; ++p) index[ls[p]] = p;
  std::vector<std::uint32_t> before(n, 0);  // letters that must already be placed
  for (auto [x, y] : beta.precedences()) before[index[y]] |= 1U << index[x];

  std::vector<Word> out;
  Word cur;
  std::function<void(std::uint32_t)> rec = [&](std::uint32_t used) {
    if (cur.size() == n) {
      out.push_back(cur);
      return;
    }
    for (int p = 0; p < n; ++p) {
      if ((used >> p) & 1U) continue;
      if ((before[p] & used) != before[p]) continue;
      Word saved = cur;
      cur.push_back(ls[p]);
      rec(used | (1U << p));
      cur = saved;
    }
  };
  rec(0);
  return out;
}

std::string LLTResult::str() const {
  std::string out;
  for (const auto& [t, e] : expansion) {
    if (e.is_zero()) continue;
    if (!out.empty()) out += " + ";
    std::string q = t == 0 ? "" : (t == 1 ? "q " : "q^" + std::to_string(t) + " ");
    bool single = e.terms().size() == 1 && e.terms().begin()->second == 1;
    out += q + (single || q.empty() ? e.str() : "(" + e.str() + ")");
  }
  return out.empty() ? "0" : out;
}

LLTResult llt(const SkewTuple& beta) {
  LLTResult r;
  const int k = beta.k();
  for (const Word& w : words_of(beta)) r.groups[inv_k(w, k)].push_back(w);
  for (const auto& [t, words] : r.groups) {
    DeltaSchur ds = delta_schur(words);
    if (!ds.symmetric() || !ds.paths_agree())
      throw std::logic_error("llt: inv_k group " + std::to_string(t) + " is not symmetric");
    r.expansion[t] = ds.expansion();
  }
  return r;
}

LamKey lam_key(const Word& w, int k) {
  if (!w.repetition_free()) throw std::invalid_argument("lam_key: repeated letter");
  LamKey key;
  std::array<int, kMaxLetter + 2> pos{};
  pos.fill(-1);
  for (int i = 0; i < w.size(); ++i) {
    key.letters |= 1U << (w[i] - 1);
    pos[w[i]] = i;
  }
  key.inv = inv_k(w, k);
  for (int a = 1; a + k <= kMaxLetter; ++a)
    if (pos[a] >= 0 && pos[a + k] >= 0 && pos[a] < pos[a + k]) key.order |= 1U << (a - 1);
  return key;
}

Tableau plactic_key(const Word& w) { return rsk_P(w); }

Bijectivization Bijectivization::parse(std::string_view text) {
  std::string t = trim(text);
  auto number = [&](std::size_t from) {
    std::string rest = t.substr(from);
    if (!rest.empty() && rest.front() == ':') rest = rest.substr(1);
    if (rest.empty()) throw std::invalid_argument("bijectivization: missing k in " + t);
    return std::stoi(rest);
  };
  if (t == "plactic") return plactic();
  if (t.rfind("lam", 0) == 0) return lam(number(3));
  if (t.rfind("assaf", 0) == 0) return assaf(number(5));
  throw std::invalid_argument("unknown bijectivization: " + t);
}

std::string Bijectivization::name() const {
  switch (kind) {
    case Kind::Plactic: return "plactic";
    case Kind::Lam: return "lam" + std::to_string(k);
    case Kind::Assaf: return "assaf" + std::to_string(k);
    case Kind::Triples: return "triples";
  }
  return "?";
}

SquareType assaf_type(int k, int a, int c) { return c - a > k ? SquareType::Knuth : SquareType::Rotation; }

PartialD0Graph assaf_graph(int k, std::vector<Word> W, int N) {
  return PartialD0Graph::typed(
      std::move(W), [k](const KRSquare& sq) { return assaf_type(k, sq.a(), sq.c()); }, N);
}

PartialD0Graph triples_graph(const std::function<SquareType(int, int, int)>& type, std::vector<Word> W, int N) {
  return PartialD0Graph::typed(
      std::move(W), [&](const KRSquare& sq) { return type(sq.a(), sq.b(), sq.c()); }, N);
}

std::vector<Word> ClassMatrix::words(int row) const {
  std::vector<Word> out;
  for (std::uint32_t r : rows[row]) out.push_back(lehmer_unrank(r, d));
  return out;
}

ClassMatrix class_matrix(const Bijectivization& spec, int d) {
  if (d < 1 || d > 10) throw std::invalid_argument("class_matrix: d must be in 1..10");
  ClassMatrix cm;
  cm.spec = spec;
  cm.d = d;
  const std::vector<Word> perms = all_permutations(d);
  const auto V = static_cast<std::uint32_t>(perms.size());
  cm.row_of.assign(V, -1);

  auto add = [&](std::uint32_t rank, int row) {
    cm.row_of[rank] = row;
    cm.rows[row].push_back(rank);
  };

  switch (spec.kind) {
    case Bijectivization::Kind::Plactic: {
      std::map<Tableau, int> ids;
      for (std::uint32_t r = 0; r < V; ++r) {
        Tableau P = plactic_key(perms[r]);
        auto [it, fresh] = ids.emplace(P, cm.num_rows());
        if (fresh) {
          cm.rows.emplace_back();
          cm.labels.push_back("P=" + P.str());
        }
        add(r, it->second);
      }
      break;
    }
    case Bijectivization::Kind::Lam: {
      if (spec.k < 1) throw std::invalid_argument("class_matrix: lam needs k >= 1");
      std::map<LamKey, int> ids;
      for (std::uint32_t r = 0; r < V; ++r) {
        LamKey key = lam_key(perms[r], spec.k);
        auto [it, fresh] = ids.emplace(key, cm.num_rows());
        if (fresh) {
          cm.rows.emplace_back();
          cm.labels.push_back("inv" + std::to_string(spec.k) + "=" + std::to_string(key.inv) + " from " +
                              perms[r].str());
        }
        add(r, it->second);
      }
      break;
    }
    case Bijectivization::Kind::Assaf:
    case Bijectivization::Kind::Triples: {
      if (spec.kind == Bijectivization::Kind::Triples && !spec.triple_type)
        throw std::invalid_argument("class_matrix: triples spec without assignment");
      std::vector<std::uint32_t> parent(V);
      std::iota(parent.begin(), parent.end(), 0U);
      auto find = [&](std::uint32_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
      };
      for (std::uint32_t r = 0; r < V; ++r) {
        const Word& w = perms[r];
        for (int c = 2; c <= d - 1; ++c) {
          int m = kr_member_index(w, c);
          if (m < 0) continue;
          KRSquare sq = kr_square_of(w, c);
          SquareType t = spec.kind == Bijectivization::Kind::Assaf ? assaf_type(spec.k, sq.a(), sq.c())
                                                                    : spec.triple_type(sq.a(), sq.b(), sq.c());
          std::uint32_t p = static_cast<std::uint32_t>(lehmer_rank(with_window(w, c, partner_member(m, t))));
          std::uint32_t a = find(r), b = find(p);
          if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
      }
      std::vector<int> id(V, -1);
      for (std::uint32_t r = 0; r < V; ++r) {
        std::uint32_t root = find(r);
        if (id[root] < 0) {
          id[root] = cm.num_rows();
          cm.rows.emplace_back();
          cm.labels.push_back("component of " + perms[r].str());
        }
        add(r, id[root]);
      }
      break;
    }
  }
  return cm;
}

}  // namespace d0
