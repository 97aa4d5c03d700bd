#include "d0/kr.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace d0 {

char type_char(SquareType t) {
  switch (t) {
    case SquareType::Irrelevant: return '-';
    case SquareType::Undetermined: return '0';
    case SquareType::Knuth: return 'K';
    case SquareType::Rotation: return 'R';
  }
  return '?';
}

SquareType type_from_char(char ch) {
  switch (ch) {
    case '-': return SquareType::Irrelevant;
    case '0': return SquareType::Undetermined;
    case 'K': return SquareType::Knuth;
    case 'R': return SquareType::Rotation;
    default: throw std::invalid_argument(std::string("unknown square type: ") + ch);
  }
}

namespace {

// Arrangement m of (a, b, c): bac, bca, acb, cab.
std::array<int, 3> arrangement(int m, int a, int b, int c) {
  switch (m) {
    case 0: return {b, a, c};
    case 1: return {b, c, a};
    case 2: return {a, c, b};
    default: return {c, a, b};
  }
}

}  // namespace

Word KRSquare::member(int m) const { return with_window(base, color, m); }

std::array<Word, 4> KRSquare::members() const {
  return {member(0), member(1), member(2), member(3)};
}

std::string KRSquare::str() const {
  std::string out = std::to_string(color) + ":";
  bool digits = base.max_letter() <= 9;
  auto put = [&](int x) {
    if (!digits && !out.empty() && out.back() != ':' && out.back() != '[') out += ' ';
    out += std::to_string(x);
  };
  for (int i = 0; i < color - 2; ++i) put(base[i]);
  out += '[';
  put(a());
  put(b());
  put(c());
  out += ']';
  for (int i = color + 1; i < base.size(); ++i) put(base[i]);
  return out;
}

int kr_member_index(const Word& w, int color) {
  if (color < 2 || color > w.size() - 1) return -1;
  int x = w[color - 2], y = w[color - 1], z = w[color];
  if (x == y || y == z || x == z) return -1;
  if (x > y && y < z) return x < z ? 0 : 3;  // bac or cab
  if (x < y && y > z) return x > z ? 1 : 2;  // bca or acb
  return -1;
}

Word with_window(const Word& w, int color, int m) {
  std::array<int, 3> s = {w[color - 2], w[color - 1], w[color]};
  std::sort(s.begin(), s.end());
  std::array<int, 3> arr = arrangement(m, s[0], s[1], s[2]);
  Word out = w;
  for (int k = 0; k < 3; ++k) out.set(color - 2 + k, arr[k]);
  return out;
}

KRSquare kr_square_of(const Word& w, int color) {
  if (kr_member_index(w, color) < 0) throw std::invalid_argument("word " + w.str() + " has no KR square at color " + std::to_string(color));
  return KRSquare{color, with_window(w, color, 0)};
}

std::vector<KRSquare> kr_squares_of(const std::vector<Word>& W) {
  std::set<KRSquare> seen;
  for (const Word& w : W)
    for (int i = 2; i < w.size(); ++i)
      if (kr_member_index(w, i) >= 0) seen.insert(kr_square_of(w, i));
  return {seen.begin(), seen.end()};
}

bool is_kr_edge(const Word& x, const Word& y, int color, EdgeType type) {
  if (x.size() != y.size()) return false;
  int mx = kr_member_index(x, color), my = kr_member_index(y, color);
  if (mx < 0 || my < 0) return false;
  if (kr_square_of(x, color) != kr_square_of(y, color)) return false;
  return (mx ^ my) == (type == EdgeType::Knuth ? 1 : 2);
}

}  // namespace d0
