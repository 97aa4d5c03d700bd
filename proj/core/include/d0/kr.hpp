#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "d0/word.hpp"

namespace d0 {

enum class SquareType : std::uint8_t { Irrelevant, Undetermined, Knuth, Rotation };

char type_char(SquareType t);  // '-', '0', 'K', 'R'
SquareType type_from_char(char ch);

enum class EdgeType : std::uint8_t { Knuth, Rotation };

// Members are indexed 0..3 in the order bac, bca, acb, cab. Knuth pairs
// differ in bit 0, rotation pairs in bit 1.
inline int partner_member(int member, SquareType t) {
  return t == SquareType::Knuth ? (member ^ 1) : (member ^ 2);
}

// The KR_i square {v bac w, v bca w, v acb w, v cab w}; `base` is v bac w and
// the window occupies 1-based positions i-1, i, i+1.
struct KRSquare {
  int color = 0;
  Word base;

  int a() const { return base[color - 1]; }
  int b() const { return base[color - 2]; }
  int c() const { return base[color]; }
  Word member(int m) const;
  std::array<Word, 4> members() const;
  std::string str() const;  // "3:2[134]"  color, prefix, letters, suffix

  // Canonical order: the string i v bac w compared lexicographically.
  friend auto operator<=>(const KRSquare& x, const KRSquare& y) {
    if (auto cmp = x.color <=> y.color; cmp != 0) return cmp;
    return x.base <=> y.base;
  }
  friend bool operator==(const KRSquare&, const KRSquare&) = default;
};

// Index of w inside its KR_color square, or -1 when the window at that color
// is monotone or has a repeated letter.
int kr_member_index(const Word& w, int color);
KRSquare kr_square_of(const Word& w, int color);

// Every KR square meeting W, deduplicated and in canonical order.
std::vector<KRSquare> kr_squares_of(const std::vector<Word>& W);

// Replaces the three letters at the window of `color` by the arrangement `m`
// of their sorted values.
Word with_window(const Word& w, int color, int m);

// Whether x and y differ by a transformation of the given type at color i.
bool is_kr_edge(const Word& x, const Word& y, int color, EdgeType type);

}  // namespace d0
