#pragma once

#include <compare>
#include <string>
#include <vector>

#include "d0/word.hpp"

namespace d0 {

class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  static Partition parse(std::string_view text);  // "2,2,2,2", "2222" or "4 1"

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int part(int i) const { return i < length() ? parts_[i] : 0; }  // 0-based
  int size() const;
  Partition conjugate() const;
  bool is_hook() const;
  bool dominates(const Partition& other) const;
  std::string str() const;  // "(2,2,2,2)"
  std::string compact() const;  // "2222" when every part is below 10

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& x, const Partition& y) { return x.parts_ <=> y.parts_; }

 private:
  std::vector<int> parts_;
};

// Partitions of n in decreasing lexicographic order, a linear extension of
// dominance order with the largest first.
std::vector<Partition> partitions_of(int n);

// Row-major; row 0 is the top row (English notation).
class Tableau {
 public:
  Tableau() = default;
  explicit Tableau(std::vector<std::vector<int>> rows);

  const std::vector<std::vector<int>>& rows() const { return rows_; }
  Partition shape() const;
  int size() const;
  int at(int row, int col) const { return rows_[row][col]; }

  // Rows weakly increase, columns strictly increase, letters pairwise distinct.
  bool is_semistandard_no_repeat() const;
  // Semistandard with entries exactly 1..size.
  bool is_standard() const;

  // Rows from the bottom row up, each read left to right.
  Word reading_word() const;
  // Columns from left to right, each read bottom to top.
  Word column_reading_word() const;

  // For a standard tableau: i is a descent iff i+1 lies in a lower row than i.
  DescentSet descent_set() const;

  std::string str() const;  // "12/34/5"

  friend bool operator==(const Tableau&, const Tableau&) = default;
  friend auto operator<=>(const Tableau& x, const Tableau& y) { return x.rows_ <=> y.rows_; }

 private:
  std::vector<std::vector<int>> rows_;
};

// Schensted row insertion tableau; requires a repetition-free word.
Tableau rsk_P(const Word& w);

std::vector<Tableau> enumerate_syt(const Partition& shape);

// Semistandard tableaux of the given shape without repeated letters whose
// column c (0-based) entries lie in [flags[c]]. flags.size() must equal the
// number of columns.
std::vector<Tableau> enumerate_ssyt_flagged(const Partition& shape, const std::vector<int>& flags);

}  // namespace d0
