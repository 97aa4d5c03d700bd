#include "d0/tableau.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace d0 {

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must weakly decrease");
  }
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  bool separated = text.find_first_of(" ,") != std::string_view::npos;
  std::string cleaned;
  for (char ch : text)
    if (ch != '(' && ch != ')' && ch != '[' && ch != ']') cleaned += ch;
  if (!separated) {
    for (char ch : cleaned) {
      if (ch < '0' || ch > '9') throw std::invalid_argument("bad partition: " + std::string(text));
      parts.push_back(ch - '0');
    }
  } else {
    std::istringstream in(cleaned);
    std::string token;
    while (std::getline(in, token, ',')) {
      std::istringstream tok(token);
      int x;
      while (tok >> x) parts.push_back(x);
    }
  }
  return Partition(parts);
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::conjugate() const {
  std::vector<int> out;
  for (int c = 0; c < part(0); ++c) {
    int h = 0;
    while (h < length() && parts_[h] > c) ++h;
    out.push_back(h);
  }
  return Partition(out);
}

bool Partition::is_hook() const { return length() <= 1 || parts_[1] <= 1; }

bool Partition::dominates(const Partition& other) const {
  if (size() != other.size()) return false;
  int a = 0, b = 0;
  for (int i = 0; i < std::max(length(), other.length()); ++i) {
    a += part(i);
    b += other.part(i);
    if (a < b) return false;
  }
  return true;
}

std::string Partition::str() const {
  std::string out = "(";
  for (int i = 0; i < length(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

std::string Partition::compact() const {
  bool small = std::all_of(parts_.begin(), parts_.end(), [](int x) { return x < 10; });
  if (!small) return str();
  std::string out;
  for (int x : parts_) out += static_cast<char>('0' + x);
  return out;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int cap) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, cap); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

Tableau::Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (rows_[r].empty()) throw std::invalid_argument("tableau rows must be nonempty");
    if (r > 0 && rows_[r].size() > rows_[r - 1].size()) throw std::invalid_argument("tableau shape not a partition");
  }
}

Partition Tableau::shape() const {
  std::vector<int> parts;
  for (const auto& row : rows_) parts.push_back(static_cast<int>(row.size()));
  return Partition(parts);
}

int Tableau::size() const {
  int s = 0;
  for (const auto& row : rows_) s += static_cast<int>(row.size());
  return s;
}

bool Tableau::is_semistandard_no_repeat() const {
  std::vector<int> seen;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (std::size_t c = 0; c < rows_[r].size(); ++c) {
      int x = rows_[r][c];
      if (x < 1) return false;
      if (c > 0 && rows_[r][c - 1] > x) return false;
      if (r > 0 && rows_[r - 1][c] >= x) return false;
      seen.push_back(x);
    }
  }
  std::sort(seen.begin(), seen.end());
  return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

bool Tableau::is_standard() const {
  if (!is_semistandard_no_repeat()) return false;
  int n = size();
  for (const auto& row : rows_)
    for (int x : row)
      if (x > n) return false;
  return true;
}

Word Tableau::reading_word() const {
  Word w;
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it)
    for (int x : *it) w.push_back(x);
  return w;
}

Word Tableau::column_reading_word() const {
  Word w;
  int ncols = rows_.empty() ? 0 : static_cast<int>(rows_[0].size());
  for (int c = 0; c < ncols; ++c)
    for (int r = static_cast<int>(rows_.size()) - 1; r >= 0; --r)
      if (c < static_cast<int>(rows_[r].size())) w.push_back(rows_[r][c]);
  return w;
}

DescentSet Tableau::descent_set() const {
  int n = size();
  std::vector<int> row_of(n + 2, -1);
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (int x : rows_[r]) {
      if (x < 1 || x > n) throw std::invalid_argument("descent_set requires a standard tableau");
      row_of[x] = static_cast<int>(r);
    }
  std::uint32_t bits = 0;
  for (int i = 1; i < n; ++i)
    if (row_of[i + 1] > row_of[i]) bits |= 1U << (i - 1);
  return DescentSet(n, bits);
}

std::string Tableau::str() const {
  std::string out;
  bool digits = true;
  for (const auto& row : rows_)
    for (int x : row) digits = digits && x < 10;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (r) out += '/';
    for (std::size_t c = 0; c < rows_[r].size(); ++c) {
      if (!digits && c) out += ' ';
      out += std::to_string(rows_[r][c]);
    }
  }
  return out;
}

Tableau rsk_P(const Word& w) {
  if (!w.repetition_free()) throw std::invalid_argument("rsk_P: repeated letter in " + w.str());
  std::vector<std::vector<int>> rows;
  for (int i = 0; i < w.size(); ++i) {
    int x = w[i];
    for (std::size_t r = 0;; ++r) {
      if (r == rows.size()) {
        rows.push_back({x});
        break;
      }
      auto& row = rows[r];
      auto it = std::upper_bound(row.begin(), row.end(), x);
      if (it == row.end()) {
        row.push_back(x);
        break;
      }
      std::swap(*it, x);
    }
  }
  return Tableau(std::move(rows));
}

namespace {

// Fills cells in order of `cells`, choosing each entry from `candidates(r, c)`.
template <typename Candidates>
void fill_tableaux(const Partition& shape, Candidates candidates, std::vector<Tableau>& out) {
  std::vector<std::pair<int, int>> cells;
  // Column-major order so that each cell's left and upper neighbours are known.
  for (int c = 0; c < shape.part(0); ++c)
    for (int r = 0; r < shape.length() && shape.part(r) > c; ++r) cells.emplace_back(r, c);
  std::vector<std::vector<int>> rows(shape.length());
  for (int r = 0; r < shape.length(); ++r) rows[r].assign(shape.part(r), 0);
  std::uint32_t used = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == cells.size()) {
      out.emplace_back(rows);
      return;
    }
    auto [r, c] = cells[k];
    int lo = 1;
    if (c > 0) lo = std::max(lo, rows[r][c - 1] + 1);
    if (r > 0) lo = std::max(lo, rows[r - 1][c] + 1);
    int hi = candidates(r, c);
    for (int x = lo; x <= hi; ++x) {
      if ((used >> x) & 1U) continue;
      used |= 1U << x;
      rows[r][c] = x;
      rec(k + 1);
      used &= ~(1U << x);
    }
    rows[r][c] = 0;
  };
  if (shape.size() == 0) {
    out.emplace_back();
    return;
  }
  rec(0);
}

}  // namespace

std::vector<Tableau> enumerate_syt(const Partition& shape) {
  std::vector<Tableau> out;
  int n = shape.size();
  fill_tableaux(shape, [n](int, int) { return n; }, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Tableau> enumerate_ssyt_flagged(const Partition& shape, const std::vector<int>& flags) {
  if (static_cast<int>(flags.size()) != shape.part(0))
    throw std::invalid_argument("flag count must equal the number of columns");
  for (int f : flags)
    if (f < 0 || f > kMaxLetter) throw std::invalid_argument("flag out of range");
  std::vector<Tableau> out;
  fill_tableaux(shape, [&flags](int, int c) { return flags[c]; }, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace d0
