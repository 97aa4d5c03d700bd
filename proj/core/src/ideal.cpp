#include "d0/ideal.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

#include "d0/kr.hpp"

namespace d0 {

namespace {

using Int = boost::multiprecision::cpp_int;
using Row = std::map<int, Int>;  // column -> nonzero entry

void normalize(Row& row) {
  Int g = 0;
  for (const auto& [col, x] : row) g = gcd(g, abs(x));
  if (g > 1)
    for (auto& [col, x] : row) x /= g;
  if (!row.empty() && row.begin()->second < 0)
    for (auto& [col, x] : row) x = -x;
}

// row := p*row - row[col]*pivot_row, fraction free.
void eliminate(Row& row, int col, const Row& pivot_row) {
  auto it = row.find(col);
  if (it == row.end()) return;
  Int factor = it->second;
  Int p = pivot_row.at(col);
  for (auto& [c, x] : row) x *= p;
  for (const auto& [c, y] : pivot_row) {
    Int& slot = row[c];
    slot -= factor * y;
  }
  for (auto jt = row.begin(); jt != row.end();) jt = (jt->second == 0) ? row.erase(jt) : std::next(jt);
  normalize(row);
}

// Echelon basis of the span of all KR generators among repetition-free words.
class Echelon {
 public:
  Echelon(int N, int d) {
    std::vector<Word> words = repetition_free_words(d, N);
    for (std::size_t i = 0; i < words.size(); ++i) index_.emplace(words[i], static_cast<int>(i));
    for (const KRSquare& sq : kr_squares_of(words)) {
      Row row;
      const std::array<Word, 4> members = sq.members();
      static constexpr int kSign[4] = {1, -1, -1, 1};
      for (int m = 0; m < 4; ++m) row[index_.at(members[m])] = kSign[m];
      insert(std::move(row));
    }
  }

  bool contains(const WordVector& g) const {
    Row row;
    for (const auto& [w, c] : g.terms()) {
      if (!w.repetition_free()) continue;
      row[index_.at(w)] = c;
    }
    normalize(row);
    while (!row.empty()) {
      auto it = pivots_.find(row.begin()->first);
      if (it == pivots_.end()) return false;
      eliminate(row, it->first, it->second);
    }
    return true;
  }

 private:
  void insert(Row row) {
    normalize(row);
    while (!row.empty()) {
      int lead = row.begin()->first;
      auto it = pivots_.find(lead);
      if (it == pivots_.end()) {
        pivots_.emplace(lead, std::move(row));
        return;
      }
      eliminate(row, lead, it->second);
    }
  }

  std::unordered_map<Word, int, WordHash> index_;
  std::map<int, Row> pivots_;  // leading column -> row
};

const Echelon& echelon(int N, int d) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<Echelon>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{N, d}];
  if (!slot) slot = std::make_unique<Echelon>(N, d);
  return *slot;
}

}  // namespace

WordVector kr_generator(const Word& v, int a, int b, int c, const Word& w) {
  if (!(a < b && b < c)) throw std::invalid_argument("kr_generator: need a < b < c");
  WordVector out(v.size() + 3 + w.size());
  out.add(concat(concat(v, Word{b, a, c}), w), 1);
  out.add(concat(concat(v, Word{b, c, a}), w), -1);
  out.add(concat(concat(v, Word{a, c, b}), w), -1);
  out.add(concat(concat(v, Word{c, a, b}), w), 1);
  return out;
}

bool irkst_membership(const WordVector& g, int N) {
  if (N < 1 || N > kMaxLetter) throw std::invalid_argument("irkst_membership: alphabet size");
  const int d = g.degree();
  long dim = 1;
  for (int i = 0; i < d; ++i) {
    dim *= N;
    if (dim > kMembershipCap) throw std::invalid_argument("irkst_membership: N^d exceeds 5^6");
  }
  for (const auto& [w, c] : g.terms()) validate_letters(w, N);
  return echelon(N, d).contains(g);
}

}  // namespace d0
