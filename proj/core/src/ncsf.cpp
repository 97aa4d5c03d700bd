#include "d0/ncsf.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace d0 {

WordVector WordVector::unit() {
  WordVector v(0);
  v.add(Word{}, 1);
  return v;
}

WordVector WordVector::indicator(const std::vector<Word>& words) {
  WordVector v(words.empty() ? 0 : words.front().size());
  for (const Word& w : words) v.add(w, 1);
  return v;
}

std::int64_t WordVector::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? 0 : it->second;
}

void WordVector::add(const Word& w, std::int64_t c) {
  if (w.size() != degree_) {
    if (terms_.empty() && degree_ == 0) {
      degree_ = w.size();
    } else {
      throw std::invalid_argument("WordVector: word length differs from degree");
    }
  }
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

WordVector& WordVector::operator+=(const WordVector& other) {
  for (const auto& [w, c] : other.terms_) add(w, c);
  return *this;
}

WordVector& WordVector::operator-=(const WordVector& other) {
  for (const auto& [w, c] : other.terms_) add(w, -c);
  return *this;
}

WordVector WordVector::operator*(std::int64_t scalar) const {
  WordVector out(degree_);
  if (scalar == 0) return out;
  for (const auto& [w, c] : terms_) out.terms_.emplace(w, c * scalar);
  return out;
}

WordVector operator*(const WordVector& x, const WordVector& y) {
  WordVector out(x.degree() + y.degree());
  for (const auto& [u, a] : x.terms())
    for (const auto& [v, b] : y.terms()) out.add(concat(u, v), a * b);
  return out;
}

std::string WordVector::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (c < 0) {
      out += first ? "-" : " - ";
    } else if (!first) {
      out += " + ";
    }
    std::int64_t a = c < 0 ? -c : c;
    if (a != 1) out += std::to_string(a) + "*";
    out += w.empty() ? "1" : w.str();
    first = false;
  }
  return out;
}

WordVector elementary(int d, const std::vector<int>& letters) {
  if (d < 0) return WordVector(0);
  std::vector<int> s = letters;
  std::sort(s.begin(), s.end(), std::greater<int>());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  WordVector out(d);
  if (d == 0) return WordVector::unit();
  if (d > static_cast<int>(s.size())) return out;
  std::vector<int> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (static_cast<int>(cur.size()) == d) {
      out.add(Word(std::span<const int>(cur)), 1);
      return;
    }
    for (std::size_t i = start; i < s.size(); ++i) {
      cur.push_back(s[i]);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

WordVector elementary(int d, int N) {
  std::vector<int> letters(std::max(N, 0));
  std::iota(letters.begin(), letters.end(), 1);
  return elementary(d, letters);
}

std::int64_t coeff_in_J(const Partition& lambda, const Word& w) {
  const int n = w.size();
  if (n != lambda.size()) throw std::invalid_argument("coeff_in_J: |w| != |lambda|");
  if (n == 0) return 1;
  const Partition conj = lambda.conjugate();
  const int t = conj.length();
  // run[p]: length of the longest strictly decreasing factor starting at p.
  std::array<int, kMaxLength + 1> run{};
  run[n] = 0;
  for (int p = n - 1; p >= 0; --p) run[p] = (p + 1 < n && w[p] > w[p + 1]) ? run[p + 1] + 1 : 1;

  // Subset dynamic programme over the values pi(1..c) already used; the
  // segment start only depends on that set.
  std::vector<std::int64_t> dp(std::size_t{1} << t, 0);
  std::vector<int> start(std::size_t{1} << t, 0);
  dp[0] = 1;
  for (std::uint32_t mask = 0; mask + 1 < (1U << t); ++mask) {
    if (dp[mask] == 0) continue;
    int c = std::popcount(mask);  // 0-based column index being filled
    int pos = start[mask];
    for (int v = 0; v < t; ++v) {
      if ((mask >> v) & 1U) continue;
      int len = conj.part(c) + v - c;
      if (len < 0 || pos + len > n) continue;
      if (len > 0 && run[pos] < len) continue;
      int larger_used = std::popcount(mask >> (v + 1));
      std::uint32_t next = mask | (1U << v);
      dp[next] += (larger_used % 2 ? -dp[mask] : dp[mask]);
      start[next] = pos + len;
    }
  }
  return dp[(1U << t) - 1];
}

std::int64_t pair_J(const Partition& lambda, const WordVector& f) {
  if (f.is_zero()) return 0;
  if (f.degree() != lambda.size()) throw std::invalid_argument("pair_J: degree mismatch");
  std::int64_t total = 0;
  for (const auto& [w, c] : f.terms()) total += c * coeff_in_J(lambda, w);
  return total;
}

std::int64_t pair_J(const Partition& lambda, const std::vector<Word>& words) {
  std::int64_t total = 0;
  for (const Word& w : words) {
    if (w.size() != lambda.size()) throw std::invalid_argument("pair_J: degree mismatch");
    total += coeff_in_J(lambda, w);
  }
  return total;
}

namespace {

int permutation_sign(const std::vector<int>& p) {
  int inv = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inv;
  return inv % 2 ? -1 : 1;
}

}  // namespace

WordVector flagged_J(const std::vector<int>& alpha, const std::vector<int>& flags) {
  if (alpha.size() != flags.size()) throw std::invalid_argument("flagged_J: alpha and flags differ in length");
  for (int a : alpha)
    if (a < 0) throw std::invalid_argument("flagged_J: negative part");
  for (int f : flags)
    if (f < 0 || f > kMaxLetter) throw std::invalid_argument("flagged_J: flag out of range");
  const int l = static_cast<int>(alpha.size());
  const int degree = std::accumulate(alpha.begin(), alpha.end(), 0);
  WordVector out(degree);
  std::vector<int> pi(l);
  std::iota(pi.begin(), pi.end(), 1);
  do {
    WordVector term = WordVector::unit();
    bool zero = false;
    for (int c = 0; c < l && !zero; ++c) {
      int d = alpha[c] + pi[c] - (c + 1);
      WordVector e = elementary(d, flags[c]);
      if (e.is_zero()) zero = true;
      else term = term * e;
    }
    if (zero) continue;
    if (permutation_sign(pi) > 0) out += term;
    else out -= term;
  } while (std::next_permutation(pi.begin(), pi.end()));
  return out;
}

WordVector schur_J(const Partition& lambda, int N) {
  const Partition conj = lambda.conjugate();
  return flagged_J(conj.parts(), std::vector<int>(conj.length(), N));
}

WordVector drop_repeated_letter_words(const WordVector& f) {
  WordVector out(f.degree());
  for (const auto& [w, c] : f.terms())
    if (w.repetition_free()) out.add(w, c);
  return out;
}

WordVector rev_map(const WordVector& f) {
  WordVector out(f.degree());
  for (const auto& [w, c] : f.terms()) out.add(reversed(w), c);
  return out;
}

WordVector theta_map(const WordVector& f, const std::vector<int>& theta) {
  int m = static_cast<int>(theta.size()) - 1;
  bool increasing = true, decreasing = true;
  for (int x = 1; x < m; ++x) {
    increasing = increasing && theta[x] < theta[x + 1];
    decreasing = decreasing && theta[x] > theta[x + 1];
  }
  if (!increasing && !decreasing) throw std::invalid_argument("theta_map: not a monotone injection");
  WordVector out(f.degree());
  for (const auto& [w, c] : f.terms()) {
    Word img;
    for (int i = 0; i < w.size(); ++i) {
      if (w[i] > m) throw std::invalid_argument("theta_map: letter outside the domain of theta");
      img.push_back(theta[w[i]]);
    }
    out.add(img, c);
  }
  return out;
}

}  // namespace d0
