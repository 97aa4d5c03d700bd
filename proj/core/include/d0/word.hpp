#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace d0 {

// Letters are 1-based and at most kMaxLetter; words hold at most kMaxLength letters.
inline constexpr int kMaxLetter = 16;
inline constexpr int kMaxLength = 16;

class Word {
 public:
  Word() = default;
  Word(std::initializer_list<int> letters);
  explicit Word(std::span<const int> letters);

  // Accepts "72158346" (one digit per letter) or a list separated by
  // spaces or commas, e.g. "12 3 7".
  static Word parse(std::string_view text);

  int size() const { return n_; }
  bool empty() const { return n_ == 0; }
  int operator[](int pos) const { return a_[pos]; }
  void set(int pos, int letter);
  void push_back(int letter);

  // 4 bits per letter (letter - 1); unique among words of equal length.
  std::uint64_t packed() const;

  bool repetition_free() const;
  int max_letter() const;
  std::vector<int> letters() const;
  std::string str() const;

  friend bool operator==(const Word& x, const Word& y) {
    return x.n_ == y.n_ && x.a_ == y.a_;
  }
  friend std::strong_ordering operator<=>(const Word& x, const Word& y);

 private:
  std::array<std::uint8_t, kMaxLength> a_{};
  std::uint8_t n_ = 0;
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    std::uint64_t h = w.packed() * 0x9E3779B97F4A7C15ULL;
    return static_cast<std::size_t>(h ^ (h >> 29) ^ static_cast<std::uint64_t>(w.size()));
  }
};

Word concat(const Word& x, const Word& y);
Word reversed(const Word& w);
Word subword(const Word& w, int first, int count);

// Subset of [n-1]; bit (i-1) is set iff i is a descent.
class DescentSet {
 public:
  DescentSet() = default;
  DescentSet(int n, std::uint32_t bits);

  static DescentSet from_signature(const std::vector<int>& sigma);

  int degree() const { return n_; }
  std::uint32_t bits() const { return bits_; }
  bool contains(int i) const { return i >= 1 && i < n_ && ((bits_ >> (i - 1)) & 1U); }
  std::vector<int> elements() const;
  // sigma_i = -1 iff i is a descent, for i = 1..n-1.
  std::vector<int> signature() const;
  std::string signature_string() const;

  friend bool operator==(const DescentSet&, const DescentSet&) = default;

 private:
  int n_ = 0;
  std::uint32_t bits_ = 0;
};

DescentSet descent_set(const Word& w);

// Relabels letters by rank; requires a repetition-free word.
Word standardize(const Word& w);

// #{i<j : 0 < w_i - w_j < k}
int inv_k(const Word& w, int k);
int inversions(const Word& w);

// Lexicographic rank of a permutation of [n] (its Lehmer code value).
std::uint64_t lehmer_rank(const Word& perm);
Word lehmer_unrank(std::uint64_t rank, int n);
std::uint64_t factorial(int n);

// All permutations of [n] in lexicographic order, so index == lehmer_rank.
std::vector<Word> all_permutations(int n);

// All repetition-free words of length n over [N], lexicographic order.
std::vector<Word> repetition_free_words(int n, int N);

void validate_letters(const Word& w, int N);

}  // namespace d0

template <>
struct std::hash<d0::Word> {
  std::size_t operator()(const d0::Word& w) const noexcept { return d0::WordHash{}(w); }
};
