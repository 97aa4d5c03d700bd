#include "d0/word.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace d0 {

namespace {

void check_letter(int letter) {
  if (letter < 1 || letter > kMaxLetter) {
    throw std::invalid_argument("letter out of range 1.." + std::to_string(kMaxLetter) + ": " +
                                std::to_string(letter));
  }
}

}  // namespace

Word::Word(std::initializer_list<int> letters) {
  for (int x : letters) push_back(x);
}

Word::Word(std::span<const int> letters) {
  for (int x : letters) push_back(x);
}

Word Word::parse(std::string_view text) {
  Word w;
  bool separated = text.find_first_of(" ,\t") != std::string_view::npos;
  if (!separated) {
    for (char ch : text) {
      if (ch < '1' || ch > '9') throw std::invalid_argument("bad letter in word: " + std::string(text));
      w.push_back(ch - '0');
    }
    return w;
  }
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == ',' || text[pos] == '\t')) ++pos;
    if (pos >= text.size()) break;
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc()) throw std::invalid_argument("bad letter in word: " + std::string(text));
    w.push_back(value);
    pos = static_cast<std::size_t>(ptr - text.data());
  }
  return w;
}

void Word::set(int pos, int letter) {
  check_letter(letter);
  if (pos < 0 || pos >= n_) throw std::out_of_range("word position");
  a_[pos] = static_cast<std::uint8_t>(letter);
}

void Word::push_back(int letter) {
  check_letter(letter);
  if (n_ >= kMaxLength) throw std::length_error("word longer than " + std::to_string(kMaxLength));
  a_[n_++] = static_cast<std::uint8_t>(letter);
}

std::uint64_t Word::packed() const {
  std::uint64_t key = 0;
  for (int i = 0; i < n_; ++i) key |= static_cast<std::uint64_t>(a_[i] - 1) << (4 * i);
  return key;
}

bool Word::repetition_free() const {
  std::uint32_t seen = 0;
  for (int i = 0; i < n_; ++i) {
    std::uint32_t bit = 1U << a_[i];
    if (seen & bit) return false;
    seen |= bit;
  }
  return true;
}

int Word::max_letter() const {
  int m = 0;
  for (int i = 0; i < n_; ++i) m = std::max<int>(m, a_[i]);
  return m;
}

std::vector<int> Word::letters() const { return {a_.begin(), a_.begin() + n_}; }

std::string Word::str() const {
  std::string out;
  bool digits = max_letter() <= 9;
  for (int i = 0; i < n_; ++i) {
    if (!digits && i > 0) out += ' ';
    out += std::to_string(a_[i]);
  }
  return out;
}

std::strong_ordering operator<=>(const Word& x, const Word& y) {
  return std::lexicographical_compare_three_way(x.a_.begin(), x.a_.begin() + x.n_, y.a_.begin(),
                                                y.a_.begin() + y.n_);
}

Word concat(const Word& x, const Word& y) {
  Word out = x;
  for (int i = 0; i < y.size(); ++i) out.push_back(y[i]);
  return out;
}

Word reversed(const Word& w) {
  Word out;
  for (int i = w.size() - 1; i >= 0; --i) out.push_back(w[i]);
  return out;
}

Word subword(const Word& w, int first, int count) {
  if (first < 0 || count < 0 || first + count > w.size()) throw std::out_of_range("subword");
  Word out;
  for (int i = first; i < first + count; ++i) out.push_back(w[i]);
  return out;
}

DescentSet::DescentSet(int n, std::uint32_t bits) : n_(n), bits_(bits) {
  if (n < 0 || n > kMaxLength) throw std::invalid_argument("descent set degree");
  std::uint32_t mask = n <= 1 ? 0U : ((1U << (n - 1)) - 1U);
  if (bits & ~mask) throw std::invalid_argument("descent outside [n-1]");
}

DescentSet DescentSet::from_signature(const std::vector<int>& sigma) {
  std::uint32_t bits = 0;
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (sigma[i] == -1) {
      bits |= 1U << i;
    } else if (sigma[i] != 1) {
      throw std::invalid_argument("signature entries must be +1 or -1");
    }
  }
  return DescentSet(static_cast<int>(sigma.size()) + 1, bits);
}

std::vector<int> DescentSet::elements() const {
  std::vector<int> out;
  for (int i = 1; i < n_; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

std::vector<int> DescentSet::signature() const {
  std::vector<int> out;
  for (int i = 1; i < n_; ++i) out.push_back(contains(i) ? -1 : 1);
  return out;
}

std::string DescentSet::signature_string() const {
  std::string out;
  for (int i = 1; i < n_; ++i) out += contains(i) ? '-' : '+';
  return out;
}

DescentSet descent_set(const Word& w) {
  std::uint32_t bits = 0;
  for (int i = 0; i + 1 < w.size(); ++i)
    if (w[i] > w[i + 1]) bits |= 1U << i;
  return DescentSet(w.size(), bits);
}

Word standardize(const Word& w) {
  if (!w.repetition_free()) throw std::invalid_argument("standardize: repeated letter in " + w.str());
  std::vector<int> order(w.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) { return w[x] < w[y]; });
  std::vector<int> out(w.size());
  for (int r = 0; r < w.size(); ++r) out[order[r]] = r + 1;
  return Word(std::span<const int>(out));
}

int inv_k(const Word& w, int k) {
  int count = 0;
  for (int i = 0; i < w.size(); ++i)
    for (int j = i + 1; j < w.size(); ++j) {
      int diff = w[i] - w[j];
      if (diff > 0 && diff < k) ++count;
    }
  return count;
}

int inversions(const Word& w) { return inv_k(w, kMaxLetter + 1); }

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::uint64_t lehmer_rank(const Word& perm) {
  int n = perm.size();
  std::uint32_t used = 0;
  std::uint64_t rank = 0;
  for (int i = 0; i < n; ++i) {
    int x = perm[i];
    if (x > n || (used >> x) & 1U) throw std::invalid_argument("lehmer_rank: not a permutation: " + perm.str());
    int smaller_unused = 0;
    for (int y = 1; y < x; ++y)
      if (!((used >> y) & 1U)) ++smaller_unused;
    rank = rank * static_cast<std::uint64_t>(n - i) + static_cast<std::uint64_t>(smaller_unused);
    used |= 1U << x;
  }
  return rank;
}

Word lehmer_unrank(std::uint64_t rank, int n) {
  if (rank >= factorial(n)) throw std::out_of_range("lehmer_unrank");
  std::vector<int> digits(n);
  for (int i = n - 1; i >= 0; --i) {
    std::uint64_t base = static_cast<std::uint64_t>(n - i);
    digits[i] = static_cast<int>(rank % base);
    rank /= base;
  }
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 1);
  Word out;
  for (int i = 0; i < n; ++i) {
    out.push_back(pool[digits[i]]);
    pool.erase(pool.begin() + digits[i]);
  }
  return out;
}

std::vector<Word> all_permutations(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 1);
  std::vector<Word> out;
  out.reserve(factorial(n));
  do {
    out.emplace_back(std::span<const int>(p));
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<Word> repetition_free_words(int n, int N) {
  if (n > N) return {};
  std::vector<Word> out;
  std::vector<int> cur;
  std::uint32_t used = 0;
  std::function<void()> rec = [&]() {
    if (static_cast<int>(cur.size()) == n) {
      out.emplace_back(std::span<const int>(cur));
      return;
    }
    for (int x = 1; x <= N; ++x) {
      if ((used >> x) & 1U) continue;
      used |= 1U << x;
      cur.push_back(x);
      rec();
      cur.pop_back();
      used &= ~(1U << x);
    }
  };
  rec();
  return out;
}

void validate_letters(const Word& w, int N) {
  if (N < 1 || N > kMaxLetter) throw std::invalid_argument("alphabet size out of range");
  if (w.max_letter() > N) throw std::invalid_argument("letter exceeds alphabet size in " + w.str());
}

}  // namespace d0
