#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "d0/tableau.hpp"
#include "d0/word.hpp"

namespace d0 {

// Sparse integer combination of words of a fixed length. Zero coefficients
// are never stored.
class WordVector {
 public:
  explicit WordVector(int degree = 0) : degree_(degree) {}

  static WordVector unit();  // the empty word with coefficient 1
  static WordVector indicator(const std::vector<Word>& words);

  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t num_terms() const { return terms_.size(); }
  const std::map<Word, std::int64_t>& terms() const { return terms_; }
  std::int64_t coeff(const Word& w) const;

  void add(const Word& w, std::int64_t c);
  WordVector& operator+=(const WordVector& other);
  WordVector& operator-=(const WordVector& other);
  WordVector operator*(std::int64_t scalar) const;
  friend WordVector operator+(WordVector x, const WordVector& y) { return x += y; }
  friend WordVector operator-(WordVector x, const WordVector& y) { return x -= y; }
  // Concatenation product.
  friend WordVector operator*(const WordVector& x, const WordVector& y);
  friend bool operator==(const WordVector&, const WordVector&) = default;

  std::string str() const;

 private:
  int degree_;
  std::map<Word, std::int64_t> terms_;
};

// Sum of strictly decreasing words of length d with letters in S.
WordVector elementary(int d, const std::vector<int>& letters);
WordVector elementary(int d, int N);  // S = [N]

// Coefficient of w in the noncommutative Schur function of shape lambda.
std::int64_t coeff_in_J(const Partition& lambda, const Word& w);

// sum_w f(w) coeff_in_J(lambda, w)
std::int64_t pair_J(const Partition& lambda, const WordVector& f);
std::int64_t pair_J(const Partition& lambda, const std::vector<Word>& words);

// sum_pi sgn(pi) e_{alpha_1+pi(1)-1}([n_1]) ... e_{alpha_l+pi(l)-l}([n_l])
WordVector flagged_J(const std::vector<int>& alpha, const std::vector<int>& flags);

// Full expansion of the noncommutative Schur function over [N].
WordVector schur_J(const Partition& lambda, int N);

WordVector drop_repeated_letter_words(const WordVector& f);

WordVector rev_map(const WordVector& f);
// theta[x] is the image of letter x (theta[0] unused); must be an
// order-preserving or order-reversing injection.
WordVector theta_map(const WordVector& f, const std::vector<int>& theta);

}  // namespace d0
