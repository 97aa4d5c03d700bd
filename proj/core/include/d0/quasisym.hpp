#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "d0/ncsf.hpp"
#include "d0/tableau.hpp"

namespace d0 {

// Integer combination of fundamental quasisymmetric functions F_D of a fixed
// degree n, indexed by descent-set bitmask over [n-1].
class FExpansion {
 public:
  explicit FExpansion(int degree = 0);

  static FExpansion of_words(const WordVector& f);
  static FExpansion of_words(const std::vector<Word>& words);

  int degree() const { return n_; }
  std::int64_t operator[](std::uint32_t bits) const { return c_[bits]; }
  void add(std::uint32_t bits, std::int64_t value) { c_[bits] += value; }
  void add(const DescentSet& d, std::int64_t value);
  bool is_zero() const;
  const std::vector<std::int64_t>& coefficients() const { return c_; }
  std::string str() const;

  FExpansion& operator-=(const FExpansion& other);
  friend bool operator==(const FExpansion&, const FExpansion&) = default;

 private:
  int n_;
  std::vector<std::int64_t> c_;
};

class SchurExpansion {
 public:
  // Largest partition (lexicographically) first.
  using Terms = std::map<Partition, std::int64_t, std::greater<>>;

  SchurExpansion() = default;

  std::int64_t coeff(const Partition& lambda) const;
  void add(const Partition& lambda, std::int64_t c);
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_positive() const;  // every coefficient nonnegative
  std::vector<Partition> negative_terms() const;
  std::string str() const;  // "s41 + 2 s32 - s2222"

  friend bool operator==(const SchurExpansion&, const SchurExpansion&) = default;

 private:
  Terms terms_;
};

struct NotSymmetric {
  FExpansion residual;  // input minus the symmetric part recovered by the solve
};

using SchurResult = std::variant<SchurExpansion, NotSymmetric>;

inline bool is_symmetric(const SchurResult& r) { return std::holds_alternative<SchurExpansion>(r); }

// F-expansions of Schur functions of one degree and the unitriangular solve
// against them. Instances are cached per degree and immutable.
class SchurSolver {
 public:
  static const SchurSolver& get(int degree);

  int degree() const { return n_; }
  const std::vector<Partition>& partitions() const { return partitions_; }
  // F-expansion of s_lambda.
  FExpansion schur_in_f(const Partition& lambda) const;
  SchurResult solve(const FExpansion& f) const;

 private:
  explicit SchurSolver(int degree);

  int n_;
  std::vector<Partition> partitions_;                // decreasing lexicographic
  std::vector<std::vector<std::uint32_t>> syt_des_;  // descent sets of SYT per partition
  std::vector<std::uint32_t> partial_sums_;          // S(mu) as a bitmask per partition
  std::vector<std::vector<std::int64_t>> kostka_;    // kostka_[nu][mu]
};

SchurResult schur_from_f(const FExpansion& f);

// Schur expansion of a word combination, computed by the F-basis solve and by
// pairing with every noncommutative Schur function.
struct DeltaSchur {
  SchurResult f_basis;
  SchurExpansion pairing;
  bool paths_agree() const;
  bool symmetric() const { return is_symmetric(f_basis); }
  const SchurExpansion& expansion() const;  // throws unless symmetric
};

DeltaSchur delta_schur(const WordVector& f);
DeltaSchur delta_schur(const std::vector<Word>& words);

SchurExpansion schur_by_pairing(const WordVector& f);
SchurExpansion schur_by_pairing(const std::vector<Word>& words);

}  // namespace d0
