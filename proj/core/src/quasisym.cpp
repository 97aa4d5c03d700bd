#include "d0/quasisym.hpp"

#include <memory>
#include <mutex>
#include <stdexcept>

namespace d0 {

FExpansion::FExpansion(int degree) : n_(degree) {
  if (degree < 0 || degree > kMaxLength) throw std::invalid_argument("FExpansion degree");
  c_.assign(degree <= 1 ? 1 : (std::size_t{1} << (degree - 1)), 0);
}

FExpansion FExpansion::of_words(const WordVector& f) {
  FExpansion out(f.degree());
  for (const auto& [w, c] : f.terms()) out.add(descent_set(w).bits(), c);
  return out;
}

FExpansion FExpansion::of_words(const std::vector<Word>& words) {
  FExpansion out(words.empty() ? 0 : words.front().size());
  for (const Word& w : words) {
    if (w.size() != out.degree()) throw std::invalid_argument("FExpansion: words of mixed length");
    out.add(descent_set(w).bits(), 1);
  }
  return out;
}

void FExpansion::add(const DescentSet& d, std::int64_t value) {
  if (d.degree() != n_) throw std::invalid_argument("FExpansion: degree mismatch");
  c_[d.bits()] += value;
}

bool FExpansion::is_zero() const {
  for (auto x : c_)
    if (x != 0) return false;
  return true;
}

FExpansion& FExpansion::operator-=(const FExpansion& other) {
  if (other.n_ != n_) throw std::invalid_argument("FExpansion: degree mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= other.c_[i];
  return *this;
}

std::string FExpansion::str() const {
  std::string out;
  for (std::uint32_t bits = 0; bits < c_.size(); ++bits) {
    if (c_[bits] == 0) continue;
    if (!out.empty()) out += ' ';
    out += std::to_string(c_[bits]) + "*F{";
    bool first = true;
    for (int i = 1; i < n_; ++i)
      if ((bits >> (i - 1)) & 1U) {
        if (!first) out += ',';
        out += std::to_string(i);
        first = false;
      }
    out += '}';
  }
  return out.empty() ? "0" : out;
}

std::int64_t SchurExpansion::coeff(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? 0 : it->second;
}

void SchurExpansion::add(const Partition& lambda, std::int64_t c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool SchurExpansion::is_positive() const {
  for (const auto& [p, c] : terms_)
    if (c < 0) return false;
  return true;
}

std::vector<Partition> SchurExpansion::negative_terms() const {
  std::vector<Partition> out;
  for (const auto& [p, c] : terms_)
    if (c < 0) out.push_back(p);
  return out;
}

std::string SchurExpansion::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [p, c] : terms_) {
    if (c < 0) out += first ? "-" : " - ";
    else if (!first) out += " + ";
    std::int64_t a = c < 0 ? -c : c;
    if (a != 1) out += std::to_string(a) + " ";
    out += "s" + p.compact();
    first = false;
  }
  return out;
}

SchurSolver::SchurSolver(int degree) : n_(degree), partitions_(partitions_of(degree)) {
  const std::size_t m = partitions_.size();
  for (const Partition& p : partitions_) {
    std::vector<std::uint32_t> des;
    for (const Tableau& t : enumerate_syt(p)) des.push_back(t.descent_set().bits());
    syt_des_.push_back(std::move(des));
    std::uint32_t s = 0;
    int sum = 0;
    for (int i = 0; i + 1 < p.length(); ++i) {
      sum += p.part(i);
      s |= 1U << (sum - 1);
    }
    partial_sums_.push_back(s);
  }
  kostka_.assign(m, std::vector<std::int64_t>(m, 0));
  for (std::size_t nu = 0; nu < m; ++nu)
    for (std::size_t mu = 0; mu < m; ++mu)
      for (std::uint32_t d : syt_des_[nu])
        if ((d & ~partial_sums_[mu]) == 0) ++kostka_[nu][mu];
}

const SchurSolver& SchurSolver::get(int degree) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<SchurSolver>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[degree];
  if (!slot) slot.reset(new SchurSolver(degree));
  return *slot;
}

FExpansion SchurSolver::schur_in_f(const Partition& lambda) const {
  FExpansion out(n_);
  for (std::size_t k = 0; k < partitions_.size(); ++k)
    if (partitions_[k] == lambda) {
      for (std::uint32_t d : syt_des_[k]) out.add(d, 1);
      return out;
    }
  throw std::invalid_argument("schur_in_f: partition of the wrong size");
}

SchurResult SchurSolver::solve(const FExpansion& f) const {
  if (f.degree() != n_) throw std::invalid_argument("SchurSolver: degree mismatch");
  const std::size_t m = partitions_.size();
  // Monomial coefficient of x^mu: sum of f_D over D contained in S(mu).
  std::vector<std::int64_t> mono(m, 0);
  const auto& c = f.coefficients();
  for (std::size_t k = 0; k < m; ++k) {
    std::uint32_t s = partial_sums_[k];
    // Enumerate submasks of s.
    for (std::uint32_t d = s;; d = (d - 1) & s) {
      mono[k] += c[d];
      if (d == 0) break;
    }
  }
  // Kostka matrix is unitriangular for decreasing lexicographic order.
  std::vector<std::int64_t> coef(m, 0);
  for (std::size_t k = 0; k < m; ++k) {
    std::int64_t value = mono[k];
    for (std::size_t j = 0; j < k; ++j) value -= coef[j] * kostka_[j][k];
    coef[k] = value;
  }
  FExpansion residual = f;
  SchurExpansion out;
  for (std::size_t k = 0; k < m; ++k) {
    if (coef[k] == 0) continue;
    for (std::uint32_t d : syt_des_[k]) residual.add(d, -coef[k]);
    out.add(partitions_[k], coef[k]);
  }
  if (!residual.is_zero()) return NotSymmetric{residual};
  return out;
}

SchurResult schur_from_f(const FExpansion& f) { return SchurSolver::get(f.degree()).solve(f); }

bool DeltaSchur::paths_agree() const {
  return symmetric() && std::get<SchurExpansion>(f_basis) == pairing;
}

const SchurExpansion& DeltaSchur::expansion() const {
  if (!symmetric()) throw std::logic_error("delta_schur: input is not symmetric");
  return std::get<SchurExpansion>(f_basis);
}

SchurExpansion schur_by_pairing(const WordVector& f) {
  SchurExpansion out;
  if (f.is_zero()) return out;
  for (const Partition& p : partitions_of(f.degree())) out.add(p, pair_J(p, f));
  return out;
}

SchurExpansion schur_by_pairing(const std::vector<Word>& words) {
  SchurExpansion out;
  if (words.empty()) return out;
  for (const Partition& p : partitions_of(words.front().size())) out.add(p, pair_J(p, words));
  return out;
}

DeltaSchur delta_schur(const WordVector& f) {
  return DeltaSchur{schur_from_f(FExpansion::of_words(f)), schur_by_pairing(f)};
}

DeltaSchur delta_schur(const std::vector<Word>& words) {
  return DeltaSchur{schur_from_f(FExpansion::of_words(words)), schur_by_pairing(words)};
}

}  // namespace d0
