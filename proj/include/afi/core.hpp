#pragma once

// Exact ±1 matrices and the signed-permutation group acting on them.
//
// A flat idempotent A with entries ±1/k is stored as B = kA, a matrix of
// signs. Nothing in this library touches floating point.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace afi {

inline constexpr std::size_t kDefaultDimensionCap = 32;

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input is well formed but the request has no solution (infeasible triple,
// non-idempotent matrix where one is required, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class CapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

class SignMatrix {
 public:
  SignMatrix() = default;

  // All entries +1.
  explicit SignMatrix(std::size_t n, std::size_t cap = kDefaultDimensionCap)
      : n_(n), entries_(n * n, 1) {
    check_dimension(n, cap);
  }

  SignMatrix(std::size_t n, std::vector<std::int8_t> entries,
             std::size_t cap = kDefaultDimensionCap)
      : n_(n), entries_(std::move(entries)) {
    check_dimension(n, cap);
    if (entries_.size() != n * n)
      throw DimensionError("sign matrix needs n*n entries");
    for (auto e : entries_)
      if (e != 1 && e != -1)
        throw std::invalid_argument("sign matrix entries must be +1 or -1");
  }

  static SignMatrix from_rows(const std::vector<std::vector<int>>& rows,
                              std::size_t cap = kDefaultDimensionCap) {
    std::vector<std::int8_t> e;
    e.reserve(rows.size() * rows.size());
    for (const auto& row : rows) {
      if (row.size() != rows.size())
        throw DimensionError("sign matrix must be square");
      for (int v : row) e.push_back(static_cast<std::int8_t>(v));
    }
    return SignMatrix(rows.size(), std::move(e), cap);
  }

  std::size_t size() const { return n_; }

  int operator()(std::size_t i, std::size_t j) const {
    return entries_[i * n_ + j];
  }

  std::span<const std::int8_t> row(std::size_t i) const {
    return {entries_.data() + i * n_, n_};
  }
  std::span<const std::int8_t> entries() const { return entries_; }

  // Returns a copy with one entry replaced; values stay immutable.
  SignMatrix with(std::size_t i, std::size_t j, int v) const {
    SignMatrix out = *this;
    out.entries_[i * n_ + j] = static_cast<std::int8_t>(v);
    return out;
  }

  std::int64_t trace() const {
    std::int64_t t = 0;
    for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
  }

  friend bool operator==(const SignMatrix&, const SignMatrix&) = default;

  // Row-major lexicographic order with - < +.
  friend auto operator<=>(const SignMatrix& a, const SignMatrix& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return std::lexicographical_compare_three_way(
        a.entries_.begin(), a.entries_.end(), b.entries_.begin(),
        b.entries_.end());
  }

 private:
  static void check_dimension(std::size_t n, std::size_t cap) {
    if (n == 0) throw DimensionError("sign matrix dimension must be >= 1");
    if (n > cap)
      throw CapExceeded("dimension " + std::to_string(n) + " exceeds cap " +
                        std::to_string(cap));
  }

  std::size_t n_ = 0;
  std::vector<std::int8_t> entries_;
};

// Dense exact integer matrix, the result type of products of sign matrices.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n) : n_(n), entries_(n * n, 0) {}
  IntMatrix(const SignMatrix& m) : n_(m.size()), entries_(m.entries().begin(), m.entries().end()) {}

  std::size_t size() const { return n_; }
  std::int64_t& operator()(std::size_t i, std::size_t j) {
    return entries_[i * n_ + j];
  }
  std::int64_t operator()(std::size_t i, std::size_t j) const {
    return entries_[i * n_ + j];
  }

  IntMatrix scaled(std::int64_t s) const {
    IntMatrix out = *this;
    for (auto& e : out.entries_) e *= s;
    return out;
  }

  bool is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](std::int64_t e) { return e == 0; });
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::int64_t> entries_;
};

// Exact product. Entries of a product of two n x n sign matrices are bounded
// by n in absolute value, so 64-bit accumulation never overflows here.
template <class L, class R>
IntMatrix multiply(const L& a, const R& b) {
  if (a.size() != b.size()) throw DimensionError("multiply: dimension mismatch");
  const std::size_t n = a.size();
  IntMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < n; ++l) {
      const std::int64_t ail = a(i, l);
      if (ail == 0) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += ail * b(l, j);
    }
  return out;
}

inline SignMatrix transpose(const SignMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::int8_t> e(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      e[j * n + i] = static_cast<std::int8_t>(m(i, j));
  return SignMatrix(n, std::move(e), n);
}

// The element Q = S P of the hyperoctahedral group, with P[i][perm[i]] = 1
// and S = diag(signs). It acts on matrices by similarity M -> Q M Q^-1.
class SignedPermutation {
 public:
  SignedPermutation() = default;

  static SignedPermutation identity(std::size_t n) {
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), std::size_t{0});
    return SignedPermutation(std::move(p), std::vector<int>(n, 1));
  }

  SignedPermutation(std::vector<std::size_t> perm, std::vector<int> signs)
      : perm_(std::move(perm)), signs_(std::move(signs)) {
    if (perm_.size() != signs_.size())
      throw DimensionError("signed permutation: perm/sign length mismatch");
    std::vector<bool> seen(perm_.size(), false);
    for (auto p : perm_) {
      if (p >= perm_.size() || seen[p])
        throw std::invalid_argument("signed permutation: perm is not a bijection");
      seen[p] = true;
    }
    for (int s : signs_)
      if (s != 1 && s != -1)
        throw std::invalid_argument("signed permutation: signs must be +-1");
  }

  static SignedPermutation permutation(std::vector<std::size_t> perm) {
    const auto n = perm.size();
    return SignedPermutation(std::move(perm), std::vector<int>(n, 1));
  }
  static SignedPermutation signature(std::vector<int> signs) {
    auto g = identity(signs.size());
    return SignedPermutation(std::move(g.perm_), std::move(signs));
  }

  std::size_t size() const { return perm_.size(); }
  std::span<const std::size_t> perm() const { return perm_; }
  std::span<const int> signs() const { return signs_; }

  bool is_identity() const {
    for (std::size_t i = 0; i < perm_.size(); ++i)
      if (perm_[i] != i || signs_[i] != 1) return false;
    return true;
  }

  // Matrix product Q_this * Q_rhs: acting by the result equals acting by rhs
  // and then by this.
  SignedPermutation operator*(const SignedPermutation& rhs) const {
    if (size() != rhs.size())
      throw DimensionError("signed permutation: dimension mismatch");
    std::vector<std::size_t> p(size());
    std::vector<int> s(size());
    for (std::size_t i = 0; i < size(); ++i) {
      p[i] = rhs.perm_[perm_[i]];
      s[i] = signs_[i] * rhs.signs_[perm_[i]];
    }
    return SignedPermutation(std::move(p), std::move(s));
  }

  SignedPermutation inverse() const {
    std::vector<std::size_t> p(size());
    std::vector<int> s(size());
    for (std::size_t i = 0; i < size(); ++i) {
      p[perm_[i]] = i;
      s[perm_[i]] = signs_[i];
    }
    return SignedPermutation(std::move(p), std::move(s));
  }

  friend bool operator==(const SignedPermutation&,
                         const SignedPermutation&) = default;

 private:
  std::vector<std::size_t> perm_;
  std::vector<int> signs_;
};

// (Q M Q^-1)[i][j] = s_i s_j M[perm i][perm j], computed on indices.
inline SignMatrix apply_similarity(const SignMatrix& m,
                                   const SignedPermutation& g) {
  const std::size_t n = m.size();
  if (g.size() != n) throw DimensionError("apply_similarity: dimension mismatch");
  const auto p = g.perm();
  const auto s = g.signs();
  std::vector<std::int8_t> e(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      e[i * n + j] = static_cast<std::int8_t>(s[i] * s[j] * m(p[i], p[j]));
  return SignMatrix(n, std::move(e), n);
}

// Parameters of a flat idempotent: n = r k + 2m and n - k = 2u.
struct Triple {
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::int64_t r = 0;
  std::int64_t m = 0;
  std::int64_t u = 0;

  friend bool operator==(const Triple&, const Triple&) = default;
  friend auto operator<=>(const Triple& a, const Triple& b) {
    if (auto c = a.n <=> b.n; c != 0) return c;
    if (auto c = a.k <=> b.k; c != 0) return c;
    return a.r <=> b.r;
  }
};

}  // namespace afi
