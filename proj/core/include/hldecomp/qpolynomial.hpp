#pragma once

#include <cstdint>
#include <map>
#include <string>

#include <gmpxx.h>

namespace hldecomp {

/// Polynomial in q with nonnegative integer coefficients; no zero entries are
/// stored.
class QPolynomial {
 public:
  using BigInt = mpz_class;

  QPolynomial() = default;
  static QPolynomial one() { return monomial(0, 1); }
  static QPolynomial monomial(std::int64_t p, const BigInt& c);

  /// Coefficient at q^p (0 when absent).
  BigInt operator[](std::int64_t p) const;
  void add(std::int64_t p, const BigInt& c);
  QPolynomial& operator+=(const QPolynomial& other);
  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }

  const std::map<std::int64_t, BigInt>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  BigInt at_one() const;
  std::int64_t degree() const { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }

  /// "2q^4+q^5"; "0" for the zero polynomial.
  std::string to_plain() const;
  /// "2q^{4}+q^{5}".
  std::string to_latex() const;

  friend bool operator==(const QPolynomial& a, const QPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  std::map<std::int64_t, BigInt> coeffs_;
};

}  // namespace hldecomp
