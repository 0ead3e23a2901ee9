#include "hldecomp/qpolynomial.hpp"

#include "hldecomp/errors.hpp"

namespace hldecomp {

QPolynomial QPolynomial::monomial(std::int64_t p, const BigInt& c) {
  QPolynomial out;
  out.add(p, c);
  return out;
}

QPolynomial::BigInt QPolynomial::operator[](std::int64_t p) const {
  auto it = coeffs_.find(p);
  return it == coeffs_.end() ? BigInt(0) : it->second;
}

void QPolynomial::add(std::int64_t p, const BigInt& c) {
  if (p < 0) throw InputError("q-polynomial grades must be nonnegative");
  if (c < 0) throw InputError("q-polynomial coefficients must be nonnegative");
  if (c == 0) return;
  coeffs_[p] += c;
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& other) {
  for (const auto& [p, c] : other.coeffs_) coeffs_[p] += c;
  return *this;
}

QPolynomial::BigInt QPolynomial::at_one() const {
  BigInt s = 0;
  for (const auto& [p, c] : coeffs_) s += c;
  return s;
}

namespace {

std::string render(const std::map<std::int64_t, mpz_class>& coeffs, bool latex) {
  if (coeffs.empty()) return "0";
  std::string s;
  for (const auto& [p, c] : coeffs) {
    if (!s.empty()) s += '+';
    const bool unit = c == 1;
    if (p == 0) {
      s += c.get_str();
      continue;
    }
    if (!unit) s += c.get_str();
    s += 'q';
    if (p != 1) s += latex ? "^{" + std::to_string(p) + "}" : "^" + std::to_string(p);
  }
  return s;
}

}  // namespace

std::string QPolynomial::to_plain() const { return render(coeffs_, false); }
std::string QPolynomial::to_latex() const { return render(coeffs_, true); }

}  // namespace hldecomp
