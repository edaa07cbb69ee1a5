#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qrook {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Laurent polynomial in q with arbitrary-precision integer coefficients.
///
/// Canonical form: the coefficient vector is empty iff the polynomial is
/// zero, and otherwise has nonzero first and last entries.  coeffs()[i] is
/// the coefficient of q^(valuation()+i); the valuation may be negative.
class QPoly {
public:
  QPoly() = default;
  QPoly(long long c) : QPoly(Int(c)) {}
  explicit QPoly(Int c) {
    if (c != 0) coeffs_.push_back(std::move(c));
  }

  static QPoly zero() { return QPoly(); }
  static QPoly one() { return QPoly(1); }
  static QPoly q() { return monomial(1, 1); }
  static QPoly monomial(Int c, long long e);
  static QPoly from_coeffs(long long valuation, std::vector<Int> coeffs);

  bool is_zero() const { return coeffs_.empty(); }
  // valuation()/degree() are 0 for the zero polynomial by convention.
  long long valuation() const { return is_zero() ? 0 : val_; }
  long long degree() const {
    return is_zero() ? 0 : val_ + static_cast<long long>(coeffs_.size()) - 1;
  }
  const std::vector<Int>& coeffs() const { return coeffs_; }
  Int coeff(long long e) const;
  bool is_polynomial() const { return is_zero() || val_ >= 0; }
  bool nonnegative_coeffs() const;

  QPoly operator-() const;
  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly operator+(const QPoly& o) const;
  QPoly operator-(const QPoly& o) const;
  QPoly operator*(const QPoly& o) const;
  QPoly& operator*=(const QPoly& o);
  QPoly times_int(const Int& c) const;
  // Multiply by q^e (O(1) Laurent shift).
  QPoly times_pow_q(long long e) const;
  QPoly pow(unsigned k) const;
  // p(q) -> p(q^{-1}): reverses the coefficient order.
  QPoly subst_q_inverse() const;

  bool operator==(const QPoly& o) const {
    return coeffs_ == o.coeffs_ && (is_zero() || val_ == o.val_);
  }
  bool operator!=(const QPoly& o) const { return !(*this == o); }

  // Exact division in the Laurent ring; throws NotDivisible otherwise.
  QPoly exact_div(const QPoly& d) const;
  // Divide by q^k and require the result to stay a genuine polynomial.
  QPoly exact_div_pow_q(long long k) const;

  Int eval_int(const Int& q) const;  // requires is_polynomial()
  Rat eval_rat(const Rat& q) const;

  // Canonical text form: descending powers, explicit signs, q^k syntax.
  std::string str() const;
  static QPoly parse(const std::string& text);

private:
  void normalize();
  long long val_ = 0;
  std::vector<Int> coeffs_;
};

/// Exact-division failure; carries the offending remainder.
class NotDivisible : public std::runtime_error {
public:
  NotDivisible(std::string what, QPoly remainder)
      : std::runtime_error(std::move(what)), remainder_(std::move(remainder)) {}
  const QPoly& remainder() const { return remainder_; }

private:
  QPoly remainder_;
};

// q-combinatorial building blocks.
QPoly qint(long long k);                    // [k]_q = 1 + q + ... + q^{k-1}
QPoly qfact(long long k);                   // [k]!_q
QPoly qbinom(long long k, long long l);     // Gaussian binomial, 0 out of range
// (q^e; q^step)_k = prod_{j=0}^{k-1} (1 - q^{e + j*step})
QPoly qpoch_step(long long e, long long step, long long k);
QPoly qpoch(long long e, long long k);      // (q^e; q)_k

// Coefficients of p(x+c) in x; requires nonnegative valuation.
QPoly shift_variable(const QPoly& p, const Int& c);

inline Int binom(long long n, long long k) {
  if (k < 0 || k > n || n < 0) return 0;
  Int r = 1;
  for (long long i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;
  }
  return r;
}

}  // namespace qrook
