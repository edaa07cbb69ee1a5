#pragma once

#include <vector>

#include "qrook/qpoly.hpp"

namespace qrook {

/// Polynomial in t whose coefficients are Laurent polynomials in q.
/// Carries an explicit t-degree bound so transforms that reverse the
/// coefficient order (reciprocity) know the intended top degree even when
/// high coefficients vanish.
class TPoly {
public:
  TPoly() = default;
  explicit TPoly(int bound) : bound_(bound) {}
  static TPoly constant(QPoly c, int bound);
  static TPoly from_coeffs(std::vector<QPoly> coeffs, int bound);

  int bound() const { return bound_; }
  int tdegree() const;  // actual degree; -1 if zero
  const QPoly& coeff(int i) const;
  void set_coeff(int i, QPoly c);
  bool is_zero() const { return tdegree() < 0; }

  TPoly operator+(const TPoly& o) const;
  TPoly operator-(const TPoly& o) const;
  TPoly operator*(const TPoly& o) const;
  TPoly scaled(const QPoly& c) const;
  // t -> q^e * t
  TPoly subst_t_scale(long long e) const;
  // Coefficient of t^(m-i) in the result is q^(n*i) times coefficient of t^i.
  // This realizes t^m * P(q^n / t) for P with t-degree at most m.
  TPoly shift_reciprocal(long long n, int m) const;

  bool operator==(const TPoly& o) const;
  bool operator!=(const TPoly& o) const { return !(*this == o); }

  std::string str() const;

private:
  std::vector<QPoly> c_;
  int bound_ = 0;
};

// prod_{j=0}^{count-1} (1 - q^{e0 + j*step} t)
TPoly prod_one_minus_qpow_t(int count, long long e0, long long step);
// prod_{j=0}^{count-1} (t - q^{e0 + j*step})
TPoly prod_t_minus_qpow(int count, long long e0, long long step);

}  // namespace qrook
