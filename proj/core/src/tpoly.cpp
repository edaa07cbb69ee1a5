#include "qrook/tpoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qrook {

namespace {
const QPoly kZero;
}

TPoly TPoly::constant(QPoly c, int bound) {
  TPoly p(bound);
  p.set_coeff(0, std::move(c));
  return p;
}

TPoly TPoly::from_coeffs(std::vector<QPoly> coeffs, int bound) {
  TPoly p(bound);
  p.c_ = std::move(coeffs);
  if (static_cast<int>(p.c_.size()) > bound + 1)
    throw std::invalid_argument("TPoly: more coefficients than the bound allows");
  return p;
}

int TPoly::tdegree() const {
  for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i)
    if (!c_[i].is_zero()) return i;
  return -1;
}

const QPoly& TPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
  return c_[static_cast<size_t>(i)];
}

void TPoly::set_coeff(int i, QPoly c) {
  if (i < 0 || i > bound_)
    throw std::out_of_range("TPoly: t-degree outside declared bound");
  if (i >= static_cast<int>(c_.size())) c_.resize(static_cast<size_t>(i) + 1);
  c_[static_cast<size_t>(i)] = std::move(c);
}

TPoly TPoly::operator+(const TPoly& o) const {
  TPoly r(std::max(bound_, o.bound_));
  int top = std::max(tdegree(), o.tdegree());
  for (int i = 0; i <= top; ++i) r.set_coeff(i, coeff(i) + o.coeff(i));
  return r;
}

TPoly TPoly::operator-(const TPoly& o) const {
  TPoly r(std::max(bound_, o.bound_));
  int top = std::max(tdegree(), o.tdegree());
  for (int i = 0; i <= top; ++i) r.set_coeff(i, coeff(i) - o.coeff(i));
  return r;
}

TPoly TPoly::operator*(const TPoly& o) const {
  TPoly r(bound_ + o.bound_);
  int da = tdegree(), db = o.tdegree();
  if (da < 0 || db < 0) return r;
  for (int i = 0; i <= da + db; ++i) r.set_coeff(i, QPoly());
  for (int i = 0; i <= da; ++i) {
    if (coeff(i).is_zero()) continue;
    for (int j = 0; j <= db; ++j)
      r.set_coeff(i + j, r.coeff(i + j) + coeff(i) * o.coeff(j));
  }
  return r;
}

TPoly TPoly::scaled(const QPoly& c) const {
  TPoly r(bound_);
  for (int i = 0; i <= tdegree(); ++i) r.set_coeff(i, coeff(i) * c);
  return r;
}

TPoly TPoly::subst_t_scale(long long e) const {
  TPoly r(bound_);
  for (int i = 0; i <= tdegree(); ++i)
    r.set_coeff(i, coeff(i).times_pow_q(e * i));
  return r;
}

TPoly TPoly::shift_reciprocal(long long n, int m) const {
  if (tdegree() > m)
    throw std::out_of_range("TPoly::shift_reciprocal: t-degree exceeds m");
  TPoly r(m);
  for (int i = 0; i <= m; ++i) {
    QPoly c = coeff(i);
    if (!c.is_zero()) r.set_coeff(m - i, c.times_pow_q(n * i));
  }
  return r;
}

bool TPoly::operator==(const TPoly& o) const {
  int top = std::max(tdegree(), o.tdegree());
  for (int i = 0; i <= top; ++i)
    if (coeff(i) != o.coeff(i)) return false;
  return true;
}

std::string TPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = tdegree(); i >= 0; --i) {
    if (coeff(i).is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << coeff(i).str() << ")";
    if (i == 1)
      os << "t";
    else if (i > 1)
      os << "t^" << i;
  }
  return os.str();
}

TPoly prod_one_minus_qpow_t(int count, long long e0, long long step) {
  TPoly r = TPoly::constant(QPoly::one(), 0);
  for (int j = 0; j < count; ++j) {
    TPoly f(1);
    f.set_coeff(0, QPoly::one());
    f.set_coeff(1, QPoly::monomial(-1, e0 + j * step));
    r = r * f;
  }
  return r;
}

TPoly prod_t_minus_qpow(int count, long long e0, long long step) {
  TPoly r = TPoly::constant(QPoly::one(), 0);
  for (int j = 0; j < count; ++j) {
    TPoly f(1);
    f.set_coeff(0, QPoly::monomial(-1, e0 + j * step));
    f.set_coeff(1, QPoly::one());
    r = r * f;
  }
  return r;
}

}  // namespace qrook
