#include "qrook/qpoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace qrook {

void QPoly::normalize() {
  size_t lo = 0, hi = coeffs_.size();
  while (hi > lo && coeffs_[hi - 1] == 0) --hi;
  while (lo < hi && coeffs_[lo] == 0) ++lo;
  if (lo == hi) {
    coeffs_.clear();
    val_ = 0;
    return;
  }
  if (lo > 0 || hi < coeffs_.size()) {
    std::vector<Int> t(coeffs_.begin() + lo, coeffs_.begin() + hi);
    coeffs_ = std::move(t);
    val_ += static_cast<long long>(lo);
  }
}

QPoly QPoly::monomial(Int c, long long e) {
  QPoly p;
  if (c != 0) {
    p.val_ = e;
    p.coeffs_.push_back(std::move(c));
  }
  return p;
}

QPoly QPoly::from_coeffs(long long valuation, std::vector<Int> coeffs) {
  QPoly p;
  p.val_ = valuation;
  p.coeffs_ = std::move(coeffs);
  p.normalize();
  return p;
}

Int QPoly::coeff(long long e) const {
  if (is_zero()) return 0;
  long long i = e - val_;
  if (i < 0 || i >= static_cast<long long>(coeffs_.size())) return 0;
  return coeffs_[static_cast<size_t>(i)];
}

bool QPoly::nonnegative_coeffs() const {
  for (const auto& c : coeffs_)
    if (c < 0) return false;
  return true;
}

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) {
    *this = o;
    return *this;
  }
  long long lo = std::min(val_, o.val_);
  long long hi = std::max(degree(), o.degree());
  std::vector<Int> out(static_cast<size_t>(hi - lo + 1));
  for (size_t i = 0; i < coeffs_.size(); ++i)
    out[static_cast<size_t>(val_ - lo) + i] = coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i)
    out[static_cast<size_t>(o.val_ - lo) + i] += o.coeffs_[i];
  val_ = lo;
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) { return *this += -o; }
QPoly QPoly::operator+(const QPoly& o) const {
  QPoly r = *this;
  r += o;
  return r;
}
QPoly QPoly::operator-(const QPoly& o) const {
  QPoly r = *this;
  r -= o;
  return r;
}

QPoly QPoly::operator*(const QPoly& o) const {
  if (is_zero() || o.is_zero()) return QPoly();
  QPoly r;
  r.val_ = val_ + o.val_;
  r.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, Int(0));
  for (size_t i = 0; i < coeffs_.size(); ++i)
    for (size_t j = 0; j < o.coeffs_.size(); ++j)
      r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
  r.normalize();
  return r;
}

QPoly& QPoly::operator*=(const QPoly& o) {
  *this = *this * o;
  return *this;
}

QPoly QPoly::times_int(const Int& c) const {
  if (c == 0) return QPoly();
  QPoly r = *this;
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

QPoly QPoly::times_pow_q(long long e) const {
  QPoly r = *this;
  if (!r.is_zero()) r.val_ += e;
  return r;
}

QPoly QPoly::subst_q_inverse() const {
  if (is_zero()) return QPoly();
  QPoly r;
  r.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
  r.val_ = -degree();
  return r;
}

QPoly QPoly::pow(unsigned k) const {
  QPoly r = one();
  QPoly base = *this;
  while (k) {
    if (k & 1) r *= base;
    base = (k >>= 1) ? base * base : base;
  }
  return r;
}

QPoly QPoly::exact_div(const QPoly& d) const {
  if (d.is_zero()) throw std::invalid_argument("QPoly: division by zero");
  if (is_zero()) return QPoly();
  if (coeffs_.size() < d.coeffs_.size())
    throw NotDivisible("QPoly: degree span too small for divisor", *this);
  std::vector<Int> rem = coeffs_;
  size_t qn = coeffs_.size() - d.coeffs_.size() + 1;
  std::vector<Int> quot(qn);
  const Int& dl = d.coeffs_.back();
  for (size_t k = qn; k-- > 0;) {
    Int& lead = rem[k + d.coeffs_.size() - 1];
    if (lead == 0) continue;
    Int t = lead / dl;
    if (t * dl != lead) {
      QPoly r = from_coeffs(val_, std::move(rem));
      throw NotDivisible("QPoly: inexact division (leading coefficient)", r);
    }
    quot[k] = t;
    for (size_t j = 0; j < d.coeffs_.size(); ++j)
      rem[k + j] -= t * d.coeffs_[j];
  }
  for (const auto& c : rem)
    if (c != 0)
      throw NotDivisible("QPoly: inexact division (nonzero remainder)",
                         from_coeffs(val_, rem));
  return from_coeffs(val_ - d.val_, std::move(quot));
}

QPoly QPoly::exact_div_pow_q(long long k) const {
  QPoly r = times_pow_q(-k);
  if (!r.is_polynomial())
    throw NotDivisible("QPoly: q^" + std::to_string(k) +
                           " does not divide exactly in Z[q]",
                       *this);
  return r;
}

Int QPoly::eval_int(const Int& q) const {
  if (!is_polynomial())
    throw std::domain_error("QPoly: integer evaluation of a Laurent polynomial");
  if (is_zero()) return 0;
  Int acc = 0;
  for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * q + coeffs_[i];
  for (long long i = 0; i < val_; ++i) acc *= q;
  return acc;
}

Rat QPoly::eval_rat(const Rat& q) const {
  if (is_zero()) return 0;
  Rat acc = 0;
  for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * q + Rat(coeffs_[i]);
  if (val_ >= 0) {
    for (long long i = 0; i < val_; ++i) acc *= q;
  } else {
    if (q == 0) throw std::domain_error("QPoly: evaluating q^-k at 0");
    for (long long i = 0; i < -val_; ++i) acc /= q;
  }
  return acc;
}

std::string QPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long long e = degree(); e >= valuation(); --e) {
    Int c = coeff(e);
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    Int a = abs(c);
    if (a != 1 || e == 0) os << a.str();
    if (e == 1)
      os << "q";
    else if (e != 0)
      os << "q^" << e;
  }
  return os.str();
}

namespace {

// One term of the canonical form: [digits][q[^exp]].
bool parse_term(const std::string& s, Int& c, long long& e) {
  size_t i = 0;
  std::string digits;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
    digits.push_back(s[i++]);
  c = digits.empty() ? Int(1) : Int(digits);
  e = 0;
  if (i == s.size()) {
    if (digits.empty()) return false;
    return true;
  }
  if (s[i] != 'q') return false;
  ++i;
  e = 1;
  if (i == s.size()) return true;
  if (s[i] != '^') return false;
  ++i;
  bool neg = false;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) neg = (s[i++] == '-');
  if (i == s.size()) return false;
  long long v = 0;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    v = v * 10 + (s[i] - '0');
  }
  e = neg ? -v : v;
  return true;
}

}  // namespace

QPoly QPoly::parse(const std::string& text) {
  QPoly out;
  std::string t;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
  if (t.empty()) throw std::invalid_argument("QPoly::parse: empty input");
  if (t == "0") return out;
  size_t i = 0;
  int sign = 1;
  if (t[0] == '-') {
    sign = -1;
    i = 1;
  } else if (t[0] == '+') {
    i = 1;
  }
  while (i <= t.size()) {
    size_t j = i;
    // A sign right after '^' belongs to the exponent, not a new term.
    while (j < t.size() &&
           ((t[j] != '+' && t[j] != '-') || (j > 0 && t[j - 1] == '^')))
      ++j;
    Int c;
    long long e;
    if (!parse_term(t.substr(i, j - i), c, e))
      throw std::invalid_argument("QPoly::parse: bad term in '" + text + "'");
    out += monomial(sign * c, e);
    if (j == t.size()) break;
    sign = (t[j] == '-') ? -1 : 1;
    i = j + 1;
  }
  return out;
}

QPoly qint(long long k) {
  if (k < 0) throw std::invalid_argument("qint: negative argument");
  std::vector<Int> c(static_cast<size_t>(k), Int(1));
  return QPoly::from_coeffs(0, std::move(c));
}

QPoly qfact(long long k) {
  if (k < 0) throw std::invalid_argument("qfact: negative argument");
  QPoly r = QPoly::one();
  for (long long i = 1; i <= k; ++i) r *= qint(i);
  return r;
}

QPoly qbinom(long long k, long long l) {
  if (l < 0 || l > k) return QPoly::zero();
  l = std::min(l, k - l);
  QPoly num = QPoly::one();
  for (long long i = 0; i < l; ++i) num *= qint(k - i);
  return num.exact_div(qfact(l));
}

QPoly qpoch_step(long long e, long long step, long long k) {
  if (k < 0) throw std::invalid_argument("qpoch_step: negative length");
  QPoly r = QPoly::one();
  for (long long j = 0; j < k; ++j) {
    QPoly f = QPoly::one() - QPoly::monomial(1, e + j * step);
    if (f.is_zero()) return QPoly::zero();
    r *= f;
  }
  return r;
}

QPoly qpoch(long long e, long long k) { return qpoch_step(e, 1, k); }

QPoly shift_variable(const QPoly& p, const Int& c) {
  if (!p.is_polynomial())
    throw std::invalid_argument("shift_variable: negative valuation");
  QPoly lin = QPoly::from_coeffs(0, {c, Int(1)});  // x + c
  QPoly acc;
  for (long long e = p.degree(); e >= 0; --e) {
    acc = acc * lin;
    acc += QPoly(p.coeff(e));
  }
  return acc;
}

}  // namespace qrook
