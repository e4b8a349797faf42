#include "bicross/series.hpp"

#include <sstream>

namespace bicross {

Series Series::h_power(int order, int k, const Scalar& coeff) {
  Series s(order);
  if (k < 0) throw InputError("negative h power");
  if (k <= order) s.c_[k] = coeff;
  return s;
}

bool Series::is_zero() const {
  for (const auto& c : c_)
    if (!c.is_zero()) return false;
  return true;
}

bool Series::is_one() const {
  if (!c_[0].is_one()) return false;
  for (std::size_t k = 1; k < c_.size(); ++k)
    if (!c_[k].is_zero()) return false;
  return true;
}

int Series::lowest_order() const {
  for (int k = 0; k <= order_; ++k)
    if (!c_[k].is_zero()) return k;
  return -1;
}

void Series::check_order(const Series& o) const {
  if (order_ != o.order_)
    throw ConfigError("mixed truncation orders: " + std::to_string(order_) +
                      " vs " + std::to_string(o.order_));
}

Series Series::operator-() const {
  Series r(order_);
  for (int k = 0; k <= order_; ++k) r.c_[k] = -c_[k];
  return r;
}

Series& Series::operator+=(const Series& o) {
  check_order(o);
  for (int k = 0; k <= order_; ++k) c_[k] += o.c_[k];
  return *this;
}

Series& Series::operator-=(const Series& o) {
  check_order(o);
  for (int k = 0; k <= order_; ++k) c_[k] -= o.c_[k];
  return *this;
}

Series operator*(const Series& a, const Series& b) {
  a.check_order(b);
  Series r(a.order_);
  for (int i = 0; i <= a.order_; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (int j = 0; i + j <= a.order_; ++j) {
      if (b.c_[j].is_zero()) continue;
      r.c_[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return r;
}

Series operator*(const Scalar& s, Series a) {
  for (auto& c : a.c_) c *= s;
  return a;
}

bool operator==(const Series& a, const Series& b) {
  a.check_order(b);
  return a.c_ == b.c_;
}

Series Series::invert() const {
  if (c_[0].is_zero())
    throw NotInvertible("series has zero constant term", 0);
  Series r(order_);
  Scalar inv0 = c_[0].inverse();
  r.c_[0] = inv0;
  for (int k = 1; k <= order_; ++k) {
    Scalar acc;
    for (int j = 1; j <= k; ++j) acc += c_[j] * r.c_[k - j];
    r.c_[k] = -(inv0 * acc);
  }
  return r;
}

Series Series::truncated(int m) const {
  if (m > order_)
    throw ConfigError("cannot raise truncation order " +
                      std::to_string(order_) + " -> " + std::to_string(m));
  Series r(m);
  for (int k = 0; k <= m; ++k) r.c_[k] = c_[k];
  return r;
}

std::string Series::str() const {
  std::ostringstream os;
  for (int k = 0; k <= order_; ++k) {
    if (k) os << " + ";
    os << c_[k].str();
    if (k == 1) os << "*h";
    if (k > 1) os << "*h^" << k;
  }
  return os.str();
}

namespace {

std::string h_str(int k) {
  if (k == 1) return "h";
  return "h^" + std::to_string(k);
}

// monomial with the sign kept inside the coefficient
std::string raw_monomial(const Scalar& c, int k) {
  if (k == 0) return c.str();
  if (c.is_one()) return h_str(k);
  return c.str() + "*" + h_str(k);
}

// splits `c` into sign and magnitude when that reads naturally
bool take_sign(const Scalar& c, Scalar& mag) {
  bool neg = (c.is_real() && sgn(c.real()) < 0) ||
             (sgn(c.real()) == 0 && sgn(c.imag()) < 0);
  mag = neg ? -c : c;
  return neg;
}

}  // namespace

bool Series::extract_sign(Series& magnitude) const {
  int nonzero = 0, at = -1;
  for (int k = 0; k <= order_; ++k)
    if (!c_[k].is_zero()) {
      ++nonzero;
      at = k;
    }
  if (nonzero != 1) return false;
  Scalar mag;
  if (!take_sign(c_[at], mag)) return false;
  magnitude = Series::h_power(order_, at, mag);
  return true;
}

bool Series::leading_negative() const {
  int k = lowest_order();
  if (k < 0) return false;
  const Scalar& c = c_[k];
  return (c.is_real() && sgn(c.real()) < 0) ||
         (sgn(c.real()) == 0 && sgn(c.imag()) < 0);
}

std::string Series::compact_str() const {
  int nonzero = 0, last = 0;
  for (int k = 0; k <= order_; ++k)
    if (!c_[k].is_zero()) {
      ++nonzero;
      last = k;
    }
  if (nonzero == 0) return "0";
  if (nonzero == 1) return raw_monomial(c_[last], last);
  std::string s = "(";
  bool first = true;
  for (int k = 0; k <= order_; ++k) {
    if (c_[k].is_zero()) continue;
    if (first) {
      s += raw_monomial(c_[k], k);
      first = false;
      continue;
    }
    Scalar mag;
    bool neg = take_sign(c_[k], mag);
    s += neg ? " - " : " + ";
    s += raw_monomial(mag, k);
  }
  return s + ")";
}

}  // namespace bicross
