#include "bicross/scalar.hpp"

namespace bicross {

Scalar Scalar::from_rational_string(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0) throw InputError("bad rational literal: " + s);
  r.canonicalize();
  return Scalar(r);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw NotInvertible("division by zero scalar");
  Rational n = re_ * re_ + im_ * im_;
  return Scalar(re_ / n, -im_ / n);
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

namespace {

std::string rat_str(const Rational& r) { return r.get_str(); }

// imaginary part alone: `i`, `-i`, `p/q*i`
std::string imag_str(const Rational& im) {
  if (im == 1) return "i";
  if (im == -1) return "-i";
  return rat_str(im) + "*i";
}

}  // namespace

std::string Scalar::str() const {
  if (is_real()) return rat_str(re_);
  if (sgn(re_) == 0) return imag_str(im_);
  std::string s = "(" + rat_str(re_);
  if (sgn(im_) > 0)
    s += " + " + imag_str(im_);
  else
    s += " - " + imag_str(-im_);
  return s + ")";
}

}  // namespace bicross
