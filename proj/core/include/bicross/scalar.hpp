#ifndef BICROSS_SCALAR_HPP
#define BICROSS_SCALAR_HPP

#include <gmpxx.h>

#include <string>

#include "bicross/errors.hpp"

namespace bicross {

using Rational = mpq_class;

/// Exact Gaussian rational `re + im*i`. All arithmetic is exact; every
/// axiom check in the library bottoms out in `is_zero()` on these.
class Scalar {
 public:
  Scalar() : re_(0), im_(0) {}
  Scalar(int v) : re_(v), im_(0) {}
  Scalar(long v) : re_(v), im_(0) {}
  Scalar(const Rational& re) : re_(re), im_(0) {}
  Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static Scalar i() { return Scalar(Rational(0), Rational(1)); }
  /// Parses "p" or "p/q" (exact, canonicalized).
  static Scalar from_rational_string(const std::string& s);

  const Rational& real() const { return re_; }
  const Rational& imag() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  Scalar operator-() const { return Scalar(-re_, -im_); }
  Scalar& operator+=(const Scalar& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  Scalar& operator*=(const Scalar& o) {
    Rational re = re_ * o.re_ - im_ * o.im_;
    im_ = re_ * o.im_ + im_ * o.re_;
    re_ = re;
    return *this;
  }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(const Scalar& a, const Scalar& b);

  Scalar conjugate() const { return Scalar(re_, -im_); }
  Scalar inverse() const;

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Canonical rendering: `p/q`, `i`, `-i`, `p/q*i`, or `(a + b*i)`.
  std::string str() const;

 private:
  Rational re_, im_;
};

}  // namespace bicross

#endif
