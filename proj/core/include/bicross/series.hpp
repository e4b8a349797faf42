#ifndef BICROSS_SERIES_HPP
#define BICROSS_SERIES_HPP

#include <string>
#include <vector>

#include "bicross/scalar.hpp"

namespace bicross {

/// Element of the truncated deformation ring R_N = Q(i)[h]/(h^{N+1}).
/// The truncation order N is fixed per verification session; operations
/// on series of different orders throw ConfigError rather than coerce.
class Series {
 public:
  explicit Series(int order) : order_(order), c_(order + 1) {}
  Series(int order, const Scalar& c0) : Series(order) { c_[0] = c0; }

  static Series one(int order) { return Series(order, Scalar(1)); }
  /// coeff * h^k  (k <= order; higher powers vanish in R_N)
  static Series h_power(int order, int k, const Scalar& coeff = Scalar(1));

  int order() const { return order_; }
  const Scalar& coeff(int k) const { return c_.at(k); }
  Series& set(int k, const Scalar& v) {
    c_.at(k) = v;
    return *this;
  }

  bool is_zero() const;
  bool is_one() const;
  /// Smallest k with nonzero coefficient, or -1 for the zero series.
  int lowest_order() const;

  Series operator-() const;
  Series& operator+=(const Series& o);
  Series& operator-=(const Series& o);
  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(const Series& a, const Series& b);
  friend Series operator*(const Scalar& s, Series a);

  friend bool operator==(const Series& a, const Series& b);
  friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

  /// Multiplicative inverse in R_N; requires nonzero constant term.
  Series invert() const;
  /// Image under the quotient R_N -> R_M for M <= N.
  Series truncated(int m) const;

  /// True when the series is a single monomial that reads as negative;
  /// `magnitude` then receives the sign-flipped series.
  bool extract_sign(Series& magnitude) const;
  /// Sign of the first nonzero coefficient (false for zero).
  bool leading_negative() const;

  /// Full rendering `c0 + c1*h + ... + cN*h^N` (every slot shown).
  std::string str() const;
  /// Compact rendering used inside element terms: a single monomial
  /// `c`, `c*h`, `c*h^k`, or a parenthesized sum of monomials.
  std::string compact_str() const;

 private:
  void check_order(const Series& o) const;

  int order_;
  std::vector<Scalar> c_;
};

}  // namespace bicross

#endif
