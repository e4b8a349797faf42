#ifndef BICROSS_RANDOM_HPP
#define BICROSS_RANDOM_HPP

#include <random>

#include "bicross/element.hpp"

namespace bicross {

/// Deterministic sampling for property checks; every consumer seeds its
/// own Sampler so reports are byte-stable across runs.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t next() { return rng_(); }
  int uniform(int lo, int hi) {
    return (int)std::uniform_int_distribution<int>(lo, hi)(rng_);
  }

  Scalar small_scalar() {
    int num = uniform(-4, 4);
    if (num == 0) num = 1;
    int den = uniform(1, 3);
    bool imag = uniform(0, 3) == 0;
    Rational r(num, den);
    r.canonicalize();
    return imag ? Scalar(Rational(0), r) : Scalar(r);
  }

  Series small_series(int order) {
    Series s(order, small_scalar());
    if (order >= 1 && uniform(0, 2) == 0)
      s.set(uniform(1, order), small_scalar());
    return s;
  }

  Word word(const Presentation& p, int max_len, int min_len = 0) {
    Word w;
    if (p.size() == 0) return w;
    int len = uniform(min_len, max_len);
    for (int i = 0; i < len; ++i)
      w.push_back((unsigned char)uniform(0, p.size() - 1));
    return w;
  }

  Element element(const PresPtr& p, int max_len, int terms) {
    Terms raw;
    for (int t = 0; t < terms; ++t) {
      auto [it, fresh] = raw.emplace(word(*p, max_len), small_series(p->series_order()));
      (void)it;
      (void)fresh;
    }
    return Element::from_terms(p, std::move(raw));
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace bicross

#endif
