#ifndef BICROSS_ELEMENT_HPP
#define BICROSS_ELEMENT_HPP

#include <string>
#include <vector>

#include "bicross/presentation.hpp"
#include "bicross/rewrite.hpp"

namespace bicross {

/// Linear combination of normal words with series coefficients. Always
/// kept in normal form: words sorted, no zero coefficients stored, all
/// coefficients at the presentation's truncation order. Value type, safe
/// to share across threads.
class Element {
 public:
  Element() = default;

  static Element zero(PresPtr p);
  static Element unit(PresPtr p);
  static Element generator(PresPtr p, GenId g);
  static Element generator(PresPtr p, const std::string& name);
  /// Normalizes an arbitrary raw combination (the public normal_form
  /// entry point for unreduced input).
  static Element from_terms(PresPtr p, Terms raw,
                            const rewrite::Options& opt = {});
  static Element from_word(PresPtr p, Word w, Series coeff,
                           const rewrite::Options& opt = {});

  bool valid() const { return pres_ != nullptr; }
  const PresPtr& pres() const { return pres_; }
  const Terms& terms() const { return terms_; }
  int series_order() const { return pres_->series_order(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_unit() const;
  int degree() const;  // longest word, 0 for scalars; -1 for zero

  Element operator-() const;
  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Element& a, const Element& b);
  friend Element operator*(const Scalar& s, Element e);
  friend Element operator*(const Series& s, Element e);

  friend bool operator==(const Element& a, const Element& b);
  friend bool operator!=(const Element& a, const Element& b) {
    return !(a == b);
  }

  /// Identity on elements (they are stored normalized); exposed so the
  /// idempotence contract is directly testable.
  const Element& normal_form() const { return *this; }

  /// Coefficient of h^k as a constant-coefficient element.
  Element h_component(int k) const;
  /// Multiplies every coefficient by h^k.
  Element shifted_by_h(int k) const;
  /// Image in the same presentation rebuilt at a lower order.
  Element truncated(const PresPtr& target) const;

  std::string str() const;

 private:
  Element(PresPtr p, Terms t) : pres_(std::move(p)), terms_(std::move(t)) {}

  PresPtr pres_;
  Terms terms_;
};

/// --- tensor-leg surgery -------------------------------------------------
/// Logical legs are contiguous id blocks; `embed_at` relocates an element
/// whose presentation matches the block starting at `offset`.
Element embed_at(const PresPtr& t, GenId offset, const Element& e);
/// Embed into tensor slot `leg` of t (slot sources must match e's pres).
Element embed_slot(const PresPtr& t, int leg, const Element& e);
/// Per-slot subwords of a word of a tensor presentation.
std::vector<Word> split_by_slots(const Presentation& t, const Word& w);
/// Splits a word of X^{otimes m} (block size s) into m subwords.
std::vector<Word> split_blocks(const Word& w, int block, int count);
/// Swap of the two halves of X tensor X (blocks of size `block`).
Element flip_halves(const Element& e, int block);

/// --- central series functions --------------------------------------------
/// Square root of 1 + h*(...) with pairwise-commuting letters; the result
/// squares back exactly in R_N.
Element central_sqrt(const Element& e);
/// Inverse of 1 + h*(...) with pairwise-commuting letters.
Element central_invert(const Element& e);

/// Deterministic listing of a presentation's rewrite rules.
std::string render_rules(const Presentation& p);

/// Flips the overall sign when the leading coefficient is "negative";
/// report witnesses are shown in this normalized orientation.
Element canonical_witness(Element e);

}  // namespace bicross

#endif
