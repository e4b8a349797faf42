#ifndef BICROSS_PRESENTATION_HPP
#define BICROSS_PRESENTATION_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bicross/series.hpp"

namespace bicross {

/// Generator id doubles as the PBW sort key: words whose letters are
/// nondecreasing in id are the normal basis.
using GenId = unsigned char;

/// A word in the generators; the empty word is the unit 1.
using Word = std::basic_string<unsigned char>;

/// Linear combination of normal words, keyed in canonical (lexicographic)
/// order. This is the internal payload of Element and of rewrite rules.
using Terms = std::map<Word, Series>;

struct GeneratorSymbol {
  std::string name;     // unique within the presentation
  std::string display;  // per-leg name used in tensor rendering
  int sort_key = 0;     // == id
  int factor = 0;       // tensor slot
};

class Presentation;
using PresPtr = std::shared_ptr<const Presentation>;

struct FactorInfo {
  PresPtr source;  // null for a plain presentation's own slot
  GenId first = 0;
  int count = 0;
};

/// A presented algebra: ordered generators plus one solved-form rewrite
/// rule per out-of-order adjacent pair,
///     g_hi * g_lo  ->  g_lo * g_hi + remainder.
/// Immutable after finalize(); elements and morphisms hold shared_ptrs.
class Presentation : public std::enable_shared_from_this<Presentation> {
 public:
  const std::string& label() const { return label_; }
  int series_order() const { return series_order_; }
  int size() const { return (int)gens_.size(); }

  const GeneratorSymbol& gen(GenId g) const { return gens_.at(g); }
  std::optional<GenId> find(std::string_view name) const;

  /// Remainder of the rule for hi*lo (hi > lo). Returns nullptr when the
  /// pair commutes with no remainder (cross-factor pairs always do).
  const Terms* remainder(GenId hi, GenId lo) const;

  int factor_count() const { return (int)factors_.size(); }
  const FactorInfo& factor(int i) const { return factors_.at(i); }
  int factor_of(GenId g) const { return gens_.at(g).factor; }
  /// The presentation a tensor slot came from (self for a plain one).
  PresPtr factor_presentation(int i) const;

  bool all_commuting() const { return zero_remainders_; }
  bool confluence_certified() const { return confluence_certified_; }
  void mark_confluent() const { confluence_certified_ = true; }

  std::string render_word(const Word& w) const;
  /// Full rule listing `hi*lo -> ...`, one per line, deterministic.
  std::string render_rules() const;

 private:
  friend class PresentationBuilder;
  friend PresPtr tensor_product(const std::vector<PresPtr>&, std::string);

  const Terms* stored_rule(GenId hi, GenId lo) const;

  std::string label_;
  int series_order_ = 0;
  std::vector<GeneratorSymbol> gens_;
  std::map<std::string, GenId, std::less<>> by_name_;
  // dense (hi, lo) -> remainder; empty optional means "no stored rule"
  std::vector<std::optional<Terms>> rules_;
  std::vector<FactorInfo> factors_;
  bool zero_remainders_ = true;
  mutable bool confluence_certified_ = false;
};

/// Builds a plain (single-slot) presentation. Relations must be supplied
/// in solved form; out-of-solved-form input is rejected, not massaged.
class PresentationBuilder {
 public:
  PresentationBuilder(std::string label, int series_order);

  GenId add_generator(const std::string& name);
  /// hi*lo -> lo*hi + remainder (remainder given over generator names
  /// via normal words; validated against the generators added so far).
  void set_remainder(const std::string& hi, const std::string& lo,
                     Terms remainder);
  void set_commuting(const std::string& hi, const std::string& lo);

  /// Validates rule coverage and word normality, then freezes.
  PresPtr finalize();

  GenId id_of(const std::string& name) const;

 private:
  std::shared_ptr<Presentation> p_;
  std::vector<std::tuple<GenId, GenId, Terms>> pending_;
};

/// Tensor product presentation: slots commute pairwise, slot-local rules
/// are inherited. Memoized globally so repeated requests share one
/// instance (elements compare presentations by pointer).
PresPtr tensor_product(const std::vector<PresPtr>& factors,
                       std::string label = "");

/// Convenience: X^{otimes n}.
PresPtr tensor_power(const PresPtr& x, int n);

}  // namespace bicross

#endif
