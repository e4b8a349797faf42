#ifndef BICROSS_REWRITE_HPP
#define BICROSS_REWRITE_HPP

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "bicross/presentation.hpp"

namespace bicross::rewrite {

/// Chooses which inversion to rewrite next; receives the word and the
/// positions p with word[p] > word[p+1], returns an index into positions.
using Strategy =
    std::function<std::size_t(const Word&, const std::vector<std::size_t>&)>;

struct Options {
  std::size_t budget = 4'000'000;  // rule applications per normalize call
  Strategy strategy;               // empty = deterministic leftmost
};

std::vector<std::size_t> inversions(const Word& w);

/// Rewrites every word to normal form and collects like terms. Throws
/// ResourceError when the step budget runs out.
Terms normalize(const Presentation& p, Terms raw, const Options& opt = {});

Terms normalize_word(const Presentation& p, const Word& w,
                     const Series& coeff, const Options& opt = {});

struct ConfluenceFailure {
  std::string witness;  // offending word
  std::string form_a;
  std::string form_b;
};

struct ConfluenceReport {
  bool confluent = true;
  int triples_checked = 0;
  int samples_checked = 0;
  std::vector<ConfluenceFailure> failures;
};

/// Diamond-lemma style diagnostics: every generator triple is reduced
/// under two opposite deterministic strategies, then `samples` random
/// words of length <= degree under two independent random strategies.
/// A clean report marks the presentation confluence-certified.
ConfluenceReport check_confluence(const PresPtr& p, int degree, int samples,
                                  std::uint64_t seed = 0xb1c4055);

}  // namespace bicross::rewrite

#endif
