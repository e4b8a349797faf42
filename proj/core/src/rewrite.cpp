#include "bicross/rewrite.hpp"

#include <algorithm>
#include <deque>

#include "bicross/element.hpp"
#include "bicross/errors.hpp"

namespace bicross::rewrite {

std::vector<std::size_t> inversions(const Word& w) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] > w[i + 1]) out.push_back(i);
  return out;
}

namespace {

void accumulate(Terms& out, Word w, Series c) {
  if (c.is_zero()) return;
  auto [it, fresh] = out.emplace(std::move(w), c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) out.erase(it);
  }
}

// Deterministic leftmost reduction with an in-place bubble walk; spawned
// remainder terms go on the worklist.
void reduce_leftmost(const Presentation& p, Word w, Series c,
                     std::vector<std::pair<Word, Series>>& work, Terms& out,
                     std::size_t& budget) {
  std::size_t i = 0;
  while (i + 1 < w.size()) {
    if (w[i] <= w[i + 1]) {
      ++i;
      continue;
    }
    if (budget == 0)
      throw ResourceError("rewrite budget exhausted at word " +
                          p.render_word(w));
    --budget;
    const Terms* rem = p.remainder(w[i], w[i + 1]);
    if (rem) {
      for (const auto& [rw, rc] : *rem) {
        Word nw;
        nw.reserve(w.size() - 2 + rw.size());
        nw.append(w, 0, i);
        nw.append(rw);
        nw.append(w, i + 2, Word::npos);
        Series nc = c * rc;
        if (!nc.is_zero()) work.emplace_back(std::move(nw), std::move(nc));
      }
    }
    std::swap(w[i], w[i + 1]);
    if (i > 0) --i;
  }
  accumulate(out, std::move(w), std::move(c));
}

void reduce_strategic(const Presentation& p, Word w, Series c,
                      const Strategy& pick,
                      std::vector<std::pair<Word, Series>>& work, Terms& out,
                      std::size_t& budget) {
  for (;;) {
    auto pos = inversions(w);
    if (pos.empty()) break;
    if (budget == 0)
      throw ResourceError("rewrite budget exhausted at word " +
                          p.render_word(w));
    --budget;
    std::size_t i = pos[pick(w, pos) % pos.size()];
    const Terms* rem = p.remainder(w[i], w[i + 1]);
    if (rem) {
      for (const auto& [rw, rc] : *rem) {
        Word nw;
        nw.reserve(w.size() - 2 + rw.size());
        nw.append(w, 0, i);
        nw.append(rw);
        nw.append(w, i + 2, Word::npos);
        Series nc = c * rc;
        if (!nc.is_zero()) work.emplace_back(std::move(nw), std::move(nc));
      }
    }
    std::swap(w[i], w[i + 1]);
  }
  accumulate(out, std::move(w), std::move(c));
}

}  // namespace

Terms normalize(const Presentation& p, Terms raw, const Options& opt) {
  for (const auto& [w, c] : raw) {
    if (c.order() != p.series_order())
      throw ConfigError("coefficient at wrong truncation order");
    for (unsigned char g : w)
      if (g >= p.size()) throw InputError("unknown generator id in word");
  }
  Terms out;
  std::size_t budget = opt.budget;
  std::vector<std::pair<Word, Series>> work;
  for (auto& [w, c] : raw) work.emplace_back(w, c);
  while (!work.empty()) {
    auto [w, c] = std::move(work.back());
    work.pop_back();
    if (c.is_zero()) continue;
    if (p.all_commuting()) {
      std::sort(w.begin(), w.end());
      accumulate(out, std::move(w), std::move(c));
    } else if (opt.strategy) {
      reduce_strategic(p, std::move(w), std::move(c), opt.strategy, work, out,
                       budget);
    } else {
      reduce_leftmost(p, std::move(w), std::move(c), work, out, budget);
    }
  }
  return out;
}

Terms normalize_word(const Presentation& p, const Word& w, const Series& coeff,
                     const Options& opt) {
  Terms raw;
  raw.emplace(w, coeff);
  return normalize(p, std::move(raw), opt);
}

namespace {

std::string render_terms_plain(const Presentation& p, const Terms& t) {
  // local lightweight rendering; full canonical form lives in Element
  if (t.empty()) return "0";
  std::string s;
  for (const auto& [w, c] : t) {
    if (!s.empty()) s += " + ";
    s += c.compact_str() + "*" + p.render_word(w);
  }
  return s;
}

}  // namespace

ConfluenceReport check_confluence(const PresPtr& p, int degree, int samples,
                                  std::uint64_t seed) {
  if (degree < 3) throw InputError("confluence check needs degree >= 3");
  ConfluenceReport rep;
  const Series one = Series::one(p->series_order());

  auto rightmost = [](const Word&, const std::vector<std::size_t>& pos) {
    return pos.size() - 1;
  };

  auto compare = [&](const Word& w, const Options& a, const Options& b) {
    Terms ta, tb;
    try {
      ta = normalize_word(*p, w, one, a);
      tb = normalize_word(*p, w, one, b);
    } catch (const ResourceError&) {
      rep.failures.push_back(
          {p->render_word(w), "<budget exhausted>", "<budget exhausted>"});
      rep.confluent = false;
      return;
    }
    if (ta != tb) {
      rep.confluent = false;
      rep.failures.push_back({p->render_word(w), render_terms_plain(*p, ta),
                              render_terms_plain(*p, tb)});
    }
  };

  // overlap ambiguities: all length-3 words, leftmost vs rightmost
  Options left{}, right{};
  right.strategy = rightmost;
  const int n = p->size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        Word w;
        w.push_back((unsigned char)a);
        w.push_back((unsigned char)b);
        w.push_back((unsigned char)c);
        ++rep.triples_checked;
        compare(w, left, right);
      }

  // random fuzzing: two independently seeded random strategies
  std::mt19937_64 word_rng(seed);
  for (int s = 0; s < samples; ++s) {
    std::uniform_int_distribution<int> len_dist(2, degree);
    std::uniform_int_distribution<int> gen_dist(0, n - 1);
    Word w;
    int len = len_dist(word_rng);
    for (int k = 0; k < len; ++k) w.push_back((unsigned char)gen_dist(word_rng));
    auto mk = [&](std::uint64_t s2) {
      auto rng = std::make_shared<std::mt19937_64>(s2);
      Options o;
      o.strategy = [rng](const Word&, const std::vector<std::size_t>& pos) {
        return (std::size_t)(*rng)() % pos.size();
      };
      return o;
    };
    ++rep.samples_checked;
    compare(w, mk(seed ^ (0x9e3779b97f4a7c15ull * (s + 1))),
            mk(seed ^ (0xc2b2ae3d27d4eb4full * (s + 7))));
  }

  if (rep.confluent && n > 0) p->mark_confluent();
  return rep;
}

}  // namespace bicross::rewrite
