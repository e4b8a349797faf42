#include "bicross/element.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "bicross/errors.hpp"

namespace bicross {

namespace {

void accumulate(Terms& out, Word w, Series c) {
  if (c.is_zero()) return;
  auto [it, fresh] = out.emplace(std::move(w), c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) out.erase(it);
  }
}

void check_same(const Element& a, const Element& b) {
  if (!a.valid() || !b.valid()) throw InputError("invalid element");
  if (a.pres() != b.pres())
    throw InputError("elements live in different presentations: '" +
                     a.pres()->label() + "' vs '" + b.pres()->label() + "'");
}

}  // namespace

Element Element::zero(PresPtr p) { return Element(std::move(p), {}); }

Element Element::unit(PresPtr p) {
  Terms t;
  t.emplace(Word{}, Series::one(p->series_order()));
  return Element(std::move(p), std::move(t));
}

Element Element::generator(PresPtr p, GenId g) {
  if (g >= p->size()) throw InputError("unknown generator id");
  Terms t;
  Word w;
  w.push_back(g);
  t.emplace(std::move(w), Series::one(p->series_order()));
  return Element(std::move(p), std::move(t));
}

Element Element::generator(PresPtr p, const std::string& name) {
  auto g = p->find(name);
  if (!g)
    throw InputError("unknown generator '" + name + "' in presentation '" +
                     p->label() + "'");
  return generator(std::move(p), *g);
}

Element Element::from_terms(PresPtr p, Terms raw, const rewrite::Options& opt) {
  Terms t = rewrite::normalize(*p, std::move(raw), opt);
  return Element(std::move(p), std::move(t));
}

Element Element::from_word(PresPtr p, Word w, Series coeff,
                           const rewrite::Options& opt) {
  Terms raw;
  raw.emplace(std::move(w), std::move(coeff));
  return from_terms(std::move(p), std::move(raw), opt);
}

bool Element::is_unit() const {
  return terms_.size() == 1 && terms_.begin()->first.empty() &&
         terms_.begin()->second.is_one();
}

int Element::degree() const {
  int d = -1;
  for (const auto& [w, c] : terms_) d = std::max(d, (int)w.size());
  return d;
}

Element Element::operator-() const {
  Element r(*this);
  for (auto& [w, c] : r.terms_) c = -c;
  return r;
}

Element& Element::operator+=(const Element& o) {
  check_same(*this, o);
  for (const auto& [w, c] : o.terms_) accumulate(terms_, w, c);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  check_same(*this, o);
  for (const auto& [w, c] : o.terms_) accumulate(terms_, w, -c);
  return *this;
}

Element operator*(const Element& a, const Element& b) {
  check_same(a, b);
  const Presentation& p = *a.pres_;
  Terms out;
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) {
      Series c = ca * cb;
      if (c.is_zero()) continue;
      Word w;
      w.reserve(wa.size() + wb.size());
      w.append(wa);
      w.append(wb);
      if (wa.empty() || wb.empty() || wa.back() <= wb.front()) {
        accumulate(out, std::move(w), std::move(c));
      } else {
        for (auto& [nw, nc] : rewrite::normalize_word(p, w, c))
          accumulate(out, nw, std::move(nc));
      }
    }
  }
  return Element(a.pres_, std::move(out));
}

Element operator*(const Scalar& s, Element e) {
  if (s.is_zero()) return Element::zero(e.pres_);
  for (auto& [w, c] : e.terms_) c = s * c;
  return e;
}

Element operator*(const Series& s, Element e) {
  Terms out;
  for (auto& [w, c] : e.terms_) accumulate(out, w, s * c);
  e.terms_ = std::move(out);
  return e;
}

bool operator==(const Element& a, const Element& b) {
  check_same(a, b);
  return a.terms_ == b.terms_;
}

Element Element::h_component(int k) const {
  Terms out;
  const int n = series_order();
  for (const auto& [w, c] : terms_) {
    if (c.coeff(k).is_zero()) continue;
    out.emplace(w, Series(n, c.coeff(k)));
  }
  return Element(pres_, std::move(out));
}

Element Element::shifted_by_h(int k) const {
  Terms out;
  const int n = series_order();
  for (const auto& [w, c] : terms_) {
    Series s(n);
    for (int j = 0; j + k <= n; ++j) s.set(j + k, c.coeff(j));
    if (!s.is_zero()) out.emplace(w, std::move(s));
  }
  return Element(pres_, std::move(out));
}

Element Element::truncated(const PresPtr& target) const {
  if (target->size() != pres_->size())
    throw ConfigError("truncation target has a different generator set");
  for (GenId g = 0; g < pres_->size(); ++g)
    if (target->gen(g).name != pres_->gen(g).name)
      throw ConfigError("truncation target has a different generator set");
  Terms out;
  for (const auto& [w, c] : terms_) {
    Series s = c.truncated(target->series_order());
    if (!s.is_zero()) out.emplace(w, std::move(s));
  }
  return Element(target, std::move(out));
}

// --- tensor-leg surgery -----------------------------------------------------

Element embed_at(const PresPtr& t, GenId offset, const Element& e) {
  const Presentation& src = *e.pres();
  if (offset + src.size() > t->size())
    throw InputError("embed offset out of range");
  if (t->series_order() != src.series_order())
    throw ConfigError("embedding across truncation orders");
  for (GenId g = 0; g < src.size(); ++g)
    if (t->gen((GenId)(offset + g)).display != src.gen(g).display)
      throw InputError("embed target block does not match source layout");
  Terms out;
  for (const auto& [w, c] : e.terms()) {
    Word nw = w;
    for (auto& ch : nw) ch = (unsigned char)(ch + offset);
    out.emplace(std::move(nw), c);
  }
  return Element::from_terms(t, std::move(out));
}

Element embed_slot(const PresPtr& t, int leg, const Element& e) {
  return embed_at(t, t->factor(leg).first, e);
}

std::vector<Word> split_by_slots(const Presentation& t, const Word& w) {
  std::vector<Word> out(t.factor_count());
  for (unsigned char g : w) {
    int f = t.factor_of(g);
    out[f].push_back((unsigned char)(g - t.factor(f).first));
  }
  return out;
}

std::vector<Word> split_blocks(const Word& w, int block, int count) {
  std::vector<Word> out(count);
  for (unsigned char g : w) {
    int leg = g / block;
    if (leg >= count) throw InputError("word letter outside block range");
    out[leg].push_back((unsigned char)(g - leg * block));
  }
  return out;
}

Element flip_halves(const Element& e, int block) {
  const PresPtr& t = e.pres();
  if (t->size() != 2 * block) throw InputError("flip needs two equal blocks");
  Terms out;
  for (const auto& [w, c] : e.terms()) {
    auto halves = split_blocks(w, block, 2);
    Word nw;
    nw.reserve(w.size());
    for (unsigned char g : halves[1]) nw.push_back(g);
    for (unsigned char g : halves[0]) nw.push_back((unsigned char)(g + block));
    out.emplace(std::move(nw), c);
  }
  return Element::from_terms(t, std::move(out));
}

// --- central series functions ------------------------------------------------

namespace {

void require_commuting_letters(const Element& e, const char* who) {
  const Presentation& p = *e.pres();
  std::set<unsigned char> letters;
  for (const auto& [w, c] : e.terms())
    for (unsigned char g : w) letters.insert(g);
  for (auto a : letters)
    for (auto b : letters) {
      if (a <= b) continue;
      if (p.remainder(a, b) != nullptr)
        throw InputError(std::string(who) +
                         " needs pairwise-commuting letters; " +
                         p.gen(a).name + " and " + p.gen(b).name + " do not");
    }
}

std::vector<Element> h_slices(const Element& e) {
  std::vector<Element> out;
  for (int k = 0; k <= e.series_order(); ++k)
    out.push_back(e.h_component(k));
  return out;
}

Element assemble_slices(const std::vector<Element>& r, const PresPtr& p) {
  Element out = Element::zero(p);
  for (int k = 0; k < (int)r.size(); ++k) out += r[k].shifted_by_h(k);
  return out;
}

}  // namespace

Element central_sqrt(const Element& e) {
  require_commuting_letters(e, "central_sqrt");
  auto ek = h_slices(e);
  if (!ek[0].is_unit())
    throw NotASquareRoot("central_sqrt argument must be 1 + h*(...), got " +
                         ek[0].str() + " at h^0");
  std::vector<Element> r(ek.size(), Element::zero(e.pres()));
  r[0] = Element::unit(e.pres());
  const Scalar half(Rational(1, 2));
  for (int k = 1; k < (int)r.size(); ++k) {
    Element acc = ek[k];
    for (int j = 1; j < k; ++j) acc -= r[j] * r[k - j];
    r[k] = half * acc;
  }
  return assemble_slices(r, e.pres());
}

Element central_invert(const Element& e) {
  require_commuting_letters(e, "central_invert");
  auto ek = h_slices(e);
  if (!ek[0].is_unit())
    throw NotASquareRoot("central_invert argument must be 1 + h*(...), got " +
                         ek[0].str() + " at h^0");
  std::vector<Element> r(ek.size(), Element::zero(e.pres()));
  r[0] = Element::unit(e.pres());
  for (int k = 1; k < (int)r.size(); ++k) {
    Element acc = Element::zero(e.pres());
    for (int j = 1; j <= k; ++j) acc += ek[j] * r[k - j];
    r[k] = -acc;
  }
  return assemble_slices(r, e.pres());
}

// --- rendering ----------------------------------------------------------------

namespace {

std::string slot_word_str(const Presentation& slot_src, const Word& local) {
  if (local.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < local.size(); ++i) {
    if (i) s += "*";
    s += slot_src.gen(local[i]).display;
  }
  return s;
}

std::string word_str(const Presentation& p, const Word& w) {
  if (p.factor_count() <= 1) {
    if (w.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i) s += "*";
      s += p.gen(w[i]).display;
    }
    return s;
  }
  auto slots = split_by_slots(p, w);
  std::string s;
  for (int f = 0; f < p.factor_count(); ++f) {
    if (f) s += " (x) ";
    auto src = p.factor_presentation(f);
    s += slot_word_str(*src, slots[f]);
  }
  return s;
}

std::string term_str(const Presentation& p, const Word& w, const Series& c) {
  std::string ws = word_str(p, w);
  if (c.is_one()) return ws;
  if (w.empty() && p.factor_count() <= 1) return c.compact_str();
  return c.compact_str() + "*" + ws;
}

}  // namespace

std::string Element::str() const {
  if (!valid()) return "<invalid>";
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (first) {
      s += term_str(*pres_, w, c);
      first = false;
      continue;
    }
    Series mag(c.order());
    if (c.extract_sign(mag)) {
      s += " - " + term_str(*pres_, w, mag);
    } else {
      s += " + " + term_str(*pres_, w, c);
    }
  }
  return s;
}

std::string render_rules(const Presentation& p) {
  std::ostringstream os;
  for (GenId hi = 1; hi < p.size(); ++hi)
    for (GenId lo = 0; lo < hi; ++lo) {
      if (p.factor_of(hi) != p.factor_of(lo)) continue;
      const Terms* rem = p.remainder(hi, lo);
      if (!rem) continue;
      Terms value = *rem;
      Word swapped;
      swapped.push_back(lo);
      swapped.push_back(hi);
      accumulate(value, std::move(swapped), Series::one(p.series_order()));
      Element rhs = Element::from_terms(p.shared_from_this(), std::move(value));
      os << p.gen(hi).display << "*" << p.gen(lo).display << " -> "
         << rhs.str() << "\n";
    }
  return os.str();
}

Element canonical_witness(Element e) {
  if (e.is_zero()) return e;
  if (e.terms().begin()->second.leading_negative()) return -e;
  return e;
}

}  // namespace bicross
