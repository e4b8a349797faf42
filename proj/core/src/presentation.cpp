#include "bicross/presentation.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "bicross/errors.hpp"

namespace bicross {

std::optional<GenId> Presentation::find(std::string_view name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

const Terms* Presentation::stored_rule(GenId hi, GenId lo) const {
  const auto& slot = rules_[(std::size_t)hi * gens_.size() + lo];
  return slot ? &*slot : nullptr;
}

const Terms* Presentation::remainder(GenId hi, GenId lo) const {
  if (hi <= lo) throw Error("remainder() wants hi > lo");
  if (gens_.at(hi).factor != gens_.at(lo).factor) return nullptr;
  const Terms* r = stored_rule(hi, lo);
  if (!r)
    throw Error("presentation '" + label_ + "' lacks a rule for " +
                gens_[hi].name + "*" + gens_[lo].name);
  return r->empty() ? nullptr : r;
}

PresPtr Presentation::factor_presentation(int i) const {
  const FactorInfo& f = factors_.at(i);
  if (f.source) return f.source;
  return shared_from_this();
}

std::string Presentation::render_word(const Word& w) const {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += "*";
    s += gens_.at(w[i]).display;
  }
  return s;
}

// ---------------------------------------------------------------------------

PresentationBuilder::PresentationBuilder(std::string label, int series_order) {
  p_ = std::shared_ptr<Presentation>(new Presentation());
  p_->label_ = std::move(label);
  p_->series_order_ = series_order;
}

GenId PresentationBuilder::add_generator(const std::string& name) {
  if (p_->gens_.size() >= 250) throw InputError("too many generators");
  if (p_->by_name_.count(name))
    throw InputError("duplicate generator name: " + name);
  GenId id = (GenId)p_->gens_.size();
  p_->gens_.push_back({name, name, (int)id, 0});
  p_->by_name_.emplace(name, id);
  return id;
}

GenId PresentationBuilder::id_of(const std::string& name) const {
  auto g = p_->find(name);
  if (!g) throw InputError("unknown generator: " + name);
  return *g;
}

void PresentationBuilder::set_remainder(const std::string& hi,
                                        const std::string& lo,
                                        Terms remainder) {
  GenId h = id_of(hi), l = id_of(lo);
  if (h <= l)
    throw InputError("relation for " + hi + "*" + lo +
                     " is not in solved form (need sort_key(hi) > "
                     "sort_key(lo))");
  for (const auto& [w, c] : remainder) {
    if (c.order() != p_->series_order_)
      throw ConfigError("rule coefficient at wrong truncation order");
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i] >= p_->gens_.size()) throw InputError("unknown generator id");
      if (i && w[i - 1] > w[i])
        throw InputError("rule remainder contains a non-normal word");
    }
  }
  pending_.emplace_back(h, l, std::move(remainder));
}

void PresentationBuilder::set_commuting(const std::string& hi,
                                        const std::string& lo) {
  set_remainder(hi, lo, Terms{});
}

PresPtr PresentationBuilder::finalize() {
  const std::size_t n = p_->gens_.size();
  p_->rules_.assign(n * n, std::nullopt);
  for (auto& [h, l, t] : pending_) {
    auto& slot = p_->rules_[(std::size_t)h * n + l];
    if (slot)
      throw InputError("duplicate rule for " + p_->gens_[h].name + "*" +
                       p_->gens_[l].name);
    if (!t.empty()) p_->zero_remainders_ = false;
    slot = std::move(t);
  }
  pending_.clear();
  for (GenId h = 1; h < n; ++h)
    for (GenId l = 0; l < h; ++l)
      if (!p_->rules_[(std::size_t)h * n + l])
        throw InputError("presentation '" + p_->label_ + "' misses a rule for " +
                         p_->gens_[h].name + "*" + p_->gens_[l].name);
  p_->factors_.push_back(FactorInfo{nullptr, 0, (int)n});
  return p_;
}

// ---------------------------------------------------------------------------

namespace {

std::mutex g_tensor_mutex;
std::map<std::vector<const Presentation*>, std::weak_ptr<const Presentation>>
    g_tensor_cache;

}  // namespace

PresPtr tensor_product(const std::vector<PresPtr>& factors,
                       std::string label) {
  if (factors.empty()) throw InputError("tensor product needs factors");
  std::vector<const Presentation*> key;
  for (const auto& f : factors) key.push_back(f.get());

  std::lock_guard<std::mutex> lock(g_tensor_mutex);
  if (auto it = g_tensor_cache.find(key); it != g_tensor_cache.end())
    if (auto hit = it->second.lock()) return hit;

  // flatten nested tensor factors into one slot list
  std::vector<std::pair<PresPtr, const Presentation*>> slots;  // (src, owner)
  for (const auto& f : factors)
    for (int s = 0; s < f->factor_count(); ++s)
      slots.emplace_back(f->factor_presentation(s), f.get());

  auto p = std::shared_ptr<Presentation>(new Presentation());
  p->series_order_ = factors[0]->series_order();
  if (label.empty()) {
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) label += " (x) ";
      label += factors[i]->label();
    }
  }
  p->label_ = std::move(label);
  p->confluence_certified_ = true;

  std::size_t total = 0;
  for (auto& [src, owner] : slots) total += src->size();
  if (total > 250) throw InputError("tensor product too large");
  p->rules_.assign(total * total, std::nullopt);

  GenId offset = 0;
  int slot_index = 0;
  for (auto& [src, owner] : slots) {
    if (src->series_order() != p->series_order_)
      throw ConfigError("tensor factors at different truncation orders");
    if (!src->confluence_certified()) p->confluence_certified_ = false;
    if (!src->zero_remainders_) p->zero_remainders_ = false;
    p->factors_.push_back(FactorInfo{src, offset, src->size()});
    for (GenId g = 0; g < src->size(); ++g) {
      GeneratorSymbol sym = src->gen(g);
      sym.factor = slot_index;
      sym.sort_key = offset + g;
      sym.name = sym.display + "@" + std::to_string(slot_index);
      p->by_name_.emplace(sym.name, (GenId)(offset + g));
      p->gens_.push_back(std::move(sym));
    }
    for (GenId h = 1; h < src->size(); ++h)
      for (GenId l = 0; l < h; ++l) {
        const Terms* r = src->stored_rule(h, l);
        if (!r) continue;
        Terms moved;
        for (const auto& [w, c] : *r) {
          Word nw = w;
          for (auto& ch : nw) ch = (unsigned char)(ch + offset);
          moved.emplace(std::move(nw), c);
        }
        p->rules_[(std::size_t)(h + offset) * total + (l + offset)] =
            std::move(moved);
      }
    offset = (GenId)(offset + src->size());
    ++slot_index;
  }

  PresPtr frozen = p;
  g_tensor_cache[key] = frozen;
  return frozen;
}

PresPtr tensor_power(const PresPtr& x, int n) {
  return tensor_product(std::vector<PresPtr>((std::size_t)n, x));
}

}  // namespace bicross
