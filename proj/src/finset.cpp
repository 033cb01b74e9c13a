#include "wcat/finset.hpp"

#include <algorithm>
#include <atomic>

#include "wcat/errors.hpp"

namespace wcat {

namespace {
std::atomic<std::size_t> g_budget{100000};
}

std::size_t element_budget() { return g_budget.load(); }
void set_element_budget(std::size_t n) { g_budget.store(n); }
void check_budget(std::size_t n) {
  if (n > g_budget.load()) throw BudgetExceeded(n, g_budget.load());
}

FinSet::FinSet() : elems_(std::make_shared<const std::vector<Value>>()) {}

FinSet::FinSet(std::vector<Value> elems) {
  check_budget(elems.size());
  std::sort(elems.begin(), elems.end());
  for (std::size_t i = 1; i < elems.size(); ++i) {
    if (elems[i - 1] == elems[i]) {
      throw ValidationError("FinSet: duplicate element " + elems[i].str());
    }
  }
  elems_ = std::make_shared<const std::vector<Value>>(std::move(elems));
}

FinSet FinSet::atoms(const std::vector<std::string>& names) {
  std::vector<Value> vs;
  vs.reserve(names.size());
  for (const auto& n : names) vs.push_back(Value::atom(n));
  return FinSet(std::move(vs));
}

FinSet FinSet::unit_set() { return FinSet({Value::unit()}); }

bool FinSet::contains(const Value& v) const {
  auto it = std::lower_bound(elems_->begin(), elems_->end(), v);
  return it != elems_->end() && *it == v;
}

std::uint32_t FinSet::index_of(const Value& v) const {
  auto it = std::lower_bound(elems_->begin(), elems_->end(), v);
  if (it == elems_->end() || !(*it == v)) {
    throw Error("FinSet: element not found: " + v.str());
  }
  return static_cast<std::uint32_t>(it - elems_->begin());
}

bool operator==(const FinSet& a, const FinSet& b) {
  if (a.elems_ == b.elems_) return true;
  return *a.elems_ == *b.elems_;
}

std::string FinSet::str() const {
  std::string out = "{";
  bool first = true;
  for (const auto& v : *elems_) {
    if (!first) out += ",";
    first = false;
    out += v.str();
  }
  return out + "}";
}

FinFn::FinFn(FinSet dom, FinSet cod, std::vector<std::uint32_t> table)
    : dom_(std::move(dom)), cod_(std::move(cod)) {
  if (table.size() != dom_.size()) {
    throw ValidationError("FinFn: table size " + std::to_string(table.size()) +
                          " != dom size " + std::to_string(dom_.size()));
  }
  for (auto i : table) {
    if (i >= cod_.size()) throw ValidationError("FinFn: image index out of range");
  }
  table_ = std::make_shared<const std::vector<std::uint32_t>>(std::move(table));
}

FinFn FinFn::from_fn(FinSet dom, FinSet cod, const std::function<Value(const Value&)>& f) {
  std::vector<std::uint32_t> table;
  table.reserve(dom.size());
  for (const auto& v : dom.elems()) table.push_back(cod.index_of(f(v)));
  return FinFn(std::move(dom), std::move(cod), std::move(table));
}

FinFn FinFn::from_pairs(FinSet dom, FinSet cod,
                        const std::vector<std::pair<Value, Value>>& pairs) {
  std::vector<std::uint32_t> table(dom.size(), UINT32_MAX);
  for (const auto& [k, v] : pairs) {
    auto i = dom.index_of(k);
    if (table[i] != UINT32_MAX) throw ValidationError("FinFn: duplicate mapping for " + k.str());
    table[i] = cod.index_of(v);
  }
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i] == UINT32_MAX) {
      throw ValidationError("FinFn: no mapping for " + dom.at(i).str());
    }
  }
  return FinFn(std::move(dom), std::move(cod), std::move(table));
}

FinFn FinFn::identity(FinSet a) {
  std::vector<std::uint32_t> table(a.size());
  for (std::size_t i = 0; i < table.size(); ++i) table[i] = static_cast<std::uint32_t>(i);
  FinSet cod = a;
  return FinFn(std::move(a), std::move(cod), std::move(table));
}

FinFn FinFn::constant(FinSet dom, FinSet cod, const Value& v) {
  std::vector<std::uint32_t> table(dom.size(), cod.index_of(v));
  return FinFn(std::move(dom), std::move(cod), std::move(table));
}

bool operator==(const FinFn& a, const FinFn& b) {
  if (a.dom_ != b.dom_ || a.cod_ != b.cod_) return false;
  if (a.table_ == b.table_) return true;
  return *a.table_ == *b.table_;
}

std::string FinFn::str() const {
  std::string out = "[";
  bool first = true;
  for (std::size_t i = 0; i < dom_.size(); ++i) {
    if (!first) out += ",";
    first = false;
    out += dom_.at(i).str() + "->" + cod_.at((*table_)[i]).str();
  }
  return out + "]";
}

FinFn compose(const FinFn& g, const FinFn& f) {
  if (f.cod() != g.dom()) throw TypingMismatch("compose: cod(f) != dom(g)");
  std::vector<std::uint32_t> table(f.dom().size());
  for (std::size_t i = 0; i < table.size(); ++i) {
    table[i] = g.apply_idx(f.apply_idx(static_cast<std::uint32_t>(i)));
  }
  return FinFn(f.dom(), g.cod(), std::move(table));
}

bool is_mono(const FinFn& f) {
  std::vector<bool> seen(f.cod().size(), false);
  for (auto i : f.table()) {
    if (seen[i]) return false;
    seen[i] = true;
  }
  return true;
}

bool is_epi(const FinFn& f) {
  std::vector<bool> seen(f.cod().size(), false);
  std::size_t n = 0;
  for (auto i : f.table()) {
    if (!seen[i]) {
      seen[i] = true;
      ++n;
    }
  }
  return n == f.cod().size();
}

bool is_iso(const FinFn& f) { return is_mono(f) && is_epi(f); }

FinFn inverse(const FinFn& f) {
  if (!is_iso(f)) throw NotIso("inverse: not a bijection: " + f.str());
  std::vector<std::uint32_t> table(f.cod().size());
  for (std::size_t i = 0; i < f.dom().size(); ++i) {
    table[f.apply_idx(static_cast<std::uint32_t>(i))] = static_cast<std::uint32_t>(i);
  }
  return FinFn(f.cod(), f.dom(), std::move(table));
}

FinSet image(const FinFn& f) {
  std::vector<Value> vs;
  std::vector<bool> seen(f.cod().size(), false);
  for (auto i : f.table()) {
    if (!seen[i]) {
      seen[i] = true;
      vs.push_back(f.cod().at(i));
    }
  }
  return FinSet(std::move(vs));
}

ProductResult product(const FinSet& a, const FinSet& b) {
  check_budget(a.size() * b.size());
  std::vector<Value> elems;
  std::vector<std::uint32_t> t1, t2;
  elems.reserve(a.size() * b.size());
  for (std::uint32_t i = 0; i < a.size(); ++i) {
    for (std::uint32_t j = 0; j < b.size(); ++j) {
      elems.push_back(Value::pair(a.at(i), b.at(j)));
      t1.push_back(i);
      t2.push_back(j);
    }
  }
  FinSet p(std::move(elems));
  return {p, FinFn(p, a, std::move(t1)), FinFn(p, b, std::move(t2))};
}

CoproductResult coproduct(const FinSet& a, const FinSet& b) {
  check_budget(a.size() + b.size());
  std::vector<Value> elems;
  elems.reserve(a.size() + b.size());
  for (const auto& v : a.elems()) elems.push_back(Value::tag_left(v));
  for (const auto& v : b.elems()) elems.push_back(Value::tag_right(v));
  FinSet s(std::move(elems));
  std::vector<std::uint32_t> tl(a.size()), tr(b.size());
  for (std::uint32_t i = 0; i < a.size(); ++i) tl[i] = s.index_of(Value::tag_left(a.at(i)));
  for (std::uint32_t i = 0; i < b.size(); ++i) tr[i] = s.index_of(Value::tag_right(b.at(i)));
  return {s, FinFn(a, s, std::move(tl)), FinFn(b, s, std::move(tr))};
}

FinFn copair(const FinFn& f, const FinFn& g, const CoproductResult& c) {
  if (f.cod() != g.cod()) throw TypingMismatch("copair: codomain mismatch");
  std::vector<std::uint32_t> table(c.obj.size());
  for (std::uint32_t i = 0; i < f.dom().size(); ++i) table[c.inl.apply_idx(i)] = f.apply_idx(i);
  for (std::uint32_t i = 0; i < g.dom().size(); ++i) table[c.inr.apply_idx(i)] = g.apply_idx(i);
  return FinFn(c.obj, f.cod(), std::move(table));
}

bool check_disjoint(const FinSet& s, const FinFn& inl, const FinFn& inr) {
  if (inl.cod() != s || inr.cod() != s) throw TypingMismatch("check_disjoint: bad injections");
  if (!is_mono(inl) || !is_mono(inr)) return false;
  return pullback(inl, inr).obj.empty();
}

EqualizerResult equalizer(const FinFn& f, const FinFn& g) {
  if (f.dom() != g.dom() || f.cod() != g.cod()) {
    throw NotParallel("equalizer: maps are not parallel");
  }
  std::vector<Value> elems;
  for (std::uint32_t i = 0; i < f.dom().size(); ++i) {
    if (f.apply_idx(i) == g.apply_idx(i)) elems.push_back(f.dom().at(i));
  }
  FinSet e(std::move(elems));
  return {e, subset_incl(e, f.dom())};
}

PullbackResult pullback(const FinFn& f, const FinFn& g) {
  if (f.cod() != g.cod()) throw CodMismatch("pullback: cod(f) != cod(g)");
  std::vector<Value> elems;
  std::vector<std::uint32_t> t1, t2;
  for (std::uint32_t i = 0; i < f.dom().size(); ++i) {
    for (std::uint32_t j = 0; j < g.dom().size(); ++j) {
      if (f.apply_idx(i) == g.apply_idx(j)) {
        elems.push_back(Value::pair(f.dom().at(i), g.dom().at(j)));
        t1.push_back(i);
        t2.push_back(j);
      }
    }
  }
  check_budget(elems.size());
  FinSet p(std::move(elems));
  return {p, FinFn(p, f.dom(), std::move(t1)), FinFn(p, g.dom(), std::move(t2))};
}

ExponentialResult exponential(const FinSet& a, const FinSet& b) {
  std::size_t count = 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    count *= b.size();
    check_budget(count);
    if (b.empty()) {
      count = 0;
      break;
    }
  }
  std::vector<Value> elems;
  if (a.empty()) {
    elems.push_back(Value::fn_table({}));
  } else if (!b.empty()) {
    std::vector<std::uint32_t> odom(a.size(), 0);
    while (true) {
      Value::Entries es;
      es.reserve(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) es.emplace_back(a.at(i), b.at(odom[i]));
      elems.push_back(Value::fn_table(std::move(es)));
      std::size_t k = a.size();
      while (k > 0 && odom[k - 1] + 1 == b.size()) odom[--k] = 0;
      if (k == 0) break;
      ++odom[k - 1];
    }
  }
  FinSet e(std::move(elems));
  auto dom = product(e, a);
  FinFn eval = FinFn::from_fn(dom.obj, b, [](const Value& p) {
    return p.fst().table_at(p.snd());
  });
  return {e, dom, eval};
}

std::vector<FinFn> hom(const FinSet& a, const FinSet& b) {
  std::size_t count = 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    count *= b.size();
    check_budget(count);
    if (b.empty()) break;
  }
  std::vector<FinFn> out;
  if (a.empty()) {
    out.push_back(FinFn(a, b, {}));
    return out;
  }
  if (b.empty()) return out;
  std::vector<std::uint32_t> table(a.size(), 0);
  while (true) {
    out.push_back(FinFn(a, b, table));
    std::size_t k = a.size();
    while (k > 0 && table[k - 1] + 1 == b.size()) table[--k] = 0;
    if (k == 0) break;
    ++table[k - 1];
  }
  return out;
}

FinFn subset_incl(const FinSet& sub, const FinSet& a) {
  std::vector<std::uint32_t> table;
  table.reserve(sub.size());
  for (const auto& v : sub.elems()) table.push_back(a.index_of(v));
  return FinFn(sub, a, std::move(table));
}

FinFn factor_through_mono(const FinFn& incl, const FinFn& m) {
  if (incl.cod() != m.cod()) throw TypingMismatch("factor_through_mono: codomain mismatch");
  std::vector<std::uint32_t> back(incl.cod().size(), UINT32_MAX);
  for (std::uint32_t i = 0; i < incl.dom().size(); ++i) {
    if (back[incl.apply_idx(i)] != UINT32_MAX) {
      throw TypingMismatch("factor_through_mono: incl is not monic");
    }
    back[incl.apply_idx(i)] = i;
  }
  std::vector<std::uint32_t> table(m.dom().size());
  for (std::uint32_t i = 0; i < m.dom().size(); ++i) {
    auto j = back[m.apply_idx(i)];
    if (j == UINT32_MAX) {
      throw Error("factor_through_mono: " + m.dom().at(i).str() + " maps outside the subobject");
    }
    table[i] = j;
  }
  return FinFn(m.dom(), incl.dom(), std::move(table));
}

}  // namespace wcat
