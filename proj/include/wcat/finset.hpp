#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "wcat/value.hpp"

namespace wcat {

// A finite set: ordered vector of distinct Values. Copies are cheap.
class FinSet {
 public:
  FinSet();
  explicit FinSet(std::vector<Value> elems);  // sorts; throws ValidationError on dups
  static FinSet atoms(const std::vector<std::string>& names);
  static FinSet unit_set();  // {()} — the terminal object

  std::size_t size() const { return elems_->size(); }
  bool empty() const { return elems_->empty(); }
  const std::vector<Value>& elems() const { return *elems_; }
  const Value& at(std::size_t i) const { return (*elems_)[i]; }
  bool contains(const Value& v) const;
  std::uint32_t index_of(const Value& v) const;  // throws Error if absent

  friend bool operator==(const FinSet& a, const FinSet& b);
  friend bool operator!=(const FinSet& a, const FinSet& b) { return !(a == b); }
  std::string str() const;

 private:
  std::shared_ptr<const std::vector<Value>> elems_;
};

// A total function between finite sets, stored positionally.
class FinFn {
 public:
  FinFn(FinSet dom, FinSet cod, std::vector<std::uint32_t> table);
  static FinFn from_fn(FinSet dom, FinSet cod, const std::function<Value(const Value&)>& f);
  static FinFn from_pairs(FinSet dom, FinSet cod,
                          const std::vector<std::pair<Value, Value>>& pairs);
  static FinFn identity(FinSet a);
  static FinFn constant(FinSet dom, FinSet cod, const Value& v);

  const FinSet& dom() const { return dom_; }
  const FinSet& cod() const { return cod_; }
  const std::vector<std::uint32_t>& table() const { return *table_; }
  std::uint32_t apply_idx(std::uint32_t i) const { return (*table_)[i]; }
  Value operator()(const Value& v) const { return cod_.at((*table_)[dom_.index_of(v)]); }

  friend bool operator==(const FinFn& a, const FinFn& b);
  friend bool operator!=(const FinFn& a, const FinFn& b) { return !(a == b); }
  std::string str() const;

 private:
  FinSet dom_, cod_;
  std::shared_ptr<const std::vector<std::uint32_t>> table_;
};

FinFn compose(const FinFn& g, const FinFn& f);  // g after f; TypingMismatch if f.cod != g.dom
bool is_mono(const FinFn& f);
bool is_epi(const FinFn& f);
bool is_iso(const FinFn& f);
FinFn inverse(const FinFn& f);  // NotIso
FinSet image(const FinFn& f);

struct ProductResult {
  FinSet obj;
  FinFn proj1, proj2;
};
ProductResult product(const FinSet& a, const FinSet& b);

struct CoproductResult {
  FinSet obj;
  FinFn inl, inr;
};
CoproductResult coproduct(const FinSet& a, const FinSet& b);
FinFn copair(const FinFn& f, const FinFn& g, const CoproductResult& c);
bool check_disjoint(const FinSet& s, const FinFn& inl, const FinFn& inr);

struct EqualizerResult {
  FinSet obj;
  FinFn incl;
};
EqualizerResult equalizer(const FinFn& f, const FinFn& g);  // NotParallel

struct PullbackResult {
  FinSet obj;
  FinFn p1, p2;
};
PullbackResult pullback(const FinFn& f, const FinFn& g);  // CodMismatch

struct ExponentialResult {
  FinSet obj;         // all FnTables of total maps a -> b
  ProductResult dom;  // obj x a
  FinFn eval;         // obj x a -> b
};
ExponentialResult exponential(const FinSet& a, const FinSet& b);

// All maps a -> b in canonical order (earlier dom elements most significant).
std::vector<FinFn> hom(const FinSet& a, const FinSet& b);

// Subset inclusion; values must all lie in `a`.
FinFn subset_incl(const FinSet& sub, const FinSet& a);
// Factor m through a mono incl: returns u with incl . u = m (Error if impossible).
FinFn factor_through_mono(const FinFn& incl, const FinFn& m);

}  // namespace wcat
