#pragma once

#include <vector>

#include "wcat/finset.hpp"

namespace wcat {

// An object of E/I: a finite set fibered over a finite index.
struct Family {
  FinSet total;
  FinSet index;
  FinFn proj;  // total -> index

  Family(FinSet total_, FinSet index_, FinFn proj_);
  static Family empty(FinSet index);
  static Family identity(FinSet index);  // terminal object of E/I
  // total fibered by an explicit assignment
  static Family over(FinSet total, FinSet index, const std::function<Value(const Value&)>& f);

  FinSet fiber(const Value& i) const;
  std::size_t size() const { return total.size(); }

  friend bool operator==(const Family& a, const Family& b);
  friend bool operator!=(const Family& a, const Family& b) { return !(a == b); }
  std::string str() const;
};

// A morphism of E/I: a map on totals commuting over the index.
struct SliceMap {
  Family src, dst;
  FinFn map;

  SliceMap(Family src_, Family dst_, FinFn map_);
  static SliceMap identity(const Family& x);
  static SliceMap from_fn(const Family& src, const Family& dst,
                          const std::function<Value(const Value&)>& f);

  Value operator()(const Value& v) const { return map(v); }

  friend bool operator==(const SliceMap& a, const SliceMap& b);
  friend bool operator!=(const SliceMap& a, const SliceMap& b) { return !(a == b); }
  std::string str() const;
};

SliceMap compose(const SliceMap& g, const SliceMap& f);
bool is_mono(const SliceMap& f);
bool is_iso(const SliceMap& f);
SliceMap inverse(const SliceMap& f);

// --- reindexing triple  Sigma_u  -|  u*  -|  Pi_u  ---------------------------

// u* : E/I -> E/I' for u : I' -> I; elements Pair(i', x).
Family pullback_along(const FinFn& u, const Family& x);
SliceMap pullback_along_map(const FinFn& u, const SliceMap& m);

// Sigma_u : E/I' -> E/I; same total, reindexed.
Family sigma_along(const FinFn& u, const Family& x);
SliceMap sigma_along_map(const FinFn& u, const SliceMap& m);

// Pi_u : E/A -> E/B for u : A -> B; fibers are sections, elements Pair(b, table).
Family pi_along(const FinFn& u, const Family& x);
SliceMap pi_along_map(const FinFn& u, const SliceMap& m);

// Named adjunction witnesses.
SliceMap sigma_unit(const FinFn& u, const Family& x);    // X -> u* Sigma_u X
SliceMap sigma_counit(const FinFn& u, const Family& y);  // Sigma_u u* Y -> Y
SliceMap pi_unit(const FinFn& u, const Family& z);       // Z -> Pi_u u* Z
SliceMap pi_counit(const FinFn& u, const Family& x);     // u* Pi_u X -> X

// Transposes across the adjunctions.
// (u*Z -> X) to (Z -> Pi_u X)
SliceMap transpose_pi(const FinFn& u, const Family& z, const Family& x, const SliceMap& phi);
// (Z -> Pi_u X) to (u*Z -> X)
SliceMap untranspose_pi(const FinFn& u, const Family& z, const Family& x, const SliceMap& psi);
// (Sigma_u X -> Y) to (X -> u*Y)
SliceMap transpose_sigma(const FinFn& u, const Family& x, const Family& y, const SliceMap& phi);
// (X -> u*Y) to (Sigma_u X -> Y)
SliceMap untranspose_sigma(const FinFn& u, const Family& x, const Family& y, const SliceMap& psi);

// --- finite (co)limits in E/I ------------------------------------------------

struct SliceProduct {
  Family obj;
  SliceMap p1, p2;
};
SliceProduct slice_product(const Family& x, const Family& y);
SliceMap tuple_map(const SliceMap& f, const SliceMap& g, const SliceProduct& p);

struct SliceEqualizer {
  Family obj;
  SliceMap incl;
};
SliceEqualizer slice_equalizer(const SliceMap& f, const SliceMap& g);

struct SlicePullback {
  Family obj;
  SliceMap p1, p2;
};
SlicePullback slice_pullback(const SliceMap& f, const SliceMap& g);

struct SliceCoproduct {
  Family obj;
  SliceMap inl, inr;
};
SliceCoproduct slice_coproduct(const Family& x, const Family& y);
SliceMap slice_copair(const SliceMap& f, const SliceMap& g, const SliceCoproduct& c);

// All morphisms x -> y over the shared index, canonical order.
std::vector<SliceMap> slice_hom(const Family& x, const Family& y);

// Subobject spanned by a subset of the total (values must lie in x.total).
Family subfamily(const Family& x, const std::vector<Value>& elems);
SliceMap subfamily_incl(const Family& x, const std::vector<Value>& elems);
SliceMap factor_through_mono(const SliceMap& incl, const SliceMap& m);

// --- the identification (E/I)/K = E/K.total ----------------------------------

Family flatten_obj(const Family& k, const Family& x, const SliceMap& p);
struct Unflattened {
  Family obj;     // object of E/I with total = y.total
  SliceMap proj;  // obj -> k over I
};
Unflattened unflatten_obj(const Family& k, const Family& y);
// maps over K.total <-> maps over I commuting with the projections to k
SliceMap unflatten_map(const Family& k, const SliceMap& m);
SliceMap flatten_map(const Family& k, const SliceMap& m, const Family& flat_src,
                     const Family& flat_dst);

}  // namespace wcat
