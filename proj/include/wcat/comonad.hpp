#pragma once

#include <memory>

#include "wcat/cat.hpp"

namespace wcat {

// Comonad data on a slice world E/I: underlying functor, counit, comultiplication.
struct Comonad {
  SliceFun functor;
  SliceNat counit;  // G => Id
  SliceNat comult;  // G => GG
  bool cartesian = false;
  bool is_identity = false;

  const FinSet& index() const { return functor.src.index; }
  Family apply(const Family& x) const { return functor.on_obj(x); }
  SliceMap apply_map(const SliceMap& m) const { return functor.on_map(m); }
};

using ComonadPtr = std::shared_ptr<const Comonad>;

ComonadPtr identity_comonad(FinSet index);

// Laws on explicit samples; violations reported with witnesses.
CheckReport check_comonad_laws(const Comonad& g, const std::vector<Family>& samples);

// A coalgebra (A, alpha); the counit and coassociativity laws are validated
// exactly at construction.
struct Coalgebra {
  ComonadPtr comonad;
  Family carrier;
  SliceMap structure;  // carrier -> G carrier

  Coalgebra(ComonadPtr comonad_, Family carrier_, SliceMap structure_);
  std::size_t size() const { return carrier.total.size(); }

  friend bool operator==(const Coalgebra& a, const Coalgebra& b) {
    return a.carrier == b.carrier && a.structure == b.structure;
  }
  friend bool operator!=(const Coalgebra& a, const Coalgebra& b) { return !(a == b); }
};

// A morphism of coalgebras; the intertwining law is validated at construction.
struct CoalgMap {
  Coalgebra src, dst;
  SliceMap underlying;

  CoalgMap(Coalgebra src_, Coalgebra dst_, SliceMap underlying_);
  Value operator()(const Value& v) const { return underlying(v); }

  friend bool operator==(const CoalgMap& a, const CoalgMap& b) {
    return a.src == b.src && a.dst == b.dst && a.underlying == b.underlying;
  }
  friend bool operator!=(const CoalgMap& a, const CoalgMap& b) { return !(a == b); }
};

// Cofree coalgebra (GX, delta_X), right adjoint to the forgetful functor.
Coalgebra cofree(const ComonadPtr& g, const Family& x);
// Cofree on maps: G m as a coalgebra morphism F_G X -> F_G Y.
CoalgMap cofree_map(const ComonadPtr& g, const SliceMap& m);
// Unit of U -| F at a coalgebra: (A, alpha) -> F_G U (A, alpha); underlying alpha.
CoalgMap forgetful_unit(const Coalgebra& a);

}  // namespace wcat
