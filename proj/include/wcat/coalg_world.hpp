#pragma once

#include "wcat/comonad.hpp"

namespace wcat {

// The category of G-coalgebras as a computation world. Finite limits are
// created from the underlying slice world (G cartesian); colimits likewise.
struct CoalgCat {
  using Obj = Coalgebra;
  using Map = CoalgMap;

  ComonadPtr G;

  CoalgCat() = default;
  explicit CoalgCat(ComonadPtr g) : G(std::move(g)) {}

  SliceCat base() const { return SliceCat(G->index()); }

  bool equal_objs(const Obj& a, const Obj& b) const { return a == b; }
  bool equal_maps(const Map& a, const Map& b) const { return a == b; }
  Map identity(const Obj& x) const { return Map(x, x, SliceMap::identity(x.carrier)); }
  Map compose(const Map& g, const Map& f) const {
    return Map(f.src, g.dst, wcat::compose(g.underlying, f.underlying));
  }
  bool is_iso(const Map& f) const { return wcat::is_iso(f.underlying); }
  bool is_mono(const Map& f) const { return wcat::is_mono(f.underlying); }
  Map inverse(const Map& f) const { return Map(f.dst, f.src, wcat::inverse(f.underlying)); }

  Obj initial() const;
  Map from_initial(const Obj& x) const;
  Obj terminal() const;  // unique coalgebra structure on the terminal family
  Map to_terminal(const Obj& x) const;

  std::pair<Obj, Map> equalizer(const Map& f, const Map& g) const;
  struct Prod {
    Obj obj;
    Map p1, p2;
  };
  Prod product(const Obj& x, const Obj& y) const;
  Map tuple(const Map& f, const Map& g, const Prod& p) const;
  struct Coprod {
    Obj obj;
    Map inl, inr;
  };
  Coprod coproduct(const Obj& x, const Obj& y) const;
  struct Pullb {
    Obj obj;
    Map p1, p2;
  };
  Pullb pullback2(const Obj& z_unused, const Map& f, const Map& g) const;
  Pullb pullback2(const Map& f, const Map& g) const;

  // Subcoalgebra spanned by a subset of the carrier; LawViolation if the
  // structure does not restrict.
  std::pair<Obj, Map> subobject(const Obj& x, const std::vector<Value>& values) const;
  std::vector<Value> map_image(const Map& m) const;
  Map factor_mono(const Map& incl, const Map& m) const;

  std::size_t card(const Obj& x) const { return x.carrier.total.size(); }
  std::vector<Map> hom(const Obj& x, const Obj& y) const;
  std::string describe(const Obj& x) const { return x.carrier.str(); }
};

template <>
inline std::string first_disagreement<CoalgCat>(const CoalgCat& w, const CoalgMap& a,
                                                const CoalgMap& b) {
  return first_disagreement(w.base(), a.underlying, b.underlying);
}

using CoalgFun = FunT<CoalgCat, CoalgCat>;
using CoalgNat = NatT<CoalgCat, CoalgCat>;
using CoalgAlgebra = AlgebraT<CoalgCat>;

// Restrict a structure map along a monic image: the unique w in G(sub) with
// G(incl)(w) = target. Returns the restricted structure for `sub`.
SliceMap restrict_structure(const Comonad& g, const Family& sub, const SliceMap& incl,
                            const Family& whole, const SliceMap& structure);

}  // namespace wcat
