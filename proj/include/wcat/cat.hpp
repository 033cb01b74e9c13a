#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "wcat/errors.hpp"
#include "wcat/slice.hpp"

namespace wcat {

// Provenance of an executable functor. poly_class records membership evidence
// for a class of polynomial functors; it is set only by constructors that
// guarantee it (polynomial evaluation, composition, slicing, the concrete
// comonad families), never inferred by testing.
enum class ProvKind { Polynomial, Composite, Comonad, Semidirect, Identity, Other };

struct Provenance {
  ProvKind kind = ProvKind::Other;
  bool poly_class = false;
  static Provenance polynomial() { return {ProvKind::Polynomial, true}; }
  static Provenance composite(bool in_class) { return {ProvKind::Composite, in_class}; }
  static Provenance comonad(bool in_class) { return {ProvKind::Comonad, in_class}; }
  static Provenance semidirect() { return {ProvKind::Semidirect, true}; }
  static Provenance identity() { return {ProvKind::Identity, true}; }
  static Provenance other() { return {ProvKind::Other, false}; }
};

// The slice category E/I as a computation world.
struct SliceCat {
  using Obj = Family;
  using Map = SliceMap;

  FinSet index;

  SliceCat() = default;
  explicit SliceCat(FinSet index_) : index(std::move(index_)) {}

  bool equal_objs(const Obj& a, const Obj& b) const { return a == b; }
  bool equal_maps(const Map& a, const Map& b) const { return a == b; }
  Map identity(const Obj& x) const { return SliceMap::identity(x); }
  Map compose(const Map& g, const Map& f) const { return wcat::compose(g, f); }
  bool is_iso(const Map& f) const { return wcat::is_iso(f); }
  bool is_mono(const Map& f) const { return wcat::is_mono(f); }
  Map inverse(const Map& f) const { return wcat::inverse(f); }

  Obj initial() const { return Family::empty(index); }
  Map from_initial(const Obj& x) const {
    return SliceMap(initial(), x, FinFn(FinSet(), x.total, {}));
  }
  Obj terminal() const { return Family::identity(index); }
  Map to_terminal(const Obj& x) const {
    return SliceMap(x, terminal(), FinFn(x.total, index, x.proj.table()));
  }

  std::pair<Obj, Map> equalizer(const Map& f, const Map& g) const {
    auto eq = slice_equalizer(f, g);
    return {eq.obj, eq.incl};
  }
  struct Prod {
    Obj obj;
    Map p1, p2;
  };
  Prod product(const Obj& x, const Obj& y) const {
    auto p = slice_product(x, y);
    return {p.obj, p.p1, p.p2};
  }
  Map tuple(const Map& f, const Map& g, const Prod& p) const {
    return tuple_map(f, g, {p.obj, p.p1, p.p2});
  }
  struct Coprod {
    Obj obj;
    Map inl, inr;
  };
  Coprod coproduct(const Obj& x, const Obj& y) const {
    auto c = slice_coproduct(x, y);
    return {c.obj, c.inl, c.inr};
  }
  std::pair<Obj, Map> pullback(const Map& f, const Map& g) const {
    auto pb = slice_pullback(f, g);
    return {pb.obj, pb.p1};  // p2 recomputable; full version below
  }
  struct Pullb {
    Obj obj;
    Map p1, p2;
  };
  Pullb pullback2(const Map& f, const Map& g) const {
    auto pb = slice_pullback(f, g);
    return {pb.obj, pb.p1, pb.p2};
  }

  std::pair<Obj, Map> subobject(const Obj& x, const std::vector<Value>& values) const {
    return {subfamily(x, values), subfamily_incl(x, values)};
  }
  std::vector<Value> map_image(const Map& m) const {
    return image(m.map).elems();
  }
  Map factor_mono(const Map& incl, const Map& m) const {
    return factor_through_mono(incl, m);
  }

  std::size_t card(const Obj& x) const { return x.total.size(); }
  std::vector<Map> hom(const Obj& x, const Obj& y) const { return slice_hom(x, y); }
  std::string describe(const Obj& x) const { return x.str(); }
};

// Executable functor between worlds: object action, morphism action, flags.
template <class CS, class CD>
struct FunT {
  CS src;
  CD dst;
  std::function<typename CD::Obj(const typename CS::Obj&)> on_obj;
  std::function<typename CD::Map(const typename CS::Map&)> on_map;
  bool preserves_pullbacks = false;
  bool preserves_monos = false;
  Provenance provenance = Provenance::other();
};

using SliceFun = FunT<SliceCat, SliceCat>;

template <class C>
FunT<C, C> identity_fun(const C& world) {
  FunT<C, C> f{world, world, {}, {}, true, true, Provenance::identity()};
  f.on_obj = [](const typename C::Obj& x) { return x; };
  f.on_map = [](const typename C::Map& m) { return m; };
  return f;
}

template <class C1, class C2, class C3>
FunT<C1, C3> compose_fun(const FunT<C2, C3>& g, const FunT<C1, C2>& f) {
  FunT<C1, C3> out{f.src, g.dst, {}, {},
                   f.preserves_pullbacks && g.preserves_pullbacks,
                   f.preserves_monos && g.preserves_monos,
                   Provenance::composite(f.provenance.poly_class && g.provenance.poly_class)};
  auto fo = f.on_obj;
  auto go = g.on_obj;
  out.on_obj = [fo, go](const typename C1::Obj& x) { return go(fo(x)); };
  auto fm = f.on_map;
  auto gm = g.on_map;
  out.on_map = [fm, gm](const typename C1::Map& m) { return gm(fm(m)); };
  return out;
}

// Executable natural transformation: object |-> component map.
template <class CS, class CD>
struct NatT {
  FunT<CS, CD> src, dst;
  std::function<typename CD::Map(const typename CS::Obj&)> at;
};

using SliceNat = NatT<SliceCat, SliceCat>;

template <class C>
struct AlgebraT {
  FunT<C, C> functor;
  typename C::Obj carrier;
  typename C::Map structure;  // F carrier -> carrier
};

using SliceAlgebra = AlgebraT<SliceCat>;

struct CheckReport {
  std::string name;
  std::vector<std::string> violations;
  std::vector<std::string> notes;

  bool passed() const { return violations.empty(); }
  void fail(std::string what) { violations.push_back(std::move(what)); }
  void note(std::string what) { notes.push_back(std::move(what)); }
  void merge(const CheckReport& other);
  std::string str() const;
};

// Elementwise equality witness: first total element where two parallel maps
// disagree, rendered for reports.
template <class C>
std::string first_disagreement(const C&, const typename C::Map& a, const typename C::Map& b);

template <>
inline std::string first_disagreement<SliceCat>(const SliceCat&, const SliceMap& a,
                                                const SliceMap& b) {
  if (!(a.src == b.src)) return "sources differ";
  for (const auto& v : a.src.total.elems()) {
    if (a(v) != b(v)) {
      return "at " + v.str() + ": " + a(v).str() + " vs " + b(v).str();
    }
  }
  return "maps differ only in typing";
}

template <class CS, class CD>
CheckReport check_functor_laws(const FunT<CS, CD>& f, const std::vector<typename CS::Obj>& objs,
                               const std::vector<std::pair<typename CS::Map, typename CS::Map>>&
                                   composable) {
  CheckReport rep;
  rep.name = "functor laws";
  for (const auto& x : objs) {
    auto lhs = f.on_map(f.src.identity(x));
    auto rhs = f.dst.identity(f.on_obj(x));
    if (!f.dst.equal_maps(lhs, rhs)) {
      rep.fail("F(id) != id at object " + f.src.describe(x) + "; " +
               first_disagreement(f.dst, lhs, rhs));
    }
  }
  for (const auto& [g, h] : composable) {  // g : X -> Y, h : Y -> Z
    auto lhs = f.on_map(f.src.compose(h, g));
    auto rhs = f.dst.compose(f.on_map(h), f.on_map(g));
    if (!f.dst.equal_maps(lhs, rhs)) {
      rep.fail("F(h.g) != F(h).F(g); " + first_disagreement(f.dst, lhs, rhs));
    }
  }
  rep.note("checked on " + std::to_string(objs.size()) + " objects and " +
           std::to_string(composable.size()) + " composable pairs");
  return rep;
}

template <class CS, class CD>
CheckReport check_naturality(const NatT<CS, CD>& nat,
                             const std::vector<typename CS::Map>& maps) {
  CheckReport rep;
  rep.name = "naturality";
  for (const auto& m : maps) {
    auto lhs = nat.dst.dst.compose(nat.at(m.dst), nat.src.on_map(m));
    auto rhs = nat.dst.dst.compose(nat.dst.on_map(m), nat.at(m.src));
    if (!nat.dst.dst.equal_maps(lhs, rhs)) {
      rep.fail("square does not commute; " + first_disagreement(nat.dst.dst, lhs, rhs));
    }
  }
  rep.note("checked on " + std::to_string(maps.size()) + " maps");
  return rep;
}

}  // namespace wcat
