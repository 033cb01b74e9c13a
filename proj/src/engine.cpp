#include "wcat/cat.hpp"
#include "wcat/comonad.hpp"

namespace wcat {

void CheckReport::merge(const CheckReport& other) {
  for (const auto& v : other.violations) violations.push_back(other.name + ": " + v);
  for (const auto& n : other.notes) notes.push_back(other.name + ": " + n);
}

std::string CheckReport::str() const {
  std::string out = name + ": " + (passed() ? "pass" : "FAIL");
  for (const auto& v : violations) out += "\n  violation: " + v;
  for (const auto& n : notes) out += "\n  note: " + n;
  return out;
}

ComonadPtr identity_comonad(FinSet index) {
  SliceCat world(std::move(index));
  auto g = std::make_shared<Comonad>();
  g->functor = identity_fun(world);
  g->functor.provenance = Provenance::identity();
  g->counit = SliceNat{g->functor, g->functor,
                       [](const Family& x) { return SliceMap::identity(x); }};
  g->comult = SliceNat{g->functor, g->functor,
                       [](const Family& x) { return SliceMap::identity(x); }};
  g->cartesian = true;
  g->is_identity = true;
  return g;
}

CheckReport check_comonad_laws(const Comonad& g, const std::vector<Family>& samples) {
  SliceCat world(g.functor.src);
  CheckReport rep;
  rep.name = "comonad laws";
  for (const auto& x : samples) {
    Family gx = g.apply(x);
    SliceMap delta = g.comult.at(x);
    SliceMap left = compose(g.counit.at(gx), delta);
    if (!(left == SliceMap::identity(gx))) {
      rep.fail("counit law eps(GX).delta(X) != id at " + x.str() + "; " +
               first_disagreement(world, left, SliceMap::identity(gx)));
    }
    SliceMap right = compose(g.apply_map(g.counit.at(x)), delta);
    if (!(right == SliceMap::identity(gx))) {
      rep.fail("counit law G(eps).delta != id at " + x.str() + "; " +
               first_disagreement(world, right, SliceMap::identity(gx)));
    }
    SliceMap coassoc_l = compose(g.comult.at(gx), delta);
    SliceMap coassoc_r = compose(g.apply_map(delta), delta);
    if (!(coassoc_l == coassoc_r)) {
      rep.fail("coassociativity fails at " + x.str() + "; " +
               first_disagreement(world, coassoc_l, coassoc_r));
    }
  }
  rep.note("checked on " + std::to_string(samples.size()) + " objects");
  return rep;
}

Coalgebra::Coalgebra(ComonadPtr comonad_, Family carrier_, SliceMap structure_)
    : comonad(std::move(comonad_)), carrier(std::move(carrier_)),
      structure(std::move(structure_)) {
  const Comonad& g = *comonad;
  if (!(structure.src == carrier) || !(structure.dst == g.apply(carrier))) {
    throw TypingMismatch("Coalgebra: structure must be carrier -> G carrier");
  }
  SliceMap counit_law = compose(g.counit.at(carrier), structure);
  if (!(counit_law == SliceMap::identity(carrier))) {
    SliceCat world(g.functor.src);
    throw LawViolation("Coalgebra: eps.alpha != id; " +
                       first_disagreement(world, counit_law, SliceMap::identity(carrier)));
  }
  SliceMap lhs = compose(g.comult.at(carrier), structure);
  SliceMap rhs = compose(g.apply_map(structure), structure);
  if (!(lhs == rhs)) {
    SliceCat world(g.functor.src);
    throw LawViolation("Coalgebra: delta.alpha != G(alpha).alpha; " +
                       first_disagreement(world, lhs, rhs));
  }
}

CoalgMap::CoalgMap(Coalgebra src_, Coalgebra dst_, SliceMap underlying_)
    : src(std::move(src_)), dst(std::move(dst_)), underlying(std::move(underlying_)) {
  if (!(underlying.src == src.carrier) || !(underlying.dst == dst.carrier)) {
    throw TypingMismatch("CoalgMap: underlying must be src carrier -> dst carrier");
  }
  SliceMap lhs = compose(dst.structure, underlying);
  SliceMap rhs = compose(src.comonad->apply_map(underlying), src.structure);
  if (!(lhs == rhs)) {
    SliceCat world(src.comonad->functor.src);
    throw NotCoalgMorphism("CoalgMap: beta.f != G(f).alpha; " +
                           first_disagreement(world, lhs, rhs));
  }
}

Coalgebra cofree(const ComonadPtr& g, const Family& x) {
  return Coalgebra(g, g->apply(x), g->comult.at(x));
}

CoalgMap cofree_map(const ComonadPtr& g, const SliceMap& m) {
  return CoalgMap(cofree(g, m.src), cofree(g, m.dst), g->apply_map(m));
}

CoalgMap forgetful_unit(const Coalgebra& a) {
  return CoalgMap(a, cofree(a.comonad, a.carrier), a.structure);
}

}  // namespace wcat
