#include "wcat/coalg_world.hpp"

#include <algorithm>

namespace wcat {

namespace {

// For monic m, a partial inverse on indices of m.cod (UINT32_MAX off-image).
std::vector<std::uint32_t> mono_inverse_index(const FinFn& m) {
  std::vector<std::uint32_t> back(m.cod().size(), UINT32_MAX);
  for (std::uint32_t i = 0; i < m.dom().size(); ++i) {
    if (back[m.apply_idx(i)] != UINT32_MAX) {
      throw LawViolation("expected a monomorphism while inducing coalgebra structure");
    }
    back[m.apply_idx(i)] = i;
  }
  return back;
}

}  // namespace

SliceMap restrict_structure(const Comonad& g, const Family& sub, const SliceMap& incl,
                            const Family& whole, const SliceMap& structure) {
  Family gsub = g.apply(sub);
  SliceMap gincl = g.apply_map(incl);
  auto back = mono_inverse_index(gincl.map);
  std::vector<std::uint32_t> table(sub.total.size());
  for (std::uint32_t i = 0; i < sub.total.size(); ++i) {
    std::uint32_t w = whole.total.index_of(incl(sub.total.at(i)));
    std::uint32_t target = structure.map.apply_idx(w);
    std::uint32_t j = back[target];
    if (j == UINT32_MAX) {
      throw LawViolation("structure does not restrict to the subobject at " +
                         sub.total.at(i).str());
    }
    table[i] = j;
  }
  return SliceMap(sub, gsub, FinFn(sub.total, gsub.total, std::move(table)));
}

CoalgCat::Obj CoalgCat::initial() const {
  Family e = Family::empty(G->index());
  Family ge = G->apply(e);
  return Coalgebra(G, e, SliceMap(e, ge, FinFn(FinSet(), ge.total, {})));
}

CoalgCat::Map CoalgCat::from_initial(const Obj& x) const {
  Obj init = initial();
  return Map(init, x, SliceMap(init.carrier, x.carrier, FinFn(FinSet(), x.carrier.total, {})));
}

CoalgCat::Obj CoalgCat::terminal() const {
  SliceCat down = base();
  Family one = down.terminal();
  Family gone = G->apply(one);
  std::vector<Coalgebra> found;
  for (const auto& t : slice_hom(one, gone)) {
    SliceMap coassoc_l = wcat::compose(G->comult.at(one), t);
    SliceMap coassoc_r = wcat::compose(G->apply_map(t), t);
    SliceMap counit = wcat::compose(G->counit.at(one), t);
    if (coassoc_l == coassoc_r && counit == SliceMap::identity(one)) {
      found.emplace_back(G, one, t);
    }
  }
  if (found.size() != 1) {
    throw LawViolation("terminal coalgebra: expected exactly one structure on 1, found " +
                       std::to_string(found.size()));
  }
  return found.front();
}

CoalgCat::Map CoalgCat::to_terminal(const Obj& x) const {
  Obj one = terminal();
  SliceMap bang(x.carrier, one.carrier,
                FinFn(x.carrier.total, one.carrier.total, x.carrier.proj.table()));
  return Map(x, one, bang);
}

std::pair<CoalgCat::Obj, CoalgCat::Map> CoalgCat::equalizer(const Map& f, const Map& g) const {
  auto eq = slice_equalizer(f.underlying, g.underlying);
  SliceMap structure =
      restrict_structure(*G, eq.obj, eq.incl, f.src.carrier, f.src.structure);
  Obj e(G, eq.obj, structure);
  return {e, Map(e, f.src, eq.incl)};
}

CoalgCat::Prod CoalgCat::product(const Obj& x, const Obj& y) const {
  auto p = slice_product(x.carrier, y.carrier);
  Family gp = G->apply(p.obj);
  SliceMap gp1 = G->apply_map(p.p1);
  SliceMap gp2 = G->apply_map(p.p2);
  // G preserves products: pair (alpha(p1 v), beta(p2 v)) has a unique preimage
  std::vector<std::vector<std::uint32_t>> idx(G->apply(x.carrier).total.size());
  for (std::uint32_t k = 0; k < gp.total.size(); ++k) {
    idx[gp1.map.apply_idx(k)].push_back(k);
  }
  std::vector<std::uint32_t> table(p.obj.total.size());
  for (std::uint32_t v = 0; v < p.obj.total.size(); ++v) {
    std::uint32_t a = x.structure.map.apply_idx(p.p1.map.apply_idx(v));
    std::uint32_t b = y.structure.map.apply_idx(p.p2.map.apply_idx(v));
    std::uint32_t found = UINT32_MAX;
    for (auto k : idx[a]) {
      if (gp2.map.apply_idx(k) == b) {
        if (found != UINT32_MAX) {
          throw LawViolation("product of coalgebras: induced structure not unique");
        }
        found = k;
      }
    }
    if (found == UINT32_MAX) {
      throw LawViolation("product of coalgebras: no induced structure at " +
                         p.obj.total.at(v).str());
    }
    table[v] = found;
  }
  Obj obj(G, p.obj, SliceMap(p.obj, gp, FinFn(p.obj.total, gp.total, std::move(table))));
  return {obj, Map(obj, x, p.p1), Map(obj, y, p.p2)};
}

CoalgCat::Map CoalgCat::tuple(const Map& f, const Map& g, const Prod& p) const {
  SliceMap underlying = tuple_map(f.underlying, g.underlying,
                                  {p.obj.carrier, p.p1.underlying, p.p2.underlying});
  return Map(f.src, p.obj, underlying);
}

CoalgCat::Coprod CoalgCat::coproduct(const Obj& x, const Obj& y) const {
  auto c = slice_coproduct(x.carrier, y.carrier);
  SliceMap ginl = G->apply_map(c.inl);
  SliceMap ginr = G->apply_map(c.inr);
  SliceMap structure = slice_copair(wcat::compose(ginl, x.structure), wcat::compose(ginr, y.structure),
                                    {c.obj, c.inl, c.inr});
  Obj obj(G, c.obj, structure);
  return {obj, Map(x, obj, c.inl), Map(y, obj, c.inr)};
}

CoalgCat::Pullb CoalgCat::pullback2(const Map& f, const Map& g) const {
  auto pb = slice_pullback(f.underlying, g.underlying);
  Family gp = G->apply(pb.obj);
  SliceMap gp1 = G->apply_map(pb.p1);
  SliceMap gp2 = G->apply_map(pb.p2);
  std::vector<std::vector<std::uint32_t>> idx(G->apply(f.src.carrier).total.size());
  for (std::uint32_t k = 0; k < gp.total.size(); ++k) {
    idx[gp1.map.apply_idx(k)].push_back(k);
  }
  std::vector<std::uint32_t> table(pb.obj.total.size());
  for (std::uint32_t v = 0; v < pb.obj.total.size(); ++v) {
    std::uint32_t a = f.src.structure.map.apply_idx(pb.p1.map.apply_idx(v));
    std::uint32_t b = g.src.structure.map.apply_idx(pb.p2.map.apply_idx(v));
    std::uint32_t found = UINT32_MAX;
    for (auto k : idx[a]) {
      if (gp2.map.apply_idx(k) == b) {
        if (found != UINT32_MAX) {
          throw LawViolation("pullback of coalgebras: induced structure not unique");
        }
        found = k;
      }
    }
    if (found == UINT32_MAX) {
      throw LawViolation("pullback of coalgebras: no induced structure at " +
                         pb.obj.total.at(v).str());
    }
    table[v] = found;
  }
  Obj obj(G, pb.obj, SliceMap(pb.obj, gp, FinFn(pb.obj.total, gp.total, std::move(table))));
  return {obj, Map(obj, f.src, pb.p1), Map(obj, g.src, pb.p2)};
}

CoalgCat::Pullb CoalgCat::pullback2(const Obj&, const Map& f, const Map& g) const {
  return pullback2(f, g);
}

std::pair<CoalgCat::Obj, CoalgCat::Map> CoalgCat::subobject(
    const Obj& x, const std::vector<Value>& values) const {
  Family sub = subfamily(x.carrier, values);
  SliceMap incl = subfamily_incl(x.carrier, values);
  SliceMap structure = restrict_structure(*G, sub, incl, x.carrier, x.structure);
  Obj obj(G, sub, structure);
  return {obj, Map(obj, x, incl)};
}

std::vector<Value> CoalgCat::map_image(const Map& m) const {
  return image(m.underlying.map).elems();
}

CoalgCat::Map CoalgCat::factor_mono(const Map& incl, const Map& m) const {
  return Map(m.src, incl.src, factor_through_mono(incl.underlying, m.underlying));
}

std::vector<CoalgCat::Map> CoalgCat::hom(const Obj& x, const Obj& y) const {
  std::vector<Map> out;
  for (const auto& m : slice_hom(x.carrier, y.carrier)) {
    SliceMap lhs = wcat::compose(y.structure, m);
    SliceMap rhs = wcat::compose(G->apply_map(m), x.structure);
    if (lhs == rhs) out.emplace_back(x, y, m);
  }
  return out;
}

}  // namespace wcat
