#include "wcat/coalg.hpp"

#include <algorithm>
#include <unordered_map>

namespace wcat {

namespace {

// Index of the joint pairing (p, q) : W -> U x V; insertion collisions mean
// the pairing is not monic, which the cartesian hypotheses rule out.
class JointIndex {
 public:
  JointIndex(const FinFn& p, const FinFn& q) : p_(p), q_(q) {
    for (std::uint32_t k = 0; k < p.dom().size(); ++k) {
      auto key = make_key(p.apply_idx(k), q.apply_idx(k));
      auto [it, inserted] = index_.emplace(key, k);
      if (!inserted) {
        throw LawViolation("joint pairing is not monic; cartesian hypothesis violated");
      }
    }
  }
  const Value& at(std::uint32_t u, std::uint32_t v, const char* what) const {
    auto it = index_.find(make_key(u, v));
    if (it == index_.end()) {
      throw LawViolation(std::string("no induced element found in ") + what);
    }
    return p_.dom().at(it->second);
  }

 private:
  static std::uint64_t make_key(std::uint32_t a, std::uint32_t b) {
    return (static_cast<std::uint64_t>(a) << 32) | b;
  }
  FinFn p_, q_;
  std::unordered_map<std::uint64_t, std::uint32_t> index_;
};

}  // namespace

// --- FinCat --------------------------------------------------------------------

FinCat::FinCat(FinSet objects, FinSet arrows, FinFn dom, FinFn cod, FinFn id,
               std::vector<std::uint32_t> comp)
    : objects_(std::move(objects)), arrows_(std::move(arrows)), dom_(std::move(dom)),
      cod_(std::move(cod)), id_(std::move(id)), comp_(std::move(comp)) {
  if (dom_.dom() != arrows_ || dom_.cod() != objects_ || cod_.dom() != arrows_ ||
      cod_.cod() != objects_) {
    throw ValidationError("FinCat: dom/cod must be arrows -> objects");
  }
  if (id_.dom() != objects_ || id_.cod() != arrows_) {
    throw ValidationError("FinCat: identity must be objects -> arrows");
  }
  if (comp_.size() != arrows_.size() * arrows_.size()) {
    throw ValidationError("FinCat: composition table has wrong size");
  }
  validate();
}

bool FinCat::composable(const Value& g, const Value& f) const {
  return dom_(g) == cod_(f);
}

Value FinCat::compose_arrows(const Value& g, const Value& f) const {
  std::uint32_t gi = arrows_.index_of(g), fi = arrows_.index_of(f);
  std::uint32_t r = comp_[gi * arrows_.size() + fi];
  if (r == UINT32_MAX) {
    throw ValidationError("FinCat: compose of non-composable pair (" + g.str() + "," +
                          f.str() + ")");
  }
  return arrows_.at(r);
}

void FinCat::validate() const {
  std::size_t n = arrows_.size();
  for (const auto& c : objects_.elems()) {
    Value e = id_(c);
    if (dom_(e) != c || cod_(e) != c) {
      throw ValidationError("FinCat: identity of " + c.str() + " is not an endo-arrow");
    }
  }
  for (std::uint32_t gi = 0; gi < n; ++gi) {
    for (std::uint32_t fi = 0; fi < n; ++fi) {
      const Value& g = arrows_.at(gi);
      const Value& f = arrows_.at(fi);
      std::uint32_t r = comp_[gi * n + fi];
      if (composable(g, f)) {
        if (r == UINT32_MAX) {
          throw ValidationError("FinCat: missing composite for triple (" + g.str() + "," +
                                f.str() + ",?)");
        }
        const Value& gf = arrows_.at(r);
        if (dom_(gf) != dom_(f) || cod_(gf) != cod_(g)) {
          throw ValidationError("FinCat: composite has wrong endpoints in triple (" +
                                g.str() + "," + f.str() + "," + gf.str() + ")");
        }
      } else if (r != UINT32_MAX) {
        throw ValidationError("FinCat: composite defined for non-composable pair (" +
                              g.str() + "," + f.str() + ")");
      }
    }
  }
  for (const auto& f : arrows_.elems()) {
    if (compose_arrows(id_(cod_(f)), f) != f) {
      throw ValidationError("FinCat: unit law fails in triple (" + id_(cod_(f)).str() + "," +
                            f.str() + "," + compose_arrows(id_(cod_(f)), f).str() + ")");
    }
    if (compose_arrows(f, id_(dom_(f))) != f) {
      throw ValidationError("FinCat: unit law fails in triple (" + f.str() + "," +
                            id_(dom_(f)).str() + "," + compose_arrows(f, id_(dom_(f))).str() +
                            ")");
    }
  }
  for (const auto& h : arrows_.elems()) {
    for (const auto& g : arrows_.elems()) {
      if (!composable(h, g)) continue;
      for (const auto& f : arrows_.elems()) {
        if (!composable(g, f)) continue;
        if (compose_arrows(h, compose_arrows(g, f)) !=
            compose_arrows(compose_arrows(h, g), f)) {
          throw ValidationError("FinCat: associativity fails on triple (" + h.str() + "," +
                                g.str() + "," + f.str() + ")");
        }
      }
    }
  }
}

FinCat FinCat::discrete(const FinSet& objects) {
  std::vector<std::string> arrow_names;
  std::vector<std::uint32_t> dom_t, cod_t, id_t;
  for (std::uint32_t i = 0; i < objects.size(); ++i) {
    dom_t.push_back(i);
    cod_t.push_back(i);
    id_t.push_back(i);
  }
  // arrows mirror the objects; reuse the same Values
  FinSet arrows = objects;
  FinFn dom(arrows, objects, dom_t), cod(arrows, objects, cod_t), id(objects, arrows, id_t);
  std::vector<std::uint32_t> comp(arrows.size() * arrows.size(), UINT32_MAX);
  for (std::uint32_t i = 0; i < arrows.size(); ++i) comp[i * arrows.size() + i] = i;
  return FinCat(objects, arrows, dom, cod, id, comp);
}

FinCat FinCat::interval() {
  return from_data({"o0", "o1"},
                   {{"id0", "o0", "o0"}, {"id1", "o1", "o1"}, {"m", "o0", "o1"}},
                   {});
}

FinCat FinCat::from_data(
    const std::vector<std::string>& objects,
    const std::vector<std::tuple<std::string, std::string, std::string>>& arrows,
    const std::vector<std::tuple<std::string, std::string, std::string>>& compose_triples) {
  FinSet objs = FinSet::atoms(objects);
  std::vector<std::string> arrow_names;
  for (const auto& [name, d, c] : arrows) arrow_names.push_back(name);
  FinSet arrs = FinSet::atoms(arrow_names);
  std::vector<std::pair<Value, Value>> dom_pairs, cod_pairs;
  for (const auto& [name, d, c] : arrows) {
    dom_pairs.emplace_back(Value::atom(name), Value::atom(d));
    cod_pairs.emplace_back(Value::atom(name), Value::atom(c));
  }
  FinFn dom = FinFn::from_pairs(arrs, objs, dom_pairs);
  FinFn cod = FinFn::from_pairs(arrs, objs, cod_pairs);
  // identities: the unique endo-arrow named id* per object, else the arrow
  // whose composites fix everything is declared via compose triples; by
  // convention identity arrows are those that appear as units, detected below
  std::vector<std::uint32_t> comp(arrs.size() * arrs.size(), UINT32_MAX);
  auto set_comp = [&](const Value& g, const Value& f, const Value& gf) {
    std::uint32_t gi = arrs.index_of(g), fi = arrs.index_of(f);
    std::uint32_t r = arrs.index_of(gf);
    std::uint32_t& slot = comp[gi * arrs.size() + fi];
    if (slot != UINT32_MAX && slot != r) {
      throw ValidationError("FinCat: conflicting composites for (" + g.str() + "," + f.str() +
                            ")");
    }
    slot = r;
  };
  for (const auto& [g, f, gf] : compose_triples) {
    set_comp(Value::atom(g), Value::atom(f), Value::atom(gf));
  }
  // identity assignment: an endo-arrow named "id..." with matching dom/cod,
  // or the unique endo-arrow on the object
  std::vector<std::uint32_t> id_t(objs.size(), UINT32_MAX);
  for (std::uint32_t oi = 0; oi < objs.size(); ++oi) {
    const Value& c = objs.at(oi);
    std::uint32_t found = UINT32_MAX;
    for (std::uint32_t ai = 0; ai < arrs.size(); ++ai) {
      if (dom.apply_idx(ai) == oi && cod.apply_idx(ai) == oi) {
        const std::string& nm = arrs.at(ai).atom_name();
        if (nm.rfind("id", 0) == 0 || found == UINT32_MAX) found = ai;
      }
    }
    if (found == UINT32_MAX) {
      throw ValidationError("FinCat: no identity candidate for object " + c.str());
    }
    id_t[oi] = found;
  }
  FinFn id(objs, arrs, id_t);
  // fill unit composites that were not listed
  for (std::uint32_t ai = 0; ai < arrs.size(); ++ai) {
    std::uint32_t ic = id.apply_idx(cod.apply_idx(ai));
    std::uint32_t idm = id.apply_idx(dom.apply_idx(ai));
    if (comp[ic * arrs.size() + ai] == UINT32_MAX) comp[ic * arrs.size() + ai] = ai;
    if (comp[ai * arrs.size() + idm] == UINT32_MAX) comp[ai * arrs.size() + idm] = ai;
  }
  return FinCat(objs, arrs, dom, cod, id, comp);
}

// --- internal diagrams ----------------------------------------------------------

ComonadPtr internal_diagram_comonad(const FinCat& c) {
  auto g = std::make_shared<Comonad>();
  SliceCat world(c.objects());
  FinFn dom = c.dom(), cod = c.cod(), id = c.id();
  FinCat cat = c;

  SliceFun functor{world, world, {}, {}, true, true, Provenance::polynomial()};
  functor.on_obj = [dom, cod](const Family& x) {
    return pi_along(dom, pullback_along(cod, x));
  };
  functor.on_map = [dom, cod](const SliceMap& m) {
    return pi_along_map(dom, pullback_along_map(cod, m));
  };
  g->functor = functor;

  g->counit = SliceNat{functor, identity_fun(world), [functor, id](const Family& x) {
                         Family gx = functor.on_obj(x);
                         return SliceMap::from_fn(gx, x, [&](const Value& v) {
                           return v.snd().table_at(id(v.fst())).snd();
                         });
                       }};
  g->comult = SliceNat{functor, compose_fun(functor, functor),
                       [functor, dom, cod, cat](const Family& x) {
                         Family gx = functor.on_obj(x);
                         Family ggx = functor.on_obj(gx);
                         return SliceMap::from_fn(gx, ggx, [&](const Value& v) {
                           const Value& cobj = v.fst();
                           const Value& tbl = v.snd();
                           Value::Entries outer;
                           for (const auto& [e, ex] : tbl.entries()) {
                             (void)ex;
                             Value d = cod(e);
                             Value::Entries inner;
                             for (const auto& arrow : cat.arrows().elems()) {
                               if (dom(arrow) == d) {
                                 Value composed = cat.compose_arrows(arrow, e);
                                 inner.emplace_back(
                                     arrow, Value::pair(arrow, tbl.table_at(composed).snd()));
                               }
                             }
                             outer.emplace_back(e,
                                                Value::pair(e, Value::pair(d, Value::fn_table(
                                                                       std::move(inner)))));
                           }
                           return Value::pair(cobj, Value::fn_table(std::move(outer)));
                         });
                       }};
  g->cartesian = true;
  g->is_identity = false;
  return g;
}

Coalgebra diagram_coalgebra(const FinCat& c, const ComonadPtr& g, const Family& x,
                            const std::function<Value(const Value&, const Value&)>& action) {
  Family gx = g->apply(x);
  FinFn dom = c.dom();
  SliceMap alpha = SliceMap::from_fn(x, gx, [&](const Value& v) {
    Value cobj = x.proj(v);
    Value::Entries tbl;
    for (const auto& arrow : c.arrows().elems()) {
      if (dom(arrow) == cobj) {
        tbl.emplace_back(arrow, Value::pair(arrow, action(arrow, v)));
      }
    }
    return Value::pair(cobj, Value::fn_table(std::move(tbl)));
  });
  return Coalgebra(g, x, alpha);
}

Value diagram_action(const Coalgebra& coalg, const Value& arrow, const Value& elem) {
  Value v = coalg.structure(elem);
  return v.snd().table_at(arrow).snd();
}

// --- gluing ----------------------------------------------------------------------

GlueSpec GlueSpec::power(std::size_t k) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < k; ++i) names.push_back("p" + std::to_string(i));
  return {Kind::Power, FinSet::atoms(names)};
}

FinSet GlueSpec::h_obj(const FinSet& x) const {
  switch (kind) {
    case Kind::Identity:
      return x;
    case Kind::ConstantTerminal:
      return FinSet::unit_set();
    case Kind::Power:
    case Kind::ExpFrom:
      return exponential(exponent, x).obj;
  }
  throw Error("GlueSpec: bad kind");
}

FinFn GlueSpec::h_map(const FinFn& m) const {
  switch (kind) {
    case Kind::Identity:
      return m;
    case Kind::ConstantTerminal:
      return FinFn::identity(FinSet::unit_set());
    case Kind::Power:
    case Kind::ExpFrom: {
      FinSet src = h_obj(m.dom()), dst = h_obj(m.cod());
      return FinFn::from_fn(src, dst, [&](const Value& tbl) {
        Value::Entries es;
        for (const auto& [k, v] : tbl.entries()) es.emplace_back(k, m(v));
        return Value::fn_table(std::move(es));
      });
    }
  }
  throw Error("GlueSpec: bad kind");
}

FinSet two_point_index() { return FinSet::atoms({"1", "2"}); }

Family pair_family(const FinSet& x1, const FinSet& x2) {
  std::vector<Value> total;
  for (const auto& v : x1.elems()) total.push_back(Value::tag_left(v));
  for (const auto& v : x2.elems()) total.push_back(Value::tag_right(v));
  FinSet t(total);
  return Family::over(t, two_point_index(), [](const Value& v) {
    return v.side() == Value::Side::Left ? Value::atom("1") : Value::atom("2");
  });
}

FinSet fiber1(const Family& x) { return x.fiber(Value::atom("1")); }
FinSet fiber2(const Family& x) { return x.fiber(Value::atom("2")); }

FinFn component1(const SliceMap& m) {
  FinSet src = fiber1(m.src), dst = fiber1(m.dst);
  return FinFn::from_fn(src, dst, [&](const Value& v) { return m(v); });
}

FinFn component2(const SliceMap& m) {
  FinSet src = fiber2(m.src), dst = fiber2(m.dst);
  return FinFn::from_fn(src, dst, [&](const Value& v) { return m(v); });
}

ComonadPtr gluing_comonad(const GlueSpec& spec) {
  auto g = std::make_shared<Comonad>();
  SliceCat world(two_point_index());
  GlueSpec h = spec;

  SliceFun functor{world, world, {}, {}, true, true, Provenance::semidirect()};
  functor.on_obj = [h](const Family& x) {
    FinSet f1 = fiber1(x), f2 = fiber2(x);
    FinSet hf1 = h.h_obj(f1);
    std::vector<Value> total;
    for (const auto& v : f1.elems()) total.push_back(Value::tag_left(v));
    for (const auto& hv : hf1.elems()) {
      for (const auto& y : f2.elems()) {
        total.push_back(Value::tag_right(Value::pair(hv, y)));
      }
    }
    check_budget(total.size());
    FinSet t(total);
    return Family::over(t, two_point_index(), [](const Value& v) {
      return v.side() == Value::Side::Left ? Value::atom("1") : Value::atom("2");
    });
  };
  auto on_obj = functor.on_obj;
  functor.on_map = [h, on_obj](const SliceMap& m) {
    Family src = on_obj(m.src), dst = on_obj(m.dst);
    FinFn h1 = h.h_map(component1(m));
    return SliceMap::from_fn(src, dst, [&](const Value& v) {
      if (v.side() == Value::Side::Left) return Value::tag_left(m(v.payload()));
      const Value& p = v.payload();
      return Value::tag_right(Value::pair(h1(p.fst()), m(p.snd())));
    });
  };
  g->functor = functor;

  g->counit = SliceNat{functor, identity_fun(world), [on_obj](const Family& x) {
                         Family gx = on_obj(x);
                         return SliceMap::from_fn(gx, x, [](const Value& v) {
                           if (v.side() == Value::Side::Left) return v.payload();
                           return v.payload().snd();
                         });
                       }};
  g->comult = SliceNat{functor, compose_fun(functor, functor), [h, on_obj](const Family& x) {
                         Family gx = on_obj(x);
                         Family ggx = on_obj(gx);
                         FinSet f1 = fiber1(x);
                         FinSet gxf1 = fiber1(gx);
                         FinFn tagl = FinFn::from_fn(
                             f1, gxf1, [](const Value& v) { return Value::tag_left(v); });
                         FinFn htagl = h.h_map(tagl);
                         return SliceMap::from_fn(gx, ggx, [&](const Value& v) {
                           if (v.side() == Value::Side::Left) {
                             return Value::tag_left(Value::tag_left(v.payload()));
                           }
                           const Value& p = v.payload();  // Pair(h, y-tagged-payload)
                           return Value::tag_right(Value::pair(htagl(p.fst()), v));
                         });
                       }};
  g->cartesian = true;
  return g;
}

Coalgebra gluing_coalgebra(const ComonadPtr& g, const GlueSpec& spec, const FinSet& x1,
                           const FinSet& x2, const FinFn& compare) {
  if (compare.dom() != x2 || compare.cod() != spec.h_obj(x1)) {
    throw TypingMismatch("gluing_coalgebra: compare must be X2 -> H X1");
  }
  Family x = pair_family(x1, x2);
  Family gx = g->apply(x);
  FinSet xf1 = fiber1(x);
  FinFn tagl = FinFn::from_fn(x1, xf1, [](const Value& v) { return Value::tag_left(v); });
  FinFn cooked = compose(spec.h_map(tagl), compare);
  SliceMap alpha = SliceMap::from_fn(x, gx, [&](const Value& v) {
    if (v.side() == Value::Side::Left) return Value::tag_left(v);
    return Value::tag_right(Value::pair(cooked(v.payload()), v));
  });
  return Coalgebra(g, x, alpha);
}

FinFn gluing_compare(const GlueSpec& spec, const Coalgebra& coalg) {
  // inverse of gluing_coalgebra: expects a carrier built by pair_family
  std::vector<Value> raw1, raw2;
  FinSet f1 = fiber1(coalg.carrier), f2 = fiber2(coalg.carrier);
  for (const auto& v : f1.elems()) raw1.push_back(v.payload());
  for (const auto& v : f2.elems()) raw2.push_back(v.payload());
  FinSet x1(raw1), x2(raw2);
  return FinFn::from_fn(x2, spec.h_obj(x1), [&](const Value& y) {
    Value h = coalg.structure(Value::tag_right(y)).payload().fst();
    switch (spec.kind) {
      case GlueSpec::Kind::Identity:
        return h.payload();
      case GlueSpec::Kind::ConstantTerminal:
        return h;
      default: {
        Value::Entries es;
        for (const auto& [k, v] : h.entries()) es.emplace_back(k, v.payload());
        return Value::fn_table(std::move(es));
      }
    }
  });
}

// --- slice comonads -----------------------------------------------------------

ComonadPtr slice_comonad(const ComonadPtr& g, const Coalgebra& a) {
  if (g->is_identity) return identity_comonad(a.carrier.total);
  if (!g->cartesian) throw FlagMissing("slice_comonad: ambient comonad must be cartesian");
  auto out = std::make_shared<Comonad>();
  SliceCat world(a.carrier.total);
  ComonadPtr G = g;
  Family A = a.carrier;
  SliceMap alpha = a.structure;

  SliceFun functor{world, world, {}, {}, true, true,
                   Provenance::comonad(g->functor.provenance.poly_class)};
  functor.on_obj = [G, A, alpha](const Family& y) {
    auto un = unflatten_obj(A, y);
    SliceMap gp = G->apply_map(un.proj);
    auto pb = slice_pullback(alpha, gp);
    return Family(pb.obj.total, A.total,
                  FinFn::from_fn(pb.obj.total, A.total, [](const Value& v) { return v.fst(); }));
  };
  auto on_obj = functor.on_obj;
  functor.on_map = [G, A, on_obj](const SliceMap& m) {
    SliceMap gm = G->apply_map(unflatten_map(A, m));
    Family src = on_obj(m.src), dst = on_obj(m.dst);
    return SliceMap::from_fn(src, dst, [&](const Value& v) {
      return Value::pair(v.fst(), gm(v.snd()));
    });
  };
  out->functor = functor;

  out->counit = SliceNat{functor, identity_fun(world), [G, A, on_obj](const Family& y) {
                           auto un = unflatten_obj(A, y);
                           SliceMap eps = G->counit.at(un.obj);
                           Family src = on_obj(y);
                           return SliceMap::from_fn(src, y, [&](const Value& v) {
                             return eps(v.snd());
                           });
                         }};
  out->comult = SliceNat{functor, compose_fun(functor, functor),
                         [G, A, alpha, on_obj](const Family& y) {
                           auto un = unflatten_obj(A, y);
                           Family gay = on_obj(y);
                           auto unz = unflatten_obj(A, gay);
                           Family gx = G->apply(un.obj);
                           SliceMap r = SliceMap::from_fn(unz.obj, gx, [](const Value& v) {
                             return v.snd();
                           });
                           SliceMap gq = G->apply_map(unz.proj);
                           SliceMap gr = G->apply_map(r);
                           SliceMap delta = G->comult.at(un.obj);
                           Family dst = on_obj(gay);
                           JointIndex joint(gq.map, gr.map);
                           Family ga = G->apply(A);
                           return SliceMap::from_fn(gay, dst, [&](const Value& v) {
                             std::uint32_t ai = ga.total.index_of(alpha(v.fst()));
                             std::uint32_t di = delta.dst.total.index_of(delta(v.snd()));
                             return Value::pair(v.fst(),
                                                joint.at(ai, di, "slice comonad comult"));
                           });
                         }};
  out->cartesian = true;
  return out;
}

Coalgebra to_slice_coalgebra(const ComonadPtr& g_alpha, const Coalgebra& a, const CoalgMap& p) {
  if (!(p.dst == a)) throw TypingMismatch("to_slice_coalgebra: p must land in (A, alpha)");
  Family flat = flatten_obj(a.carrier, p.src.carrier, p.underlying);
  if (g_alpha->is_identity) {
    return Coalgebra(g_alpha, flat, SliceMap::identity(flat));
  }
  Family dst = g_alpha->apply(flat);
  SliceMap xi = p.src.structure;
  SliceMap alpha = SliceMap::from_fn(flat, dst, [&](const Value& v) {
    return Value::pair(p(v), xi(v));
  });
  return Coalgebra(g_alpha, flat, alpha);
}

OverCoalgebra from_slice_coalgebra(const ComonadPtr& g, const Coalgebra& a, const Coalgebra& y) {
  auto un = unflatten_obj(a.carrier, y.carrier);
  SliceMap xi = [&]() {
    if (g->is_identity) return SliceMap::identity(un.obj);
    Family gx = g->apply(un.obj);
    return SliceMap::from_fn(un.obj, gx, [&](const Value& v) {
      return y.structure(v).snd();
    });
  }();
  Coalgebra x(g, un.obj, xi);
  CoalgMap p(x, a, un.proj);
  return {x, p};
}

SliceMap canonical_theta_at(const CoalgMap& f, const ComonadPtr& g_alpha,
                            const ComonadPtr& g_beta, const Family& y) {
  const ComonadPtr& G = f.src.comonad;
  FinFn u = f.underlying.map;
  Family fy = pullback_along(u, y);
  if (G->is_identity) return SliceMap::identity(fy);
  Family A = f.src.carrier, B = f.dst.carrier;
  auto un_fy = unflatten_obj(A, fy);
  auto un_y = unflatten_obj(B, y);
  SliceMap snd = SliceMap::from_fn(un_fy.obj, un_y.obj, [](const Value& v) { return v.snd(); });
  SliceMap gsnd = G->apply_map(snd);
  Family src = g_alpha->apply(fy);
  Family dst = pullback_along(u, g_beta->apply(y));
  return SliceMap::from_fn(src, dst, [&](const Value& v) {
    const Value& a = v.fst();
    return Value::pair(a, Value::pair(f.underlying(a), gsnd(v.snd())));
  });
}

SliceMap canonical_theta_inv_at(const CoalgMap& f, const ComonadPtr& g_alpha,
                                const ComonadPtr& g_beta, const Family& y) {
  const ComonadPtr& G = f.src.comonad;
  FinFn u = f.underlying.map;
  Family fy = pullback_along(u, y);
  if (G->is_identity) return SliceMap::identity(fy);
  Family A = f.src.carrier, B = f.dst.carrier;
  auto un_fy = unflatten_obj(A, fy);
  auto un_y = unflatten_obj(B, y);
  SliceMap snd = SliceMap::from_fn(un_fy.obj, un_y.obj, [](const Value& v) { return v.snd(); });
  SliceMap gsnd = G->apply_map(snd);
  SliceMap gpi = G->apply_map(un_fy.proj);
  SliceMap alpha = f.src.structure;
  Family src = pullback_along(u, g_beta->apply(y));
  Family dst = g_alpha->apply(fy);
  JointIndex joint(gpi.map, gsnd.map);
  Family ga = G->apply(A);
  Family gy = G->apply(un_y.obj);
  return SliceMap::from_fn(src, dst, [&](const Value& v) {
    const Value& a = v.fst();
    const Value& z = v.snd().snd();
    std::uint32_t ai = ga.total.index_of(alpha(a));
    std::uint32_t zi = gy.total.index_of(z);
    return Value::pair(a, joint.at(ai, zi, "canonical theta inverse"));
  });
}

SliceMap pushforward_mate_at(const CoalgMap& f, const ComonadPtr& g_alpha,
                             const ComonadPtr& g_beta, const Family& x) {
  FinFn u = f.underlying.map;
  Family pix = pi_along(u, x);
  Family gb_pix = g_beta->apply(pix);
  SliceMap eta = pi_unit(u, gb_pix);
  SliceMap lam = canonical_theta_inv_at(f, g_alpha, g_beta, pix);
  SliceMap step2 = pi_along_map(u, lam);
  SliceMap eps = pi_counit(u, x);
  SliceMap step3 = pi_along_map(u, g_alpha->apply_map(eps));
  return compose(step3, compose(step2, eta));
}

PushforwardResult pushforward_coalg(const CoalgMap& f, const ComonadPtr& g_alpha,
                                    const ComonadPtr& g_beta, const Coalgebra& x) {
  FinFn u = f.underlying.map;
  const Family& X = x.carrier;
  Family pix = pi_along(u, X);
  Family gax = g_alpha->apply(X);
  Family pigax = pi_along(u, gax);

  SliceMap sigma = pushforward_mate_at(f, g_alpha, g_beta, X);
  SliceMap phi1_u = compose(g_beta->apply_map(sigma), g_beta->comult.at(pix));
  SliceMap phi2_u = g_beta->apply_map(pi_along_map(u, x.structure));
  Coalgebra src = cofree(g_beta, pix);
  Coalgebra dst = cofree(g_beta, pigax);
  CoalgMap phi1(src, dst, phi1_u);
  CoalgMap phi2(src, dst, phi2_u);
  SliceMap retr_u = g_beta->apply_map(pi_along_map(u, g_alpha->counit.at(X)));
  CoalgMap retraction(dst, src, retr_u);

  SliceMap id_on_cofree = SliceMap::identity(src.carrier);
  bool coreflexive = compose(retr_u, phi1_u) == id_on_cofree &&
                     compose(retr_u, phi2_u) == id_on_cofree;
  CoalgCat world(g_beta);
  auto [obj, incl] = world.equalizer(phi1, phi2);
  return {obj, incl, phi1, phi2, retraction, coreflexive};
}

CoalgMap pushforward_coalg_map(const CoalgMap& f, const ComonadPtr& g_alpha,
                               const ComonadPtr& g_beta, const CoalgMap& m) {
  FinFn u = f.underlying.map;
  auto push_src = pushforward_coalg(f, g_alpha, g_beta, m.src);
  auto push_dst = pushforward_coalg(f, g_alpha, g_beta, m.dst);
  CoalgMap big = cofree_map(g_beta, pi_along_map(u, m.underlying));
  CoalgCat world(g_beta);
  CoalgMap into = world.compose(big, push_src.incl);
  return world.factor_mono(push_dst.incl, into);
}

Coalgebra coalg_pullback_along(const CoalgMap& h, const ComonadPtr& g_alpha,
                               const ComonadPtr& g_iota, const Coalgebra& x) {
  FinFn u = h.underlying.map;
  Family hx = pullback_along(u, x.carrier);
  SliceMap structure = compose(canonical_theta_inv_at(h, g_alpha, g_iota, x.carrier),
                               pullback_along_map(u, x.structure));
  return Coalgebra(g_alpha, hx, structure);
}

CoalgMap coalg_pullback_along_map(const CoalgMap& h, const ComonadPtr& g_alpha,
                                  const ComonadPtr& g_iota, const CoalgMap& m) {
  return CoalgMap(coalg_pullback_along(h, g_alpha, g_iota, m.src),
                  coalg_pullback_along(h, g_alpha, g_iota, m.dst),
                  pullback_along_map(h.underlying.map, m.underlying));
}

Coalgebra coalg_sigma_along(const CoalgMap& f, const ComonadPtr& g_beta,
                            const ComonadPtr& g_iota, const Coalgebra& y) {
  (void)g_beta;
  FinFn u = f.underlying.map;
  Family sy = sigma_along(u, y.carrier);
  if (g_iota->is_identity) {
    return Coalgebra(g_iota, sy, SliceMap::identity(sy));
  }
  Family dst = g_iota->apply(sy);
  SliceMap structure = SliceMap::from_fn(sy, dst, [&](const Value& v) {
    Value bw = y.structure(v);
    return Value::pair(f.underlying(bw.fst()), bw.snd());
  });
  return Coalgebra(g_iota, sy, structure);
}

CoalgMap coalg_sigma_along_map(const CoalgMap& f, const ComonadPtr& g_beta,
                               const ComonadPtr& g_iota, const CoalgMap& m) {
  return CoalgMap(coalg_sigma_along(f, g_beta, g_iota, m.src),
                  coalg_sigma_along(f, g_beta, g_iota, m.dst),
                  sigma_along_map(f.underlying.map, m.underlying));
}

SliceFun one_plus_functor(const FinSet& index) {
  SliceCat world(index);
  Family one = Family::identity(index);
  SliceFun out{world, world, {}, {}, true, true, Provenance::composite(true)};
  out.on_obj = [one](const Family& x) { return slice_coproduct(one, x).obj; };
  auto on_obj = out.on_obj;
  out.on_map = [on_obj](const SliceMap& m) {
    Family src = on_obj(m.src), dst = on_obj(m.dst);
    return SliceMap::from_fn(src, dst, [&](const Value& v) {
      if (v.side() == Value::Side::Left) return v;
      return Value::tag_right(m(v.payload()));
    });
  };
  return out;
}

OplaxMorphism one_plus_oplax(const ComonadPtr& g) {
  SliceFun s = one_plus_functor(g->index());
  Coalgebra one = coalg_terminal(g);
  ComonadPtr gp = g;
  auto s_obj = s.on_obj;
  SliceNat sigma{compose_fun(s, g->functor), compose_fun(g->functor, s),
                 [gp, s_obj, one](const Family& x) {
                   Family sx = s_obj(x);
                   Family gx = gp->apply(x);
                   Family src = s_obj(gx);
                   Family dst = gp->apply(sx);
                   auto c = slice_coproduct(one.carrier, x);
                   SliceMap ginl = gp->apply_map(c.inl);
                   SliceMap ginr = gp->apply_map(c.inr);
                   return SliceMap::from_fn(src, dst, [&](const Value& v) {
                     if (v.side() == Value::Side::Left) {
                       return ginl(one.structure(v.payload()));
                     }
                     return ginr(v.payload());
                   });
                 }};
  return OplaxMorphism{g, g, s, sigma};
}

CoalgCat::Prod coalg_product(const ComonadPtr& g, const Coalgebra& x, const Coalgebra& y) {
  return CoalgCat(g).product(x, y);
}

std::pair<Coalgebra, CoalgMap> coalg_equalizer(const ComonadPtr& g, const CoalgMap& f,
                                               const CoalgMap& h) {
  return CoalgCat(g).equalizer(f, h);
}

CoalgCat::Coprod coalg_coproduct(const ComonadPtr& g, const Coalgebra& x, const Coalgebra& y) {
  return CoalgCat(g).coproduct(x, y);
}

Coalgebra coalg_terminal(const ComonadPtr& g) { return CoalgCat(g).terminal(); }

bool coalg_one_plus_one_disjoint(const ComonadPtr& g) {
  CoalgCat world(g);
  Coalgebra one = world.terminal();
  auto c = world.coproduct(one, one);
  if (!world.is_mono(c.inl) || !world.is_mono(c.inr)) return false;
  auto pb = world.pullback2(c.inl, c.inr);
  return world.card(pb.obj) == 0;
}

}  // namespace wcat
