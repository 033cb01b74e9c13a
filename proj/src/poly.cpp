#include "wcat/poly.hpp"

namespace wcat {

Polynomial::Polynomial(FinFn h_, FinFn g_, FinFn f_)
    : h(std::move(h_)), g(std::move(g_)), f(std::move(f_)) {
  if (h.dom() != g.dom()) throw TypingMismatch("Polynomial: h and g must share A");
  if (g.cod() != f.dom()) throw TypingMismatch("Polynomial: g and f must share B");
}

Polynomial Polynomial::identity(const FinSet& i) {
  FinFn id = FinFn::identity(i);
  return Polynomial(id, id, id);
}

Polynomial Polynomial::nno() {
  FinSet one = FinSet::unit_set();
  auto zero_plus_one = coproduct(FinSet(), one);
  auto one_plus_one = coproduct(one, one);
  FinFn h = FinFn::constant(zero_plus_one.obj, one, Value::unit());
  FinFn g = FinFn::from_fn(zero_plus_one.obj, one_plus_one.obj, [](const Value& v) {
    return v;  // 0+1 includes into 1+1 on the right summand
  });
  FinFn f = FinFn::constant(one_plus_one.obj, one, Value::unit());
  return Polynomial(h, g, f);
}

Family eval_poly_obj(const Polynomial& p, const Family& x) {
  if (x.index != p.I()) throw TypingMismatch("eval_poly: family not over I");
  return sigma_along(p.f, pi_along(p.g, pullback_along(p.h, x)));
}

SliceMap eval_poly_map(const Polynomial& p, const SliceMap& m) {
  return sigma_along_map(p.f, pi_along_map(p.g, pullback_along_map(p.h, m)));
}

SliceFun eval_poly(const Polynomial& p) {
  SliceCat src(p.I()), dst(p.J());
  SliceFun out{src, dst, {}, {}, true, true, Provenance::polynomial()};
  out.on_obj = [p](const Family& x) { return eval_poly_obj(p, x); };
  out.on_map = [p](const SliceMap& m) { return eval_poly_map(p, m); };
  return out;
}

CheckReport check_nat_iso(const NatIso& iso, const std::vector<Family>& objs,
                          const std::vector<SliceMap>& maps) {
  CheckReport rep;
  rep.name = "natural isomorphism";
  for (const auto& x : objs) {
    SliceMap f = iso.fwd.at(x);
    SliceMap b = iso.bwd.at(x);
    if (!(compose(b, f) == SliceMap::identity(f.src)) ||
        !(compose(f, b) == SliceMap::identity(b.src))) {
      rep.fail("components not mutually inverse at " + x.str());
    }
  }
  rep.merge(check_naturality(iso.fwd, maps));
  rep.merge(check_naturality(iso.bwd, maps));
  return rep;
}

ComposedPoly compose_poly(const Polynomial& q, const Polynomial& p) {
  if (p.J() != q.I()) throw TypingMismatch("compose_poly: indices do not match");
  // shapes: Q applied to the family (B_p -f-> J); a shape over k is
  // Pair(d, table{c -> Pair(c, b_c)}) with f_p(b_c) = h_q(c)
  Family fam_b(p.B(), p.J(), p.f);
  Family shapes = eval_poly_obj(q, fam_b);
  // positions: Pair(shape, Pair(c, a)) with c a q-position of the shape and
  // a a p-position of the slot b_c
  std::vector<Value> pos_elems;
  std::vector<std::pair<Value, Value>> pos_to_shape;
  std::vector<std::pair<Value, Value>> pos_to_i;
  for (const auto& shape : shapes.total.elems()) {
    const Value& d = shape.fst();
    (void)d;
    for (const auto& [c, slot] : shape.snd().entries()) {
      const Value& b = slot.snd();
      for (const auto& a : p.A().elems()) {
        if (p.g(a) == b) {
          Value pos = Value::pair(shape, Value::pair(c, a));
          pos_elems.push_back(pos);
          pos_to_shape.emplace_back(pos, shape);
          pos_to_i.emplace_back(pos, p.h(a));
        }
      }
    }
  }
  FinSet positions(pos_elems);
  FinFn g2 = FinFn::from_pairs(positions, shapes.total, pos_to_shape);
  FinFn h2 = FinFn::from_pairs(positions, p.I(), pos_to_i);
  Polynomial composite(h2, g2, shapes.proj);

  SliceFun lhs = eval_poly(composite);
  SliceFun rhs = compose_fun(eval_poly(q), eval_poly(p));

  auto fwd_at = [composite, q, p](const Family& x) {
    Family src = eval_poly_obj(composite, x);
    Family mid = eval_poly_obj(p, x);
    Family dst = eval_poly_obj(q, mid);
    return SliceMap::from_fn(src, dst, [&](const Value& v) {
      const Value& shape = v.fst();        // Pair(d, table{c -> Pair(c, b_c)})
      const Value& big = v.snd();          // table{pos -> Pair(pos, x)}
      const Value& d = shape.fst();
      Value::Entries outer;
      for (const auto& [c, slot] : shape.snd().entries()) {
        const Value& b = slot.snd();
        Value::Entries inner;
        for (const auto& a : p.A().elems()) {
          if (p.g(a) == b) {
            Value pos = Value::pair(shape, Value::pair(c, a));
            inner.emplace_back(a, Value::pair(a, big.table_at(pos).snd()));
          }
        }
        Value p_elem = Value::pair(b, Value::fn_table(std::move(inner)));
        outer.emplace_back(c, Value::pair(c, p_elem));
      }
      return Value::pair(d, Value::fn_table(std::move(outer)));
    });
  };
  auto bwd_at = [composite, q, p](const Family& x) {
    Family dst = eval_poly_obj(composite, x);
    Family mid = eval_poly_obj(p, x);
    Family src = eval_poly_obj(q, mid);
    return SliceMap::from_fn(src, dst, [&](const Value& v) {
      const Value& d = v.fst();
      Value::Entries shape_tbl;
      for (const auto& [c, slot] : v.snd().entries()) {
        const Value& p_elem = slot.snd();  // Pair(b, table{a -> Pair(a, x)})
        shape_tbl.emplace_back(c, Value::pair(c, p_elem.fst()));
      }
      Value shape = Value::pair(d, Value::fn_table(std::move(shape_tbl)));
      Value::Entries big;
      for (const auto& [c, slot] : v.snd().entries()) {
        const Value& p_elem = slot.snd();
        for (const auto& [a, ax] : p_elem.snd().entries()) {
          Value pos = Value::pair(shape, Value::pair(c, a));
          big.emplace_back(pos, Value::pair(pos, ax.snd()));
        }
      }
      return Value::pair(shape, Value::fn_table(std::move(big)));
    });
  };
  NatIso iso{SliceNat{lhs, rhs, fwd_at}, SliceNat{rhs, lhs, bwd_at}};
  return {composite, iso};
}

SlicedPoly slice_poly(const Polynomial& p, const Family& k) {
  if (k.index != p.I()) throw TypingMismatch("slice_poly: K not over I");
  // the proof diagram: h*K, R = g_* h* K with counit, and eta : R ~ PK
  Family hk = pullback_along(p.h, k);
  Family r = pi_along(p.g, hk);
  Family pk = sigma_along(p.f, r);  // same total as r
  Family gr = pullback_along(p.g, r);
  // positions: elements of g*R = Pair(a, Pair(b, tbl)); h' . eps lands in K
  FinFn h2 = FinFn::from_fn(gr.total, k.total, [&](const Value& v) {
    const Value& a = v.fst();
    const Value& tbl = v.snd().snd();
    return tbl.table_at(a).snd();  // eps then h': the K-component of the section at a
  });
  FinFn g2 = FinFn::from_fn(gr.total, r.total, [](const Value& v) { return v.snd(); });
  FinFn eta = FinFn::identity(r.total);  // Sigma_f is free on totals
  Polynomial sliced(h2, g2, eta);

  // directly sliced functor on E/K.total
  SliceCat src(k.total), dst(pk.total);
  SliceFun direct{src, dst, {}, {}, true, true, Provenance::composite(true)};
  Family kk = k;
  Polynomial pp = p;
  direct.on_obj = [kk, pp, pk](const Family& y) {
    auto un = unflatten_obj(kk, y);
    Family px = eval_poly_obj(pp, un.obj);
    SliceMap pproj = eval_poly_map(pp, un.proj);
    return flatten_obj(pk, px, SliceMap(px, pk, pproj.map));
  };
  direct.on_map = [kk, pp, pk, direct_on_obj = direct.on_obj](const SliceMap& m) {
    SliceMap up = unflatten_map(kk, m);
    SliceMap pm = eval_poly_map(pp, up);
    return SliceMap(direct_on_obj(m.src), direct_on_obj(m.dst), pm.map);
  };

  SliceFun lhs = eval_poly(sliced);
  auto fwd_at = [sliced, kk, pp, pk, direct](const Family& y) {
    Family src_obj = eval_poly_obj(sliced, y);
    Family dst_obj = direct.on_obj(y);
    return SliceMap::from_fn(src_obj, dst_obj, [&](const Value& v) {
      // v = Pair(r_elem, table{pos -> Pair(pos, y)}), r_elem = Pair(b, tbl)
      const Value& r_elem = v.fst();
      const Value& b = r_elem.fst();
      Value::Entries inner;
      for (const auto& [pos, py] : v.snd().entries()) {
        const Value& a = pos.fst();
        inner.emplace_back(a, Value::pair(a, py.snd()));
      }
      return Value::pair(b, Value::fn_table(std::move(inner)));
    });
  };
  auto bwd_at = [sliced, kk, pp, direct](const Family& y) {
    Family dst_obj = eval_poly_obj(sliced, y);
    Family src_obj = direct.on_obj(y);
    auto un = unflatten_obj(kk, y);
    return SliceMap::from_fn(src_obj, dst_obj, [&, un](const Value& v) {
      // v = Pair(b, table{a -> Pair(a, y)}); rebuild the R-shape from y's K-projection
      const Value& b = v.fst();
      Value::Entries shape_tbl;
      for (const auto& [a, ay] : v.snd().entries()) {
        Value kv = un.proj(ay.snd());
        shape_tbl.emplace_back(a, Value::pair(a, kv));
      }
      Value r_elem = Value::pair(b, Value::fn_table(std::move(shape_tbl)));
      Value::Entries big;
      for (const auto& [a, ay] : v.snd().entries()) {
        Value pos = Value::pair(a, r_elem);
        big.emplace_back(pos, Value::pair(pos, ay.snd()));
      }
      return Value::pair(r_elem, Value::fn_table(std::move(big)));
    });
  };
  NatIso iso{SliceNat{lhs, direct, fwd_at}, SliceNat{direct, lhs, bwd_at}};
  return {sliced, pk, iso, direct};
}

StagedResult staged_initial_algebra(const SliceFun& f1, const TwoArgFun& f2,
                                    std::size_t max_steps) {
  if (!f1.provenance.poly_class) {
    throw FlagMissing("staged_initial_algebra: F1 lacks polynomial-class provenance");
  }
  SliceCat w1_world = f1.src;
  auto w1 = initial_algebra(w1_world, f1, max_steps);
  if (!w1.stabilized()) {
    return {w1, ChainResultT<SliceCat>{ChainResultT<SliceCat>::Exceeded{}}};
  }
  const Family& w1_obj = w1.ok().w;
  SliceCat w2_world = f2.src2;
  SliceFun f2_fixed{w2_world, w2_world, {}, {}, false, true, Provenance::polynomial()};
  auto on_obj2 = f2.on_obj;
  auto on_map2 = f2.on_map;
  SliceMap id_w1 = SliceMap::identity(w1_obj);
  f2_fixed.on_obj = [on_obj2, w1_obj](const Family& x) { return on_obj2(w1_obj, x); };
  f2_fixed.on_map = [on_map2, id_w1](const SliceMap& m) { return on_map2(id_w1, m); };
  auto w2 = initial_algebra(w2_world, f2_fixed, max_steps);
  return {w1, w2};
}

PairAlgebra staged_pair_algebra(const SliceFun&, const TwoArgFun&, const StagedResult& st) {
  const auto& a = st.w1.ok();
  const auto& b = st.w2.ok();
  return PairAlgebra{a.w, b.w, a.s, b.s};
}

std::vector<std::pair<SliceMap, SliceMap>> pair_algebra_homs(const SliceFun& f1,
                                                             const TwoArgFun& f2,
                                                             const PairAlgebra& a,
                                                             const PairAlgebra& b) {
  std::vector<std::pair<SliceMap, SliceMap>> out;
  for (const auto& h1 : slice_hom(a.x1, b.x1)) {
    if (!(compose(h1, a.t1) == compose(b.t1, f1.on_map(h1)))) continue;
    for (const auto& h2 : slice_hom(a.x2, b.x2)) {
      if (compose(h2, a.t2) == compose(b.t2, f2.on_map(h1, h2))) out.emplace_back(h1, h2);
    }
  }
  return out;
}

}  // namespace wcat
