#include "wcat/lift.hpp"

namespace wcat {

SliceAlgebra lift_algebra_functor(const LaxEndoMorphism& lax, const SliceAlgebra& alg) {
  Family hx = lax.H.on_obj(alg.carrier);
  SliceMap sig = lax.sigma.at(alg.carrier);
  if (!(sig.dst == lax.H.on_obj(lax.P.on_obj(alg.carrier)))) {
    throw TypingMismatch("lift_algebra_functor: sigma not typed QH => HP");
  }
  SliceMap structure = compose(lax.H.on_map(alg.structure), sig);
  return SliceAlgebra{lax.Q, hx, structure};
}

SliceMap lift_algebra_morphism(const LaxEndoMorphism& lax, const SliceMap& h) {
  return lax.H.on_map(h);
}

CheckReport check_triangle_identities(const AdjointData& adj,
                                      const std::vector<Family>& src_samples,
                                      const std::vector<Family>& dst_samples) {
  CheckReport rep;
  rep.name = "triangle identities";
  for (const auto& x : src_samples) {
    SliceMap left = compose(adj.counit.at(adj.H.on_obj(x)), adj.H.on_map(adj.unit.at(x)));
    if (!(left == SliceMap::identity(adj.H.on_obj(x)))) {
      rep.fail("counit(HX) . H(unit(X)) != id at " + x.str());
    }
  }
  for (const auto& y : dst_samples) {
    SliceMap right = compose(adj.R.on_map(adj.counit.at(y)), adj.unit.at(adj.R.on_obj(y)));
    if (!(right == SliceMap::identity(adj.R.on_obj(y)))) {
      rep.fail("R(counit(Y)) . unit(RY) != id at " + y.str());
    }
  }
  return rep;
}

SliceNat mate_of_inverse(const StrongEndoMorphism& strong, const AdjointData& adj) {
  // P R => R Q as  R Q counit . R sigma^{-1} R . unit P R
  SliceFun pr = compose_fun(strong.P, adj.R);
  SliceFun rq = compose_fun(adj.R, strong.Q);
  auto P = strong.P;
  auto Q = strong.Q;
  auto R = adj.R;
  auto sigma_inv = strong.sigma_inv;
  auto unit = adj.unit;
  auto counit = adj.counit;
  return SliceNat{pr, rq, [P, Q, R, sigma_inv, unit, counit](const Family& y) {
                    Family ry = R.on_obj(y);
                    SliceMap step1 = unit.at(P.on_obj(ry));           // P R Y -> R H P R Y
                    SliceMap step2 = R.on_map(sigma_inv.at(ry));      // -> R Q H R Y
                    SliceMap step3 = R.on_map(Q.on_map(counit.at(y)));  // -> R Q Y
                    return compose(step3, compose(step2, step1));
                  }};
}

SliceAlgebra adjoint_lift_right(const StrongEndoMorphism& strong, const AdjointData& adj,
                                const SliceAlgebra& alg_q) {
  // verify sigma is invertible on the carrier we are about to use
  Family ry = adj.R.on_obj(alg_q.carrier);
  SliceMap sig = strong.sigma.at(ry);
  SliceMap sig_inv = strong.sigma_inv.at(ry);
  if (!(compose(sig_inv, sig) == SliceMap::identity(sig.src)) ||
      !(compose(sig, sig_inv) == SliceMap::identity(sig_inv.src))) {
    throw NotStrong("adjoint_lift_right: sigma is not invertible at R(carrier)");
  }
  SliceNat mate = mate_of_inverse(strong, adj);
  SliceMap structure = compose(adj.R.on_map(alg_q.structure), mate.at(alg_q.carrier));
  return SliceAlgebra{strong.P, ry, structure};
}

CheckReport check_oplax_laws(const OplaxMorphism& oplax, const std::vector<Family>& samples) {
  CheckReport rep;
  rep.name = "oplax morphism laws";
  const Comonad& g = *oplax.G;
  const Comonad& h = *oplax.H;
  for (const auto& x : samples) {
    Family sx = oplax.S.on_obj(x);
    SliceMap sig = oplax.sigma.at(x);
    // eps_H S . sigma = S eps_G
    SliceMap lhs = compose(h.counit.at(sx), sig);
    SliceMap rhs = oplax.S.on_map(g.counit.at(x));
    if (!(lhs == rhs)) {
      rep.fail("counit compatibility fails at " + x.str() + "; " +
               first_disagreement(SliceCat(h.index()), lhs, rhs));
    }
    // delta_H S . sigma = H sigma . sigma G . S delta_G
    SliceMap left = compose(h.comult.at(sx), sig);
    SliceMap right = compose(h.apply_map(sig),
                             compose(oplax.sigma.at(g.apply(x)),
                                     oplax.S.on_map(g.comult.at(x))));
    if (!(left == right)) {
      rep.fail("comultiplication compatibility fails at " + x.str() + "; " +
               first_disagreement(SliceCat(h.index()), left, right));
    }
  }
  rep.note("checked on " + std::to_string(samples.size()) + " objects");
  return rep;
}

FunT<CoalgCat, CoalgCat> lift_functor_along_oplax(const OplaxMorphism& oplax) {
  CoalgCat src(oplax.G), dst(oplax.H);
  FunT<CoalgCat, CoalgCat> out{src, dst, {}, {},
                               oplax.S.preserves_pullbacks, oplax.S.preserves_monos,
                               oplax.S.provenance};
  auto S = oplax.S;
  auto sigma = oplax.sigma;
  auto H = oplax.H;
  out.on_obj = [S, sigma, H](const Coalgebra& a) {
    SliceMap structure = compose(sigma.at(a.carrier), S.on_map(a.structure));
    try {
      return Coalgebra(H, S.on_obj(a.carrier), structure);
    } catch (const LawViolation& e) {
      throw OplaxLawViolation(std::string("lifted coalgebra invalid: ") + e.what());
    }
  };
  auto self = out.on_obj;
  out.on_map = [S, self](const CoalgMap& m) {
    return CoalgMap(self(m.src), self(m.dst), S.on_map(m.underlying));
  };
  return out;
}

SliceNat recover_oplax_sigma(const ComonadPtr& g, const ComonadPtr& h, const SliceFun& s,
                             const std::function<Coalgebra(const Coalgebra&)>& t_on_obj) {
  SliceFun sg = compose_fun(s, g->functor);
  SliceFun hs = compose_fun(h->functor, s);
  auto gp = g;
  auto hp = h;
  return SliceNat{sg, hs, [gp, hp, s, t_on_obj](const Family& x) {
                    Coalgebra tfg = t_on_obj(cofree(gp, x));
                    // structure of T(F_G X) : S G X -> H S G X, then H S eps_G
                    SliceMap theta = tfg.structure;
                    SliceMap second = hp->apply_map(s.on_map(gp->counit.at(x)));
                    return compose(second, theta);
                  }};
}

CheckReport algebra_of_coalgebra(const OplaxMorphism& p_oplax, const Family& carrier,
                                 const SliceMap& alpha, const SliceMap& s) {
  CheckReport rep;
  rep.name = "algebra-of-coalgebra classification";
  const Comonad& g = *p_oplax.G;
  // coalgebra laws for alpha
  try {
    Coalgebra check(p_oplax.G, carrier, alpha);
    (void)check;
  } catch (const Error& e) {
    rep.fail(std::string("alpha is not a coalgebra: ") + e.what());
  }
  if (!(s.dst == alpha.src) || !(s.src == p_oplax.S.on_obj(carrier))) {
    rep.fail("s is not typed P(A) -> A");
    return rep;
  }
  // pentagon: alpha . s = G s . sigma(A) . P alpha
  SliceMap lhs = compose(alpha, s);
  SliceMap rhs = compose(g.apply_map(s),
                         compose(p_oplax.sigma.at(carrier), p_oplax.S.on_map(alpha)));
  if (!(lhs == rhs)) {
    rep.fail("pentagon alpha.s != Gs.sigma(A).P(alpha); " +
             first_disagreement(SliceCat(g.index()), lhs, rhs));
  }
  return rep;
}

LiftedInitialAlgebra lift_initial_algebra(const OplaxMorphism& p_oplax,
                                          const ChainResultT<SliceCat>& chain) {
  const auto& st = chain.ok();
  const ComonadPtr& g = p_oplax.G;
  SliceCat down(g->index());
  // target algebra H(W, s) = (G W, G s . sigma(W))
  SliceFun P = p_oplax.S;
  Family w = st.w;
  SliceMap s = st.s;
  SliceAlgebra target{P, g->apply(w), compose(g->apply_map(s), p_oplax.sigma.at(w))};
  SliceMap alpha = fold(down, P, st, target);
  CheckReport pentagon = algebra_of_coalgebra(p_oplax, w, alpha, s);
  if (!pentagon.passed()) {
    throw LawViolation("lift_initial_algebra: fold output fails the laws: " +
                       pentagon.str());
  }
  Coalgebra carrier(g, w, alpha);
  FunT<CoalgCat, CoalgCat> q = lift_functor_along_oplax(p_oplax);
  CoalgMap structure(q.on_obj(carrier), carrier, s);
  return {carrier, CoalgAlgebra{q, carrier, structure}, q};
}

}  // namespace wcat
