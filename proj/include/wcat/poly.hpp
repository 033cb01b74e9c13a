#pragma once

#include "wcat/chain.hpp"

namespace wcat {

// Representing data for f_! g_* h^* : E/I -> E/J.
struct Polynomial {
  FinFn h;  // A -> I
  FinFn g;  // A -> B
  FinFn f;  // B -> J

  Polynomial(FinFn h_, FinFn g_, FinFn f_);
  const FinSet& I() const { return h.cod(); }
  const FinSet& A() const { return h.dom(); }
  const FinSet& B() const { return g.cod(); }
  const FinSet& J() const { return f.cod(); }

  static Polynomial identity(const FinSet& i);
  // the natural-number-object polynomial 1 <- 0+1 -> 1+1 -> 1
  static Polynomial nno();
};

// Evaluation as an executable functor; elements over j are Pair(b, section).
Family eval_poly_obj(const Polynomial& p, const Family& x);
SliceMap eval_poly_map(const Polynomial& p, const SliceMap& m);
SliceFun eval_poly(const Polynomial& p);

// A natural isomorphism with both directions materialized.
struct NatIso {
  SliceNat fwd, bwd;
};
CheckReport check_nat_iso(const NatIso& iso, const std::vector<Family>& objs,
                          const std::vector<SliceMap>& maps);

// Composition: a representing polynomial for eval(q) . eval(p) together with
// the natural isomorphism against the functor composite.
struct ComposedPoly {
  Polynomial poly;
  NatIso iso;  // eval(poly) => eval(q) . eval(p)
};
ComposedPoly compose_poly(const Polynomial& q, const Polynomial& p);

// Slicing: P/K : (E/I)/K -> (E/J)/PK under the slice identification, with the
// natural isomorphism against the directly sliced functor.
struct SlicedPoly {
  Polynomial poly;   // from K.total to PK.total
  Family pk;         // P applied to K
  NatIso iso;        // eval(poly) => directly sliced functor
  SliceFun direct;   // the directly sliced functor on E/K.total
};
SlicedPoly slice_poly(const Polynomial& p, const Family& k);

// Two-argument functor E_1/I_1 x E_2/I_2 -> E_2/I_2 for the semidirect class.
struct TwoArgFun {
  SliceCat src1, src2, dst;
  std::function<Family(const Family&, const Family&)> on_obj;
  std::function<SliceMap(const SliceMap&, const SliceMap&)> on_map;
};

// Staged initial algebra for (F1 . pi1, F2): W1 = mu F1, W2 = mu F2(W1, -).
struct StagedResult {
  ChainResultT<SliceCat> w1, w2;
  bool stabilized() const { return w1.stabilized() && w2.stabilized(); }
};
StagedResult staged_initial_algebra(const SliceFun& f1, const TwoArgFun& f2,
                                    std::size_t max_steps);

// Morphisms of pair algebras ((W1,W2),(s1,s2)) -> ((X1,X2),(t1,t2)); the pair
// (h1, h2) per the staged uniqueness argument, plus exhaustive counting.
struct PairAlgebra {
  Family x1, x2;
  SliceMap t1;  // F1 x1 -> x1
  SliceMap t2;  // F2(x1, x2) -> x2
};
std::vector<std::pair<SliceMap, SliceMap>> pair_algebra_homs(const SliceFun& f1,
                                                             const TwoArgFun& f2,
                                                             const PairAlgebra& a,
                                                             const PairAlgebra& b);
PairAlgebra staged_pair_algebra(const SliceFun& f1, const TwoArgFun& f2,
                                const StagedResult& st);

}  // namespace wcat
