#pragma once

#include <optional>

#include "wcat/coalg.hpp"
#include "wcat/poly.hpp"

namespace wcat {

// An endopolynomial in E_G over (I, iota): three coalgebra morphisms, with
// the slice comonads built once and shared.
struct CoalgPolynomial {
  ComonadPtr G;
  Coalgebra I, A, B;
  CoalgMap h, g, f;  // h : A -> I, g : A -> B, f : B -> I
  ComonadPtr G_iota, G_alpha, G_beta;

  static CoalgPolynomial make(const ComonadPtr& G, const CoalgMap& h, const CoalgMap& g,
                              const CoalgMap& f);
};

// The coreflexive-pair presentation of P_{f,g,h} in E_G: P equalizes
// phi, psi : P0 => P1 with common retraction eps, inclusion iota : P => P0.
struct CoreflexiveData {
  FunT<CoalgCat, CoalgCat> P, P0, P1;
  NatT<CoalgCat, CoalgCat> phi, psi, eps, iota;
};

struct BuildCoreflexiveResult {
  CoreflexiveData data;
  SliceFun Q0, Q1;  // downstairs shadows on E/I.total with U P_i = Q_i U
};
BuildCoreflexiveResult build_coreflexive(const CoalgPolynomial& poly);

// Well-founded fixed point extracted from the initial algebras of P0 and P1:
// u, v, e by fold, W = eq(u, v), s by factoring s0 . P0(i) . iota(W) through i.
struct WfpResult {
  CoalgAlgebra algebra;  // (W, s) for the equalizer functor P
  CoalgMap u, v, e, incl, s;
  ChainResultT<CoalgCat> w0_chain, w1_chain;
  CheckReport equations;  // the proof equations, verified elementwise
};
WfpResult equalizer_wfp(const CoreflexiveData& data, std::size_t max_steps);
WfpResult equalizer_wfp_with(const CoreflexiveData& data, ChainResultT<CoalgCat> w0,
                             ChainResultT<CoalgCat> w1);

// The composite Sigma_f Pi_g h^* computed wholly inside the coalgebra world
// via the pushforward equalizer: the direct route, used as the cross-check
// oracle against the pipeline.
FunT<CoalgCat, CoalgCat> coalg_poly_functor(const CoalgPolynomial& poly);
ChainResultT<CoalgCat> direct_chain_wtype(const CoalgPolynomial& poly, std::size_t max_steps);

struct WTypeResult {
  bool stabilized = false;
  std::optional<WfpResult> wfp;
  CheckReport report;
  std::vector<std::size_t> q0_trace, q1_trace, p0_trace, p1_trace, p_trace;
};
WTypeResult w_type(const CoalgPolynomial& poly, std::size_t max_steps);

// Pipeline W versus the direct chain, compared as algebras (unique iso).
CheckReport cross_check_wtype(const CoalgPolynomial& poly, std::size_t max_steps);

// --- the equalizer-induces-mono lemma -----------------------------------------

struct EqualizerMonoDiagram {
  FinFn u, v;  // Y => Z
  FinFn f, g;  // B => C
  FinFn p;     // Y -> B
  FinFn q;     // Z -> C, monic
};
CheckReport check_equalizer_mono_lemma(const EqualizerMonoDiagram& d);
// Seeded hypothesis-satisfying diagrams, all verified; plus a randomized
// search for a counterexample when the mono hypothesis is dropped.
CheckReport run_equalizer_mono_trials(std::uint64_t seed, std::size_t count,
                                      std::size_t max_size = 4);

// --- preservation of W-types ----------------------------------------------------

// Constant internal diagram on a plain finite set, as a coalgebra.
Coalgebra delta_diagram(const FinCat& c, const ComonadPtr& g, const FinSet& s);
// Delta applied to an endopolynomial in FinSet, landing in E_G for the
// internal-diagram comonad of c.
CoalgPolynomial delta_polynomial(const FinCat& c, const ComonadPtr& g, const Polynomial& p);

CheckReport check_preservation_delta(const FinCat& c, const Polynomial& p,
                                     std::size_t max_steps);
// Gluing first projection; expects the gluing comonad world.
CheckReport check_preservation_pi1(const GlueSpec& spec, const CoalgPolynomial& poly,
                                   std::size_t max_steps);

// First components of a gluing endopolynomial as a plain polynomial (the
// image of the endopolynomial under pi1).
Polynomial gluing_component1_polynomial(const CoalgPolynomial& poly);

}  // namespace wcat
