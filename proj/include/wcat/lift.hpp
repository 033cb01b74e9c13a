#pragma once

#include "wcat/chain.hpp"
#include "wcat/coalg_world.hpp"

namespace wcat {

// Lax morphism of endofunctors: H with sigma : Q H => H P (P on src, Q on dst).
struct LaxEndoMorphism {
  SliceFun P, Q, H;
  SliceNat sigma;  // component at X : Q(H X) -> H(P X)
};

// induced functor on algebras: (X, s) |-> (H X, H s . sigma(X))
SliceAlgebra lift_algebra_functor(const LaxEndoMorphism& lax, const SliceAlgebra& alg);
SliceMap lift_algebra_morphism(const LaxEndoMorphism& lax, const SliceMap& h);

// Adjunction H -| R with named unit/counit.
struct AdjointData {
  SliceFun H, R;
  SliceNat unit;    // Id => R H
  SliceNat counit;  // H R => Id
};
CheckReport check_triangle_identities(const AdjointData& adj, const std::vector<Family>& src_samples,
                                      const std::vector<Family>& dst_samples);

// Adjoint lifting for endofunctors: a strong morphism (H, sigma iso) P -> Q
// with H -| R induces Alg(Q) -> Alg(P) via the mate of sigma^{-1}.
struct StrongEndoMorphism {
  SliceFun P, Q, H;
  SliceNat sigma;      // Q H => H P
  SliceNat sigma_inv;  // H P => Q H
};
SliceNat mate_of_inverse(const StrongEndoMorphism& strong, const AdjointData& adj);  // P R => R Q
SliceAlgebra adjoint_lift_right(const StrongEndoMorphism& strong, const AdjointData& adj,
                                const SliceAlgebra& alg_q);

// Oplax morphism of comonads: (S, sigma : S G => H S) with the counit and
// comultiplication compatibility laws.
struct OplaxMorphism {
  ComonadPtr G, H;
  SliceFun S;
  SliceNat sigma;  // component at X : S(G X) -> H(S X)
};
CheckReport check_oplax_laws(const OplaxMorphism& oplax, const std::vector<Family>& samples);

// The functor T : E_G -> F_H with U_H T = S U_G; throws OplaxLawViolation if
// an application produces an invalid coalgebra.
FunT<CoalgCat, CoalgCat> lift_functor_along_oplax(const OplaxMorphism& oplax);

// The inverse direction of the bijection: recover sigma from T (with
// U_H T = S U_G) via sigma = H S eps_G . U_H eta_H T F_G.
SliceNat recover_oplax_sigma(const ComonadPtr& g, const ComonadPtr& h, const SliceFun& s,
                             const std::function<Coalgebra(const Coalgebra&)>& t_on_obj);

// Classification of (A, alpha, s) as a Q-algebra/H-coalgebra for an oplax
// (P, sigma) : G -> G: checks the coalgebra laws and the pentagon
// alpha . s = G s . sigma(A) . P alpha.
CheckReport algebra_of_coalgebra(const OplaxMorphism& p_oplax, const Family& carrier,
                                 const SliceMap& alpha, const SliceMap& s);

// Creation of initial algebras along U_G (item 15): lifts the downstairs
// initial P-algebra to the unique initial Q-algebra over it.
struct LiftedInitialAlgebra {
  Coalgebra carrier;       // (W, alpha)
  CoalgAlgebra algebra;    // for the lifted functor
  FunT<CoalgCat, CoalgCat> lifted_functor;
};
LiftedInitialAlgebra lift_initial_algebra(const OplaxMorphism& p_oplax,
                                          const ChainResultT<SliceCat>& chain);

}  // namespace wcat
