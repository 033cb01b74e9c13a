#pragma once

#include "wcat/coalg_world.hpp"
#include "wcat/lift.hpp"

namespace wcat {

// An internal category in FinSet: objects, arrows, dom/cod, identities and an
// explicit composition table. Category laws are validated at construction.
class FinCat {
 public:
  FinCat(FinSet objects, FinSet arrows, FinFn dom, FinFn cod, FinFn id,
         std::vector<std::uint32_t> comp);  // comp[g * n + f] or UINT32_MAX

  static FinCat discrete(const FinSet& objects);
  static FinCat interval();  // 0 -> 1
  // Build from explicit data; identity compositions are filled in when absent.
  static FinCat from_data(
      const std::vector<std::string>& objects,
      const std::vector<std::tuple<std::string, std::string, std::string>>& arrows,
      const std::vector<std::tuple<std::string, std::string, std::string>>& compose_triples);

  const FinSet& objects() const { return objects_; }
  const FinSet& arrows() const { return arrows_; }
  const FinFn& dom() const { return dom_; }
  const FinFn& cod() const { return cod_; }
  const FinFn& id() const { return id_; }
  Value compose_arrows(const Value& g, const Value& f) const;  // g after f
  bool composable(const Value& g, const Value& f) const;

 private:
  FinSet objects_, arrows_;
  FinFn dom_, cod_, id_;
  std::vector<std::uint32_t> comp_;
  void validate() const;
};

// The cartesian comonad (dom)_* (cod)^* on E/C0, whose coalgebras are the
// internal diagrams on C.
ComonadPtr internal_diagram_comonad(const FinCat& c);

// Coalgebra from a functor presentation: fibers over objects plus an action
// for every arrow. Functor laws surface as coalgebra-law violations.
Coalgebra diagram_coalgebra(const FinCat& c, const ComonadPtr& g, const Family& x,
                            const std::function<Value(const Value&, const Value&)>& action);
// Extract the action of an arrow from a diagram coalgebra.
Value diagram_action(const Coalgebra& coalg, const Value& arrow, const Value& elem);

// --- gluing ------------------------------------------------------------------

// Catalog of cartesian functors for the gluing comonad; every entry preserves
// finite limits by construction.
struct GlueSpec {
  enum class Kind { Identity, Power, ExpFrom, ConstantTerminal };
  Kind kind = Kind::Identity;
  FinSet exponent;  // key set for Power/ExpFrom

  static GlueSpec identity() { return {Kind::Identity, FinSet()}; }
  static GlueSpec power(std::size_t k);
  static GlueSpec exp_from(FinSet k) { return {Kind::ExpFrom, std::move(k)}; }
  static GlueSpec constant_terminal() { return {Kind::ConstantTerminal, FinSet()}; }

  FinSet h_obj(const FinSet& x) const;
  FinFn h_map(const FinFn& m) const;
};

FinSet two_point_index();
// The product world E1 x E2 as E/2; components kept disjoint by tagging.
Family pair_family(const FinSet& x1, const FinSet& x2);
FinSet fiber1(const Family& x);
FinSet fiber2(const Family& x);
// Component maps of a map of pair families.
FinFn component1(const SliceMap& m);
FinFn component2(const SliceMap& m);

// (X1, X2) |-> (X1, H X1 x X2) on E/2.
ComonadPtr gluing_comonad(const GlueSpec& spec);
// Coalgebra from a comma presentation: compare : X2 -> H X1.
Coalgebra gluing_coalgebra(const ComonadPtr& g, const GlueSpec& spec, const FinSet& x1,
                           const FinSet& x2, const FinFn& compare);
// Extract the comparison map back.
FinFn gluing_compare(const GlueSpec& spec, const Coalgebra& coalg);

// --- slice comonads and pushforwards ------------------------------------------

// G_alpha = alpha^* (G/A) on E/A.total, with the evident comonad structure.
ComonadPtr slice_comonad(const ComonadPtr& g, const Coalgebra& a);

// The identification (E/A)_{G_alpha} = E_G/(A, alpha), both directions.
Coalgebra to_slice_coalgebra(const ComonadPtr& g_alpha, const Coalgebra& a, const CoalgMap& p);
struct OverCoalgebra {
  Coalgebra obj;
  CoalgMap proj;
};
OverCoalgebra from_slice_coalgebra(const ComonadPtr& g, const Coalgebra& a, const Coalgebra& y);

// Canonical natural transformation G_alpha f^* => f^* G_beta at y (an iso for
// coalgebra morphisms f), and its pointwise inverse.
SliceMap canonical_theta_at(const CoalgMap& f, const ComonadPtr& g_alpha,
                            const ComonadPtr& g_beta, const Family& y);
SliceMap canonical_theta_inv_at(const CoalgMap& f, const ComonadPtr& g_alpha,
                                const ComonadPtr& g_beta, const Family& y);

// The mate sigma : G_beta Pi_f => Pi_f G_alpha of the canonical iso, assembled
// from the named Pi adjunction witnesses.
SliceMap pushforward_mate_at(const CoalgMap& f, const ComonadPtr& g_alpha,
                             const ComonadPtr& g_beta, const Family& x);

// Pushforward along a coalgebra morphism via the coreflexive-pair equalizer.
struct PushforwardResult {
  Coalgebra obj;       // object of E_G/(B, beta), as a G_beta-coalgebra
  CoalgMap incl;       // equalizer inclusion into F_{G_beta} Pi_f U X
  CoalgMap phi1, phi2; // the coreflexive pair at X
  CoalgMap retraction; // F_{G_beta} Pi_f eps_{G_alpha} U at X
  bool coreflexive_verified = false;
};
PushforwardResult pushforward_coalg(const CoalgMap& f, const ComonadPtr& g_alpha,
                                    const ComonadPtr& g_beta, const Coalgebra& x);
CoalgMap pushforward_coalg_map(const CoalgMap& f, const ComonadPtr& g_alpha,
                               const ComonadPtr& g_beta, const CoalgMap& m);

// Reindexing of slice coalgebras along coalgebra morphisms.
Coalgebra coalg_pullback_along(const CoalgMap& h, const ComonadPtr& g_alpha,
                               const ComonadPtr& g_iota, const Coalgebra& x);
CoalgMap coalg_pullback_along_map(const CoalgMap& h, const ComonadPtr& g_alpha,
                                  const ComonadPtr& g_iota, const CoalgMap& m);
Coalgebra coalg_sigma_along(const CoalgMap& f, const ComonadPtr& g_beta,
                            const ComonadPtr& g_iota, const Coalgebra& y);
CoalgMap coalg_sigma_along_map(const CoalgMap& f, const ComonadPtr& g_beta,
                               const ComonadPtr& g_iota, const CoalgMap& m);

// The functor 1 + (-) on E/N, and its oplax structure over a cartesian
// comonad; the corresponding lifted functor is coproduct with the terminal
// coalgebra, the shape of the natural number object chain.
SliceFun one_plus_functor(const FinSet& index);
OplaxMorphism one_plus_oplax(const ComonadPtr& g);

// Finite limits and colimits in E_G, created along the forgetful functor;
// wrappers over the CoalgCat world for spec-level access.
CoalgCat::Prod coalg_product(const ComonadPtr& g, const Coalgebra& x, const Coalgebra& y);
std::pair<Coalgebra, CoalgMap> coalg_equalizer(const ComonadPtr& g, const CoalgMap& f,
                                               const CoalgMap& h);
CoalgCat::Coprod coalg_coproduct(const ComonadPtr& g, const Coalgebra& x, const Coalgebra& y);
Coalgebra coalg_terminal(const ComonadPtr& g);
// 1 + 1 disjointness in E_G: injections monic and their pullback initial.
bool coalg_one_plus_one_disjoint(const ComonadPtr& g);

}  // namespace wcat
