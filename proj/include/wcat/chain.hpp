#pragma once

#include <algorithm>
#include <variant>

#include "wcat/cat.hpp"

namespace wcat {

// Result of iterating 0 -> F0 -> F^2 0 -> ... Stabilized when the connecting
// map first becomes an isomorphism; Exceeded is a first-class outcome, not an
// error.
template <class C>
struct ChainResultT {
  struct Stabilized {
    std::vector<typename C::Obj> stages;  // X_0 .. X_{steps+1}
    std::vector<typename C::Map> maps;    // m_k : X_k -> X_{k+1}
    std::size_t steps = 0;                // minimal k with m_k iso
    typename C::Obj w;                    // X_steps
    typename C::Map s;                    // F(w) -> w
    std::vector<std::size_t> cards;
  };
  struct Exceeded {
    std::vector<std::size_t> trace;
    std::vector<typename C::Obj> stages;
    std::vector<typename C::Map> maps;
  };

  std::variant<Stabilized, Exceeded> result;

  bool stabilized() const { return std::holds_alternative<Stabilized>(result); }
  const Stabilized& ok() const {
    if (!stabilized()) throw Error("chain did not stabilize within max_steps");
    return std::get<Stabilized>(result);
  }
  const Exceeded& exceeded() const { return std::get<Exceeded>(result); }
  std::vector<std::size_t> trace() const {
    return stabilized() ? ok().cards : exceeded().trace;
  }
};

template <class C>
ChainResultT<C> initial_algebra(const C& world, const FunT<C, C>& f, std::size_t max_steps) {
  using Chain = ChainResultT<C>;
  std::vector<typename C::Obj> stages;
  std::vector<typename C::Map> maps;
  std::vector<std::size_t> cards;
  stages.push_back(world.initial());
  cards.push_back(world.card(stages.back()));
  for (std::size_t k = 0; k <= max_steps; ++k) {
    stages.push_back(f.on_obj(stages.back()));
    cards.push_back(world.card(stages.back()));
    maps.push_back(k == 0 ? world.from_initial(stages[1]) : f.on_map(maps.back()));
    if (world.is_iso(maps.back())) {
      typename Chain::Stabilized st{stages, maps, k, stages[k], world.inverse(maps.back()),
                                    cards};
      return Chain{std::move(st)};
    }
  }
  return Chain{typename Chain::Exceeded{std::move(cards), std::move(stages), std::move(maps)}};
}

template <class C>
AlgebraT<C> chain_algebra(const FunT<C, C>& f, const ChainResultT<C>& chain) {
  const auto& st = chain.ok();
  return AlgebraT<C>{f, st.w, st.s};
}

// The unique algebra morphism from the stabilized initial algebra into
// `target`, computed stage by stage along the chain.
template <class C>
typename C::Map fold(const C& world, const FunT<C, C>& f,
                     const typename ChainResultT<C>::Stabilized& chain,
                     const AlgebraT<C>& target) {
  typename C::Map h = world.from_initial(target.carrier);
  for (std::size_t k = 0; k < chain.steps; ++k) {
    h = world.compose(target.structure, f.on_map(h));
  }
  return h;
}

template <class C>
std::vector<typename C::Map> algebra_homs(const C& world, const FunT<C, C>& f,
                                          const AlgebraT<C>& a, const AlgebraT<C>& b) {
  std::vector<typename C::Map> out;
  for (const auto& h : world.hom(a.carrier, b.carrier)) {
    auto lhs = world.compose(h, a.structure);
    auto rhs = world.compose(b.structure, f.on_map(h));
    if (world.equal_maps(lhs, rhs)) out.push_back(h);
  }
  return out;
}

// Least subalgebra by closure: S_0 = empty, S_{k+1} = S_k + image(s . F(incl)).
template <class C>
std::pair<typename C::Obj, typename C::Map> least_subalgebra(const C& world,
                                                             const AlgebraT<C>& alg) {
  if (!alg.functor.preserves_monos) {
    throw FlagMissing("least_subalgebra: functor must carry preserves_monos");
  }
  std::vector<Value> current;
  while (true) {
    auto [sub, incl] = world.subobject(alg.carrier, current);
    auto step = world.compose(alg.structure, alg.functor.on_map(incl));
    std::vector<Value> next = current;
    for (const auto& v : world.map_image(step)) next.push_back(v);
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    if (next == current) return {sub, incl};
    current = std::move(next);
  }
}

template <class C>
bool is_well_founded(const C& world, const AlgebraT<C>& alg) {
  auto [sub, incl] = least_subalgebra(world, alg);
  return world.card(sub) == world.card(alg.carrier);
}

template <class C>
bool is_fixed_point(const C& world, const AlgebraT<C>& alg) {
  return world.is_iso(alg.structure);
}

// Sample targets for initiality evidence: 1, the algebra itself, and products
// with 1 (kept small so that hom enumeration stays within budget).
template <class C>
std::vector<AlgebraT<C>> standard_targets(const C& world, const AlgebraT<C>& alg,
                                          std::size_t n) {
  const auto& f = alg.functor;
  std::vector<AlgebraT<C>> out;
  auto one = world.terminal();
  AlgebraT<C> unit_alg{f, one, world.to_terminal(f.on_obj(one))};
  out.push_back(unit_alg);
  if (out.size() < n) out.push_back(alg);
  auto prod_alg = [&](const AlgebraT<C>& a, const AlgebraT<C>& b) {
    auto p = world.product(a.carrier, b.carrier);
    auto s = world.tuple(world.compose(a.structure, f.on_map(p.p1)),
                         world.compose(b.structure, f.on_map(p.p2)), p);
    return AlgebraT<C>{f, p.obj, s};
  };
  bool left = true;
  while (out.size() < n) {
    out.push_back(left ? prod_alg(unit_alg, out.back()) : prod_alg(out.back(), unit_alg));
    left = !left;
  }
  return out;
}

// The two sides of the Characterization Theorem at desk scale: fixed point +
// well-founded versus unique-morphism evidence against sample targets.
template <class C>
CheckReport check_characterization(const C& world, const AlgebraT<C>& alg,
                                   const std::vector<AlgebraT<C>>& targets) {
  if (!alg.functor.provenance.poly_class) {
    throw FlagMissing("check_characterization: functor lacks polynomial-class provenance");
  }
  CheckReport rep;
  rep.name = "characterization";
  bool fixed = is_fixed_point(world, alg);
  bool wf = is_well_founded(world, alg);
  bool initial_evidence = true;
  for (const auto& t : targets) {
    auto hs = algebra_homs(world, alg.functor, alg, t);
    if (hs.size() != 1) {
      initial_evidence = false;
      rep.note("target " + world.describe(t.carrier) + " admits " +
               std::to_string(hs.size()) + " algebra morphisms");
    }
  }
  rep.note(std::string("fixed point: ") + (fixed ? "yes" : "no"));
  rep.note(std::string("well-founded: ") + (wf ? "yes" : "no"));
  rep.note("initiality evidence on " + std::to_string(targets.size()) +
           " sample targets: " + (initial_evidence ? "unique morphisms" : "not initial"));
  if ((fixed && wf) != initial_evidence) {
    rep.fail("characterization mismatch: (fixed && well-founded) = " +
             std::string(fixed && wf ? "true" : "false") + " but initiality evidence = " +
             std::string(initial_evidence ? "true" : "false"));
  }
  return rep;
}

}  // namespace wcat
