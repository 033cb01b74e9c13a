#pragma once

// Shared fixtures: the stratified test polynomials and small worlds used
// across suites, plus independent brute-force oracles.

#include <map>
#include <set>

#include "wcat/coalg.hpp"
#include "wcat/poly.hpp"

namespace wcat::test {

// Stratified tree polynomial on I = {i0, i1}: two leaves at i0, one node at
// i1 with two children at i0. W has fibers (2, 4).
inline Polynomial stratified_poly() {
  FinSet i = FinSet::atoms({"i0", "i1"});
  FinSet b = FinSet::atoms({"leafA", "leafB", "node"});
  FinSet a = FinSet::atoms({"c1", "c2"});
  FinFn h = FinFn::constant(a, i, Value::atom("i0"));
  FinFn g = FinFn::constant(a, b, Value::atom("node"));
  FinFn f = FinFn::from_pairs(b, i,
                              {{Value::atom("leafA"), Value::atom("i0")},
                               {Value::atom("leafB"), Value::atom("i0")},
                               {Value::atom("node"), Value::atom("i1")}});
  return Polynomial(h, g, f);
}

// A second stratified shape: three indices, unary node at i1 over i0, binary
// node at i2 over i1 and i0.
inline Polynomial stratified_poly3() {
  FinSet i = FinSet::atoms({"i0", "i1", "i2"});
  FinSet b = FinSet::atoms({"leaf", "node1", "node2"});
  FinSet a = FinSet::atoms({"u", "v", "w"});
  FinFn h = FinFn::from_pairs(a, i,
                              {{Value::atom("u"), Value::atom("i0")},
                               {Value::atom("v"), Value::atom("i1")},
                               {Value::atom("w"), Value::atom("i0")}});
  FinFn g = FinFn::from_pairs(a, b,
                              {{Value::atom("u"), Value::atom("node1")},
                               {Value::atom("v"), Value::atom("node2")},
                               {Value::atom("w"), Value::atom("node2")}});
  FinFn f = FinFn::from_pairs(b, i,
                              {{Value::atom("leaf"), Value::atom("i0")},
                               {Value::atom("node1"), Value::atom("i1")},
                               {Value::atom("node2"), Value::atom("i2")}});
  return Polynomial(h, g, f);
}

// Brute-force enumeration of well-founded trees for a polynomial, computed by
// plain recursion on Values (independent of Family/functor machinery). Trees
// over index i are Pair(b, table{a -> subtree}) with f(b) = i, keyed by the
// positions a in g^{-1}(b), each subtree over h(a).
inline std::map<Value, std::set<Value>> enumerate_trees(const Polynomial& p,
                                                        std::size_t depth_cap) {
  std::map<Value, std::set<Value>> trees;  // index element -> trees
  for (const auto& i : p.I().elems()) trees[i] = {};
  for (std::size_t d = 0; d < depth_cap; ++d) {
    auto next = trees;
    for (const auto& b : p.B().elems()) {
      std::vector<Value> positions;
      for (const auto& a : p.A().elems()) {
        if (p.g(a) == b) positions.push_back(a);
      }
      // all assignments of positions to existing trees over h(a)
      std::vector<std::vector<Value>> cand;
      bool possible = true;
      for (const auto& a : positions) {
        std::vector<Value> c(trees[p.h(a)].begin(), trees[p.h(a)].end());
        if (c.empty()) possible = false;
        cand.push_back(c);
      }
      if (!possible && !positions.empty()) continue;
      std::vector<std::size_t> odom(positions.size(), 0);
      while (true) {
        Value::Entries es;
        for (std::size_t k = 0; k < positions.size(); ++k) {
          // section values carry the pullback encoding Pair(position, subtree)
          es.emplace_back(positions[k], Value::pair(positions[k], cand[k][odom[k]]));
        }
        next[p.f(b)].insert(Value::pair(b, Value::fn_table(std::move(es))));
        std::size_t k = positions.size();
        while (k > 0 && odom[k - 1] + 1 == cand[k - 1].size()) odom[--k] = 0;
        if (k == 0) break;
        ++odom[k - 1];
      }
    }
    if (next == trees) break;
    trees = std::move(next);
  }
  return trees;
}

// All subsets of the carrier closed under the algebra structure, as value
// sets: the brute-force side of the least-subalgebra oracle.
template <class C>
std::vector<std::vector<Value>> enumerate_subalgebras(const C& world,
                                                      const AlgebraT<C>& alg,
                                                      const std::vector<Value>& universe) {
  std::vector<std::vector<Value>> out;
  std::size_t n = universe.size();
  for (std::size_t mask = 0; mask < (1ull << n); ++mask) {
    std::vector<Value> subset;
    for (std::size_t k = 0; k < n; ++k) {
      if (mask & (1ull << k)) subset.push_back(universe[k]);
    }
    try {
      auto [sub, incl] = world.subobject(alg.carrier, subset);
      auto step = world.compose(alg.structure, alg.functor.on_map(incl));
      bool closed = true;
      for (const auto& v : world.map_image(step)) {
        if (!std::binary_search(subset.begin(), subset.end(), v)) closed = false;
      }
      if (closed) out.push_back(subset);
    } catch (const LawViolation&) {
      // not a subobject in this world
    }
  }
  return out;
}

}  // namespace wcat::test
