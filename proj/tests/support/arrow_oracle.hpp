#pragma once

// Independent dependent-product oracle for the arrow category Set^->,
// computed from the comma presentation by plain section enumeration. Used to
// cross-check the coreflexive-equalizer pushforward in the gluing world with
// H = identity, where E_G is the arrow category.

#include <map>

#include "wcat/finset.hpp"

namespace wcat::test {

struct ArrowObj {
  FinSet lv0, lv1;  // X(0) = X2, X(1) = X1
  FinFn t;          // transition X(0) -> X(1)
};

struct ArrowSquare {
  FinFn m0, m1;  // level maps; m1 . src.t = dst.t . m0
};

struct ArrowOver {
  ArrowObj x;
  FinFn p0, p1;  // projections to the base arrow object
};

// Fiber cardinalities of Pi_f X over each base element, level by level.
// f : A -> B a square, X over A.
struct ArrowPiCards {
  std::map<Value, std::size_t> lv0, lv1;
};

inline ArrowPiCards arrow_pi_cards(const ArrowObj& a, const ArrowObj& b, const ArrowSquare& f,
                                   const ArrowOver& x) {
  ArrowPiCards out;
  // level 1: plain sections over the level-1 fiber
  for (const auto& b1 : b.lv1.elems()) {
    std::size_t count = 1;
    for (const auto& a1 : a.lv1.elems()) {
      if (f.m1(a1) != b1) continue;
      std::size_t fiber = 0;
      for (const auto& x1 : x.x.lv1.elems()) {
        if (x.p1(x1) == a1) ++fiber;
      }
      count *= fiber;
    }
    out.lv1[b1] = count;
  }
  // level 0: pairs (s0, sm) with X.t . s0 = sm . A.t on the s0 positions
  for (const auto& b0 : b.lv0.elems()) {
    std::vector<Value> pos0, pos1;
    for (const auto& a0 : a.lv0.elems()) {
      if (f.m0(a0) == b0) pos0.push_back(a0);
    }
    Value b1 = b.t(b0);
    for (const auto& a1 : a.lv1.elems()) {
      if (f.m1(a1) == b1) pos1.push_back(a1);
    }
    auto candidates = [&](const FinFn& p, const FinSet& xs, const Value& base) {
      std::vector<Value> c;
      for (const auto& e : xs.elems()) {
        if (p(e) == base) c.push_back(e);
      }
      return c;
    };
    std::vector<std::vector<Value>> c0, c1;
    for (const auto& a0 : pos0) c0.push_back(candidates(x.p0, x.x.lv0, a0));
    for (const auto& a1 : pos1) c1.push_back(candidates(x.p1, x.x.lv1, a1));
    auto empty_in = [](const std::vector<std::vector<Value>>& cs) {
      for (const auto& c : cs) {
        if (c.empty()) return true;
      }
      return false;
    };
    if (empty_in(c0) || empty_in(c1)) {
      out.lv0[b0] = 0;
      continue;
    }
    std::size_t count = 0;
    std::vector<std::size_t> o0(pos0.size(), 0);
    bool done0 = false;
    while (!done0) {
      std::vector<std::size_t> o1(pos1.size(), 0);
      bool done1 = false;
      while (!done1) {
        bool ok = true;
        for (std::size_t k = 0; k < pos0.size() && ok; ++k) {
          Value lhs = x.x.t(c0[k][o0[k]]);
          Value a1 = a.t(pos0[k]);
          for (std::size_t j = 0; j < pos1.size(); ++j) {
            if (pos1[j] == a1 && c1[j][o1[j]] != lhs) ok = false;
          }
        }
        if (ok) ++count;
        std::size_t k = pos1.size();
        while (k > 0 && o1[k - 1] + 1 == c1[k - 1].size()) o1[--k] = 0;
        if (k == 0) {
          done1 = true;
        } else {
          ++o1[k - 1];
        }
      }
      std::size_t k = pos0.size();
      while (k > 0 && o0[k - 1] + 1 == c0[k - 1].size()) o0[--k] = 0;
      if (k == 0) {
        done0 = true;
      } else {
        ++o0[k - 1];
      }
    }
    out.lv0[b0] = count;
  }
  return out;
}

inline FinSet untag(const FinSet& s) {
  std::vector<Value> out;
  for (const auto& v : s.elems()) out.push_back(v.payload());
  return FinSet(out);
}

inline FinFn untag_fn(const FinFn& f) {
  FinSet d = untag(f.dom()), c = untag(f.cod());
  std::vector<std::pair<Value, Value>> pairs;
  for (const auto& tagged : f.dom().elems()) {
    pairs.emplace_back(tagged.payload(), f(tagged).payload());
  }
  return FinFn::from_pairs(d, c, pairs);
}

}  // namespace wcat::test
