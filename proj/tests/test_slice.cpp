#include <doctest.h>

#include "support/oracles.hpp"
#include "wcat/errors.hpp"
#include "wcat/slice.hpp"

using namespace wcat;
using namespace wcat::test;

TEST_CASE("pullback_along identity is iso via pair stripping") {
  Rng rng(5);
  auto index = FinSet::atoms({"i", "j"});
  auto x = gen_family(rng, index, 3, "x");
  auto px = pullback_along(FinFn::identity(index), x);
  CHECK(px.total.size() == x.total.size());
  auto strip = SliceMap::from_fn(px, x, [](const Value& v) { return v.snd(); });
  CHECK(is_iso(strip));
}

TEST_CASE("pullback_along a constant map copies one fiber") {
  auto index = FinSet::atoms({"i", "j"});
  auto index2 = FinSet::atoms({"p", "q", "r"});
  Rng rng(6);
  auto x = gen_family(rng, index, 3, "x");
  auto u = FinFn::constant(index2, index, Value::atom("i"));
  auto px = pullback_along(u, x);
  for (const auto& i2 : index2.elems()) {
    CHECK(px.fiber(i2).size() == x.fiber(Value::atom("i")).size());
  }
}

TEST_CASE("pullback_along fiber cardinalities match the per-point oracle") {
  Rng rng(7);
  for (int t = 0; t < 10; ++t) {
    auto i1 = gen_finset_nonempty(rng, 3, "i");
    auto i2 = gen_finset_nonempty(rng, 3, "j");
    auto u = gen_fn(rng, i2, i1);
    auto x = gen_family(rng, i1, 3, "x");
    auto px = pullback_along(*u, x);
    for (const auto& p : i2.elems()) {
      CHECK(px.fiber(p).size() == x.fiber((*u)(p)).size());
    }
  }
}

TEST_CASE("sigma_along identity leaves the family unchanged") {
  Rng rng(8);
  auto index = FinSet::atoms({"i"});
  auto x = gen_family(rng, index, 4, "x");
  CHECK(sigma_along(FinFn::identity(index), x) == x);
}

TEST_CASE("sigma to a point collapses to one fiber") {
  Rng rng(9);
  auto index = FinSet::atoms({"i", "j"});
  auto x = gen_family(rng, index, 3, "x");
  auto pt = FinSet::unit_set();
  auto bang = FinFn::constant(index, pt, Value::unit());
  auto sx = sigma_along(bang, x);
  CHECK(sx.fiber(Value::unit()).size() == x.total.size());
}

TEST_CASE("sigma adjunction: hom counts agree at sizes <= 3") {
  Rng rng(10);
  for (int t = 0; t < 10; ++t) {
    auto i1 = gen_finset_nonempty(rng, 2, "i");
    auto i2 = gen_finset_nonempty(rng, 2, "j");
    auto u = gen_fn(rng, i1, i2);
    auto x = gen_family(rng, i1, 2, "x");
    auto y = gen_family(rng, i2, 2, "y");
    CHECK(slice_hom(sigma_along(*u, x), y).size() ==
          slice_hom(x, pullback_along(*u, y)).size());
  }
}

TEST_CASE("pi fiber over a point is the product of fiber sizes") {
  auto a = FinSet::atoms({"a", "b"});
  auto pt = FinSet::unit_set();
  auto u = FinFn::constant(a, pt, Value::unit());
  std::vector<Value> total = {Value::atom("x0"), Value::atom("x1"), Value::atom("y0"),
                              Value::atom("y1"), Value::atom("y2")};
  FinSet t(total);
  auto x = Family::over(t, a, [](const Value& v) {
    return v.atom_name()[0] == 'x' ? Value::atom("a") : Value::atom("b");
  });
  auto pix = pi_along(u, x);
  CHECK(pix.fiber(Value::unit()).size() == 6);
}

TEST_CASE("pi over an empty fiber is a singleton") {
  auto a = FinSet::atoms({"a"});
  auto b = FinSet::atoms({"p", "q"});
  auto u = FinFn::constant(a, b, Value::atom("p"));
  Rng rng(11);
  auto x = gen_family(rng, a, 2, "x");
  auto pix = pi_along(u, x);
  CHECK(pix.fiber(Value::atom("q")).size() == 1);
}

TEST_CASE("pi adjunction bijection, naturally in Z") {
  Rng rng(12);
  for (int t = 0; t < 8; ++t) {
    auto ia = gen_finset_nonempty(rng, 2, "a");
    auto ib = gen_finset_nonempty(rng, 2, "b");
    auto u = gen_fn(rng, ia, ib);
    auto x = gen_family(rng, ia, 2, "x");
    auto z = gen_family(rng, ib, 2, "z");
    auto uz = pullback_along(*u, z);
    auto pix = pi_along(*u, x);
    auto below = slice_hom(uz, x);
    auto above = slice_hom(z, pix);
    CHECK(below.size() == above.size());
    // transpose is a bijection: round trips are identities
    for (const auto& phi : below) {
      auto psi = transpose_pi(*u, z, x, phi);
      CHECK(untranspose_pi(*u, z, x, psi) == phi);
    }
    for (const auto& psi : above) {
      auto phi = untranspose_pi(*u, z, x, psi);
      CHECK(transpose_pi(*u, z, x, phi) == psi);
    }
    // naturality in Z along a random reindexing w : Z' -> Z
    auto z2 = gen_family(rng, ib, 2, "w");
    auto w = gen_slice_map(rng, z2, z);
    if (w && !below.empty()) {
      const auto& phi = below[rng.below(below.size())];
      auto psi = transpose_pi(*u, z, x, phi);
      auto lhs = compose(psi, *w);
      auto phi2 = compose(phi, pullback_along_map(*u, *w));
      auto rhs = transpose_pi(*u, z2, x, phi2);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("triangle identity: transpose of the counit is the identity") {
  Rng rng(13);
  auto ia = gen_finset_nonempty(rng, 2, "a");
  auto ib = gen_finset_nonempty(rng, 2, "b");
  auto u = gen_fn(rng, ia, ib);
  auto x = gen_family(rng, ia, 2, "x");
  auto pix = pi_along(*u, x);
  auto eps = pi_counit(*u, x);
  CHECK(transpose_pi(*u, pix, x, eps) == SliceMap::identity(pix));
}

TEST_CASE("slice_of_slice round trips and preserves hom cardinalities") {
  Rng rng(14);
  auto index = FinSet::atoms({"i", "j"});
  auto k = gen_family(rng, index, 3, "k");
  // round-trip an object of (E/I)/K
  auto x = gen_family(rng, index, 2, "x");
  auto p = gen_slice_map(rng, x, k);
  if (p) {
    auto flat = flatten_obj(k, x, *p);
    auto back = unflatten_obj(k, flat);
    CHECK(back.obj == x);
    CHECK(back.proj == *p);
    // identity K over I: identification is the identity on totals
    auto idk = Family::identity(index);
    auto q = SliceMap(x, idk, FinFn(x.total, index, x.proj.table()));
    auto flat2 = flatten_obj(idk, x, q);
    CHECK(flat2.total == x.total);
    // hom sets agree across the identification
    auto y = gen_family(rng, index, 2, "y");
    auto py = gen_slice_map(rng, y, k);
    if (py) {
      auto flat_y = flatten_obj(k, y, *py);
      std::size_t upstairs = slice_hom(flat, flat_y).size();
      std::size_t downstairs = 0;
      for (const auto& m : slice_hom(x, y)) {
        if (compose(*py, m) == *p) ++downstairs;
      }
      CHECK(upstairs == downstairs);
    }
  }
}

TEST_CASE("fiberwise cardinality law for pi") {
  Rng rng(15);
  for (int t = 0; t < 10; ++t) {
    auto ia = gen_finset_nonempty(rng, 3, "a");
    auto ib = gen_finset_nonempty(rng, 3, "b");
    auto u = gen_fn(rng, ia, ib);
    auto x = gen_family(rng, ia, 3, "x");
    auto pix = pi_along(*u, x);
    for (const auto& b : ib.elems()) {
      std::size_t expect = 1;
      for (const auto& a : ia.elems()) {
        if ((*u)(a) == b) expect *= x.fiber(a).size();
      }
      CHECK(pix.fiber(b).size() == expect);
    }
  }
}

TEST_CASE("pi along an iso composed with pullback is naturally isomorphic to identity") {
  Rng rng(16);
  auto ia = FinSet::atoms({"a0", "a1", "a2"});
  auto ib = FinSet::atoms({"b0", "b1", "b2"});
  auto u = FinFn::from_pairs(ia, ib,
                             {{Value::atom("a0"), Value::atom("b1")},
                              {Value::atom("a1"), Value::atom("b2")},
                              {Value::atom("a2"), Value::atom("b0")}});
  for (int t = 0; t < 5; ++t) {
    auto x = gen_family(rng, ia, 3, "x");
    auto roundtrip = pullback_along(u, pi_along(u, x));
    auto iso = SliceMap::from_fn(roundtrip, x, [&](const Value& v) {
      return v.snd().snd().table_at(v.fst());
    });
    CHECK(is_iso(iso));
  }
}

TEST_CASE("budget propagates through pi") {
  BudgetGuard guard(100);
  auto a = FinSet::atoms({"a0", "a1", "a2", "a3"});
  auto pt = FinSet::unit_set();
  auto u = FinFn::constant(a, pt, Value::unit());
  std::vector<Value> total;
  for (int i = 0; i < 4; ++i) {
    for (int k = 0; k < 4; ++k) {
      total.push_back(Value::atom("e" + std::to_string(i) + std::to_string(k)));
    }
  }
  FinSet t(total);
  auto x = Family::over(t, a, [](const Value& v) {
    return Value::atom(std::string("a") + v.atom_name()[1]);
  });
  CHECK_THROWS_AS(pi_along(u, x), BudgetExceeded);
}
