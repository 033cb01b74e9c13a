#include "wcat/slice.hpp"

#include <algorithm>

#include "wcat/errors.hpp"

namespace wcat {

Family::Family(FinSet total_, FinSet index_, FinFn proj_)
    : total(std::move(total_)), index(std::move(index_)), proj(std::move(proj_)) {
  if (proj.dom() != total || proj.cod() != index) {
    throw ValidationError("Family: projection must be total -> index");
  }
}

Family Family::empty(FinSet index) {
  FinSet t;
  return Family(t, index, FinFn(t, index, {}));
}

Family Family::identity(FinSet index) {
  return Family(index, index, FinFn::identity(index));
}

Family Family::over(FinSet total, FinSet index, const std::function<Value(const Value&)>& f) {
  FinFn proj = FinFn::from_fn(total, index, f);
  return Family(std::move(total), std::move(index), std::move(proj));
}

FinSet Family::fiber(const Value& i) const {
  std::uint32_t ix = index.index_of(i);
  std::vector<Value> vs;
  for (std::uint32_t k = 0; k < total.size(); ++k) {
    if (proj.apply_idx(k) == ix) vs.push_back(total.at(k));
  }
  return FinSet(std::move(vs));
}

bool operator==(const Family& a, const Family& b) {
  return a.total == b.total && a.index == b.index && a.proj == b.proj;
}

std::string Family::str() const {
  std::string out = "[";
  bool first = true;
  for (const auto& i : index.elems()) {
    if (!first) out += " ";
    first = false;
    out += i.str() + ":" + std::to_string(fiber(i).size());
  }
  return out + "]";
}

SliceMap::SliceMap(Family src_, Family dst_, FinFn map_)
    : src(std::move(src_)), dst(std::move(dst_)), map(std::move(map_)) {
  if (map.dom() != src.total || map.cod() != dst.total) {
    throw TypingMismatch("SliceMap: map must be src.total -> dst.total");
  }
  if (src.index != dst.index) throw TypingMismatch("SliceMap: index mismatch");
  for (std::uint32_t i = 0; i < src.total.size(); ++i) {
    if (dst.proj.apply_idx(map.apply_idx(i)) != src.proj.apply_idx(i)) {
      throw TypingMismatch("SliceMap: does not commute over the index at " +
                           src.total.at(i).str());
    }
  }
}

SliceMap SliceMap::identity(const Family& x) {
  return SliceMap(x, x, FinFn::identity(x.total));
}

SliceMap SliceMap::from_fn(const Family& src, const Family& dst,
                           const std::function<Value(const Value&)>& f) {
  return SliceMap(src, dst, FinFn::from_fn(src.total, dst.total, f));
}

bool operator==(const SliceMap& a, const SliceMap& b) {
  return a.src == b.src && a.dst == b.dst && a.map == b.map;
}

std::string SliceMap::str() const { return map.str(); }

SliceMap compose(const SliceMap& g, const SliceMap& f) {
  if (!(f.dst == g.src)) throw TypingMismatch("compose(SliceMap): dst(f) != src(g)");
  return SliceMap(f.src, g.dst, compose(g.map, f.map));
}

bool is_mono(const SliceMap& f) { return is_mono(f.map); }
bool is_iso(const SliceMap& f) { return is_iso(f.map); }

SliceMap inverse(const SliceMap& f) {
  return SliceMap(f.dst, f.src, inverse(f.map));
}

// --- reindexing --------------------------------------------------------------

Family pullback_along(const FinFn& u, const Family& x) {
  if (u.cod() != x.index) throw TypingMismatch("pullback_along: cod(u) != index");
  std::vector<Value> elems;
  std::vector<std::uint32_t> proj;
  for (std::uint32_t i = 0; i < u.dom().size(); ++i) {
    for (std::uint32_t k = 0; k < x.total.size(); ++k) {
      if (x.proj.apply_idx(k) == u.apply_idx(i)) {
        elems.push_back(Value::pair(u.dom().at(i), x.total.at(k)));
        proj.push_back(i);
      }
    }
  }
  check_budget(elems.size());
  FinSet t(std::move(elems));
  return Family(t, u.dom(), FinFn(t, u.dom(), std::move(proj)));
}

SliceMap pullback_along_map(const FinFn& u, const SliceMap& m) {
  Family s = pullback_along(u, m.src);
  Family d = pullback_along(u, m.dst);
  return SliceMap::from_fn(s, d, [&](const Value& v) {
    return Value::pair(v.fst(), m(v.snd()));
  });
}

Family sigma_along(const FinFn& u, const Family& x) {
  if (u.dom() != x.index) throw TypingMismatch("sigma_along: dom(u) != index");
  return Family(x.total, u.cod(), compose(u, x.proj));
}

SliceMap sigma_along_map(const FinFn& u, const SliceMap& m) {
  return SliceMap(sigma_along(u, m.src), sigma_along(u, m.dst), m.map);
}

namespace {

// Positions of u over each codomain element, in canonical order.
std::vector<std::vector<std::uint32_t>> fibers_of(const FinFn& u) {
  std::vector<std::vector<std::uint32_t>> out(u.cod().size());
  for (std::uint32_t i = 0; i < u.dom().size(); ++i) out[u.apply_idx(i)].push_back(i);
  return out;
}

}  // namespace

Family pi_along(const FinFn& u, const Family& x) {
  if (u.dom() != x.index) throw TypingMismatch("pi_along: dom(u) != index of x");
  auto positions = fibers_of(u);
  // candidate elements per position
  std::vector<std::vector<std::uint32_t>> cand(u.dom().size());
  for (std::uint32_t k = 0; k < x.total.size(); ++k) {
    cand[x.proj.apply_idx(k)].push_back(k);
  }
  std::vector<Value> elems;
  std::vector<std::uint32_t> proj;
  std::size_t budget_total = 0;
  for (std::uint32_t b = 0; b < u.cod().size(); ++b) {
    std::size_t count = 1;
    for (auto a : positions[b]) {
      count *= cand[a].size();
      check_budget(budget_total + count);
      if (count == 0) break;
    }
    budget_total += count;
    check_budget(budget_total);
    if (count == 0) continue;
    const auto& pos = positions[b];
    std::vector<std::size_t> odom(pos.size(), 0);
    while (true) {
      Value::Entries es;
      es.reserve(pos.size());
      for (std::size_t i = 0; i < pos.size(); ++i) {
        es.emplace_back(u.dom().at(pos[i]), x.total.at(cand[pos[i]][odom[i]]));
      }
      elems.push_back(Value::pair(u.cod().at(b), Value::fn_table(std::move(es))));
      proj.push_back(b);
      std::size_t k = pos.size();
      while (k > 0 && odom[k - 1] + 1 == cand[pos[k - 1]].size()) odom[--k] = 0;
      if (k == 0) break;
      ++odom[k - 1];
    }
  }
  FinSet t(std::move(elems));
  return Family(t, u.cod(), FinFn(t, u.cod(), std::move(proj)));
}

SliceMap pi_along_map(const FinFn& u, const SliceMap& m) {
  Family s = pi_along(u, m.src);
  Family d = pi_along(u, m.dst);
  return SliceMap::from_fn(s, d, [&](const Value& v) {
    Value::Entries es;
    for (const auto& [k, val] : v.snd().entries()) es.emplace_back(k, m(val));
    return Value::pair(v.fst(), Value::fn_table(std::move(es)));
  });
}

SliceMap sigma_unit(const FinFn& u, const Family& x) {
  Family d = pullback_along(u, sigma_along(u, x));
  return SliceMap::from_fn(x, d, [&](const Value& v) {
    return Value::pair(x.proj(v), v);
  });
}

SliceMap sigma_counit(const FinFn& u, const Family& y) {
  Family s = sigma_along(u, pullback_along(u, y));
  return SliceMap::from_fn(s, y, [](const Value& v) { return v.snd(); });
}

SliceMap pi_unit(const FinFn& u, const Family& z) {
  Family uz = pullback_along(u, z);
  Family d = pi_along(u, uz);
  auto positions = fibers_of(u);
  return SliceMap::from_fn(z, d, [&](const Value& v) {
    std::uint32_t b = z.index.index_of(z.proj(v));
    Value::Entries es;
    for (auto a : positions[b]) {
      es.emplace_back(u.dom().at(a), Value::pair(u.dom().at(a), v));
    }
    return Value::pair(z.proj(v), Value::fn_table(std::move(es)));
  });
}

SliceMap pi_counit(const FinFn& u, const Family& x) {
  Family s = pullback_along(u, pi_along(u, x));
  return SliceMap::from_fn(s, x, [](const Value& v) {
    // v = Pair(a, Pair(b, table)); evaluate the section at a
    return v.snd().snd().table_at(v.fst());
  });
}

SliceMap transpose_pi(const FinFn& u, const Family& z, const Family& x, const SliceMap& phi) {
  Family uz = pullback_along(u, z);
  if (!(phi.src == uz) || !(phi.dst == x)) {
    throw TypingMismatch("transpose_pi: phi must be u*Z -> X");
  }
  Family pix = pi_along(u, x);
  auto positions = fibers_of(u);
  return SliceMap::from_fn(z, pix, [&](const Value& v) {
    std::uint32_t b = z.index.index_of(z.proj(v));
    Value::Entries es;
    for (auto a : positions[b]) {
      es.emplace_back(u.dom().at(a), phi(Value::pair(u.dom().at(a), v)));
    }
    return Value::pair(z.proj(v), Value::fn_table(std::move(es)));
  });
}

SliceMap untranspose_pi(const FinFn& u, const Family& z, const Family& x, const SliceMap& psi) {
  Family pix = pi_along(u, x);
  if (!(psi.src == z) || !(psi.dst == pix)) {
    throw TypingMismatch("untranspose_pi: psi must be Z -> Pi_u X");
  }
  Family uz = pullback_along(u, z);
  return SliceMap::from_fn(uz, x, [&](const Value& v) {
    return psi(v.snd()).snd().table_at(v.fst());
  });
}

SliceMap transpose_sigma(const FinFn& u, const Family& x, const Family& y, const SliceMap& phi) {
  Family sx = sigma_along(u, x);
  if (!(phi.src == sx) || !(phi.dst == y)) {
    throw TypingMismatch("transpose_sigma: phi must be Sigma_u X -> Y");
  }
  Family uy = pullback_along(u, y);
  return SliceMap::from_fn(x, uy, [&](const Value& v) {
    return Value::pair(x.proj(v), phi(v));
  });
}

SliceMap untranspose_sigma(const FinFn& u, const Family& x, const Family& y, const SliceMap& psi) {
  Family uy = pullback_along(u, y);
  if (!(psi.src == x) || !(psi.dst == uy)) {
    throw TypingMismatch("untranspose_sigma: psi must be X -> u*Y");
  }
  Family sx = sigma_along(u, x);
  return SliceMap::from_fn(sx, y, [&](const Value& v) { return psi(v).snd(); });
}

// --- limits ------------------------------------------------------------------

SliceProduct slice_product(const Family& x, const Family& y) {
  if (x.index != y.index) throw TypingMismatch("slice_product: index mismatch");
  std::vector<Value> elems;
  std::vector<std::uint32_t> t1, t2, proj;
  for (std::uint32_t i = 0; i < x.total.size(); ++i) {
    for (std::uint32_t j = 0; j < y.total.size(); ++j) {
      if (x.proj.apply_idx(i) == y.proj.apply_idx(j)) {
        elems.push_back(Value::pair(x.total.at(i), y.total.at(j)));
        t1.push_back(i);
        t2.push_back(j);
        proj.push_back(x.proj.apply_idx(i));
      }
    }
  }
  check_budget(elems.size());
  FinSet t(std::move(elems));
  Family obj(t, x.index, FinFn(t, x.index, std::move(proj)));
  return {obj, SliceMap(obj, x, FinFn(t, x.total, std::move(t1))),
          SliceMap(obj, y, FinFn(t, y.total, std::move(t2)))};
}

SliceMap tuple_map(const SliceMap& f, const SliceMap& g, const SliceProduct& p) {
  if (!(f.src == g.src)) throw TypingMismatch("tuple_map: sources differ");
  return SliceMap::from_fn(f.src, p.obj, [&](const Value& v) {
    return Value::pair(f(v), g(v));
  });
}

SliceEqualizer slice_equalizer(const SliceMap& f, const SliceMap& g) {
  if (!(f.src == g.src) || !(f.dst == g.dst)) {
    throw NotParallel("slice_equalizer: maps are not parallel");
  }
  auto eq = equalizer(f.map, g.map);
  Family obj(eq.obj, f.src.index, compose(f.src.proj, eq.incl));
  return {obj, SliceMap(obj, f.src, eq.incl)};
}

SlicePullback slice_pullback(const SliceMap& f, const SliceMap& g) {
  if (!(f.dst == g.dst)) throw CodMismatch("slice_pullback: cospan mismatch");
  auto pb = pullback(f.map, g.map);
  Family obj(pb.obj, f.src.index, compose(f.src.proj, pb.p1));
  return {obj, SliceMap(obj, f.src, pb.p1), SliceMap(obj, g.src, pb.p2)};
}

SliceCoproduct slice_coproduct(const Family& x, const Family& y) {
  if (x.index != y.index) throw TypingMismatch("slice_coproduct: index mismatch");
  auto c = coproduct(x.total, y.total);
  FinFn proj = copair(x.proj, y.proj, c);
  Family obj(c.obj, x.index, proj);
  return {obj, SliceMap(x, obj, c.inl), SliceMap(y, obj, c.inr)};
}

SliceMap slice_copair(const SliceMap& f, const SliceMap& g, const SliceCoproduct& c) {
  if (!(f.dst == g.dst)) throw TypingMismatch("slice_copair: destinations differ");
  FinFn m = copair(f.map, g.map, {c.obj.total, c.inl.map, c.inr.map});
  return SliceMap(c.obj, f.dst, m);
}

std::vector<SliceMap> slice_hom(const Family& x, const Family& y) {
  if (x.index != y.index) throw TypingMismatch("slice_hom: index mismatch");
  std::vector<std::vector<std::uint32_t>> cand(x.total.size());
  std::size_t count = 1;
  for (std::uint32_t i = 0; i < x.total.size(); ++i) {
    for (std::uint32_t j = 0; j < y.total.size(); ++j) {
      if (y.proj.apply_idx(j) == x.proj.apply_idx(i)) cand[i].push_back(j);
    }
    count *= cand[i].size();
    check_budget(count);
    if (count == 0) return {};
  }
  std::vector<SliceMap> out;
  if (x.total.empty()) {
    out.push_back(SliceMap(x, y, FinFn(x.total, y.total, {})));
    return out;
  }
  std::vector<std::size_t> odom(x.total.size(), 0);
  while (true) {
    std::vector<std::uint32_t> table(x.total.size());
    for (std::size_t i = 0; i < table.size(); ++i) table[i] = cand[i][odom[i]];
    out.push_back(SliceMap(x, y, FinFn(x.total, y.total, std::move(table))));
    std::size_t k = odom.size();
    while (k > 0 && odom[k - 1] + 1 == cand[k - 1].size()) odom[--k] = 0;
    if (k == 0) break;
    ++odom[k - 1];
  }
  return out;
}

Family subfamily(const Family& x, const std::vector<Value>& elems) {
  FinSet sub(elems);
  FinFn incl = subset_incl(sub, x.total);
  return Family(sub, x.index, compose(x.proj, incl));
}

SliceMap subfamily_incl(const Family& x, const std::vector<Value>& elems) {
  Family sub = subfamily(x, elems);
  return SliceMap(sub, x, subset_incl(sub.total, x.total));
}

SliceMap factor_through_mono(const SliceMap& incl, const SliceMap& m) {
  if (!(incl.dst == m.dst)) throw TypingMismatch("factor_through_mono: codomain mismatch");
  return SliceMap(m.src, incl.src, factor_through_mono(incl.map, m.map));
}

// --- flattening ---------------------------------------------------------------

Family flatten_obj(const Family& k, const Family& x, const SliceMap& p) {
  if (!(p.src == x) || !(p.dst == k)) throw TypingMismatch("flatten_obj: bad projection");
  return Family(x.total, k.total, p.map);
}

Unflattened unflatten_obj(const Family& k, const Family& y) {
  if (y.index != k.total) throw TypingMismatch("unflatten_obj: y not over k.total");
  Family obj(y.total, k.index, compose(k.proj, y.proj));
  return {obj, SliceMap(obj, k, y.proj)};
}

SliceMap unflatten_map(const Family& k, const SliceMap& m) {
  auto s = unflatten_obj(k, m.src);
  auto d = unflatten_obj(k, m.dst);
  return SliceMap(s.obj, d.obj, m.map);
}

SliceMap flatten_map(const Family& k, const SliceMap& m, const Family& flat_src,
                     const Family& flat_dst) {
  (void)k;
  return SliceMap(flat_src, flat_dst, m.map);
}

}  // namespace wcat
