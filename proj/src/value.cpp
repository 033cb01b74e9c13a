#include "wcat/value.hpp"

#include <algorithm>
#include <optional>

#include "wcat/errors.hpp"

namespace wcat {

struct Value::Node {
  Kind kind;
  std::size_t hash;
  Side side = Side::Left;
  std::string name;
  std::optional<Value> a, b;  // Pair components; Tag payload lives in a
  Entries entries;
};

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  // boost-style combine
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::size_t hash_string(const std::string& s) {
  return std::hash<std::string>{}(s);
}

}  // namespace

Value Value::atom(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Atom;
  n->name = std::move(name);
  n->hash = mix(1, hash_string(n->name));
  return Value(std::move(n));
}

Value Value::unit() {
  static const std::shared_ptr<const Node> node = [] {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Unit;
    n->hash = mix(2, 0);
    return n;
  }();
  return Value(node);
}

Value Value::pair(Value fst, Value snd) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Pair;
  n->hash = mix(mix(3, fst.hash()), snd.hash());
  n->a = std::move(fst);
  n->b = std::move(snd);
  return Value(std::move(n));
}

Value Value::tag(Side side, Value payload) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Tag;
  n->side = side;
  n->hash = mix(mix(4, static_cast<std::size_t>(side)), payload.hash());
  n->a = std::move(payload);
  return Value(std::move(n));
}

Value Value::fn_table(Entries entries) {
  std::sort(entries.begin(), entries.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  for (std::size_t i = 1; i < entries.size(); ++i) {
    if (entries[i - 1].first == entries[i].first) {
      throw ValidationError("fn_table: duplicate key " + entries[i].first.str());
    }
  }
  auto n = std::make_shared<Node>();
  n->kind = Kind::FnTable;
  std::size_t h = 5;
  for (const auto& [k, v] : entries) h = mix(mix(h, k.hash()), v.hash());
  n->hash = h;
  n->entries = std::move(entries);
  return Value(std::move(n));
}

Value::Kind Value::kind() const { return node_->kind; }

const std::string& Value::atom_name() const {
  if (kind() != Kind::Atom) throw Error("atom_name on non-atom " + str());
  return node_->name;
}

const Value& Value::fst() const {
  if (kind() != Kind::Pair) throw Error("fst on non-pair " + str());
  return *node_->a;
}

const Value& Value::snd() const {
  if (kind() != Kind::Pair) throw Error("snd on non-pair " + str());
  return *node_->b;
}

Value::Side Value::side() const {
  if (kind() != Kind::Tag) throw Error("side on non-tag " + str());
  return node_->side;
}

const Value& Value::payload() const {
  if (kind() != Kind::Tag) throw Error("payload on non-tag " + str());
  return *node_->a;
}

const Value::Entries& Value::entries() const {
  if (kind() != Kind::FnTable) throw Error("entries on non-table " + str());
  return node_->entries;
}

const Value& Value::table_at(const Value& key) const {
  const auto& es = entries();
  auto it = std::lower_bound(es.begin(), es.end(), key,
                             [](const auto& e, const Value& k) { return e.first < k; });
  if (it == es.end() || !(it->first == key)) {
    throw Error("table_at: missing key " + key.str() + " in " + str());
  }
  return it->second;
}

bool Value::table_has(const Value& key) const {
  const auto& es = entries();
  auto it = std::lower_bound(es.begin(), es.end(), key,
                             [](const auto& e, const Value& k) { return e.first < k; });
  return it != es.end() && it->first == key;
}

std::size_t Value::hash() const { return node_->hash; }

int compare(const Value& a, const Value& b) {
  if (a.node_ == b.node_) return 0;
  auto ka = static_cast<int>(a.kind()), kb = static_cast<int>(b.kind());
  if (ka != kb) return ka < kb ? -1 : 1;
  switch (a.kind()) {
    case Value::Kind::Atom: {
      int c = a.node_->name.compare(b.node_->name);
      return c < 0 ? -1 : (c > 0 ? 1 : 0);
    }
    case Value::Kind::Unit:
      return 0;
    case Value::Kind::Pair: {
      if (int c = compare(*a.node_->a, *b.node_->a)) return c;
      return compare(*a.node_->b, *b.node_->b);
    }
    case Value::Kind::Tag: {
      if (a.node_->side != b.node_->side)
        return a.node_->side == Value::Side::Left ? -1 : 1;
      return compare(*a.node_->a, *b.node_->a);
    }
    case Value::Kind::FnTable: {
      const auto& ea = a.node_->entries;
      const auto& eb = b.node_->entries;
      std::size_t n = std::min(ea.size(), eb.size());
      for (std::size_t i = 0; i < n; ++i) {
        if (int c = compare(ea[i].first, eb[i].first)) return c;
        if (int c = compare(ea[i].second, eb[i].second)) return c;
      }
      if (ea.size() != eb.size()) return ea.size() < eb.size() ? -1 : 1;
      return 0;
    }
  }
  return 0;
}

bool operator==(const Value& a, const Value& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash()) return false;
  return compare(a, b) == 0;
}

bool operator<(const Value& a, const Value& b) { return compare(a, b) < 0; }

std::string Value::str() const {
  switch (kind()) {
    case Kind::Atom:
      return node_->name;
    case Kind::Unit:
      return "()";
    case Kind::Pair:
      return "(" + node_->a->str() + "," + node_->b->str() + ")";
    case Kind::Tag:
      return (node_->side == Side::Left ? "l(" : "r(") + node_->a->str() + ")";
    case Kind::FnTable: {
      std::string out = "{";
      bool first = true;
      for (const auto& [k, v] : node_->entries) {
        if (!first) out += ",";
        first = false;
        out += k.str() + "=>" + v.str();
      }
      return out + "}";
    }
  }
  return "?";
}

}  // namespace wcat
