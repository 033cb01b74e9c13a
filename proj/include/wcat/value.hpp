#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace wcat {

// Canonical element encoding. Values are immutable trees with a global total
// order; FnTable entries are strictly sorted by key. Every set constructor in
// the library enumerates in this order, which is what makes reruns
// bit-stable.
class Value {
 public:
  enum class Kind : std::uint8_t { Atom = 0, Unit = 1, Pair = 2, Tag = 3, FnTable = 4 };
  enum class Side : std::uint8_t { Left = 0, Right = 1 };
  using Entries = std::vector<std::pair<Value, Value>>;

  Value() : Value(unit()) {}

  static Value atom(std::string name);
  static Value unit();
  static Value pair(Value fst, Value snd);
  static Value tag(Side side, Value payload);
  static Value tag_left(Value payload) { return tag(Side::Left, std::move(payload)); }
  static Value tag_right(Value payload) { return tag(Side::Right, std::move(payload)); }
  // Sorts entries by key; duplicate keys are a ValidationError.
  static Value fn_table(Entries entries);

  Kind kind() const;
  const std::string& atom_name() const;
  const Value& fst() const;
  const Value& snd() const;
  Side side() const;
  const Value& payload() const;
  const Entries& entries() const;
  const Value& table_at(const Value& key) const;  // throws Error if absent
  bool table_has(const Value& key) const;

  std::size_t hash() const;
  std::string str() const;

  friend bool operator==(const Value& a, const Value& b);
  friend bool operator!=(const Value& a, const Value& b) { return !(a == b); }
  friend bool operator<(const Value& a, const Value& b);
  friend bool operator<=(const Value& a, const Value& b) { return !(b < a); }
  friend bool operator>(const Value& a, const Value& b) { return b < a; }
  friend bool operator>=(const Value& a, const Value& b) { return !(a < b); }

 private:
  struct Node;
  explicit Value(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;

  friend int compare(const Value& a, const Value& b);
};

// Three-way structural comparison consistent with operator<.
int compare(const Value& a, const Value& b);

struct ValueHash {
  std::size_t operator()(const Value& v) const { return v.hash(); }
};

}  // namespace wcat
