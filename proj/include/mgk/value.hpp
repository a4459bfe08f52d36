#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace mgk {

/// Canonical element payload. Every backend normalizes its elements into this
/// recursive shape, so element equality is structural equality of payloads:
///  - Int:  residues, integers (Z, Z/n)
///  - Vec:  packed int32 data (permutation images, matrix entries, residue pairs)
///  - List: recursive tuples (product components, wreath support maps,
///          semidirect pairs, amalgam normal forms)
/// Values are immutable; Lists share storage on copy.
class Value {
 public:
  using List = std::vector<Value>;

  Value() : v_(std::int64_t{0}) {}
  explicit Value(std::int64_t n) : v_(n) {}
  explicit Value(std::vector<std::int32_t> vec) : v_(std::move(vec)) {}
  explicit Value(List items)
      : v_(std::make_shared<const List>(std::move(items))) {}

  bool is_int() const { return v_.index() == 0; }
  bool is_vec() const { return v_.index() == 1; }
  bool is_list() const { return v_.index() == 2; }

  std::int64_t as_int() const { return std::get<0>(v_); }
  const std::vector<std::int32_t>& as_vec() const { return std::get<1>(v_); }
  const List& as_list() const { return *std::get<2>(v_); }

  friend bool operator==(const Value& a, const Value& b) {
    if (a.v_.index() != b.v_.index()) return false;
    switch (a.v_.index()) {
      case 0: return std::get<0>(a.v_) == std::get<0>(b.v_);
      case 1: return std::get<1>(a.v_) == std::get<1>(b.v_);
      default: {
        const List& x = a.as_list();
        const List& y = b.as_list();
        if (&x == &y) return true;
        return x == y;
      }
    }
  }
  friend bool operator!=(const Value& a, const Value& b) { return !(a == b); }

  // Total structural order: by kind tag, then lexicographic payload. Used for
  // canonical sorting (ball vertices, wreath supports, transversal choices).
  friend bool operator<(const Value& a, const Value& b) {
    if (a.v_.index() != b.v_.index()) return a.v_.index() < b.v_.index();
    switch (a.v_.index()) {
      case 0: return std::get<0>(a.v_) < std::get<0>(b.v_);
      case 1: return std::get<1>(a.v_) < std::get<1>(b.v_);
      default: {
        const List& x = a.as_list();
        const List& y = b.as_list();
        if (&x == &y) return false;
        return x < y;
      }
    }
  }

  std::size_t hash() const;
  std::string repr() const;  // compact debugging form

 private:
  std::variant<std::int64_t, std::vector<std::int32_t>,
               std::shared_ptr<const List>>
      v_;
};

struct ValueHash {
  std::size_t operator()(const Value& v) const { return v.hash(); }
};

}  // namespace mgk
