#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mgk/error.hpp"
#include "mgk/order.hpp"
#include "mgk/value.hpp"

namespace mgk {

/// A computable group backend: multiplication, inversion and canonical
/// payloads for one element universe. Instances are immutable and shared;
/// every operation is a pure function of canonical Values.
class Group {
 public:
  virtual ~Group() = default;

  /// Structural name; two handles with equal names are the same backend.
  virtual std::string name() const = 0;

  virtual Value identity() const = 0;
  virtual Value multiply(const Value& a, const Value& b) const = 0;
  virtual Value inverse(const Value& a) const = 0;

  /// Payload validity in this universe (canonical shape, bijectivity,
  /// determinant-1, ...).
  virtual bool contains(const Value& v) const = 0;

  /// Order of the whole universe, when known by formula.
  virtual BigOrder order() const { return BigOrder::infinite(); }

  /// Exact element order. Default: iterate powers up to a cap.
  virtual BigOrder element_order(const Value& v) const;

  virtual std::string format(const Value& v) const { return v.repr(); }

  bool same_as(const Group& other) const { return name() == other.name(); }
};

using GroupPtr = std::shared_ptr<const Group>;

/// An element bound to its backend. Arithmetic requires matching backends.
class GroupElement {
 public:
  GroupElement() = default;
  GroupElement(GroupPtr g, Value v) : group_(std::move(g)), value_(std::move(v)) {}

  const GroupPtr& group() const { return group_; }
  const Value& value() const { return value_; }

  bool is_identity() const { return value_ == group_->identity(); }

  friend GroupElement operator*(const GroupElement& a, const GroupElement& b) {
    a.check_compatible(b);
    return {a.group_, a.group_->multiply(a.value_, b.value_)};
  }

  GroupElement inverse() const { return {group_, group_->inverse(value_)}; }

  GroupElement power(std::int64_t n) const;

  /// [a, b] = a^-1 b^-1 a b
  friend GroupElement commutator(const GroupElement& a, const GroupElement& b) {
    a.check_compatible(b);
    const Group& g = *a.group_;
    Value r = g.multiply(
        g.multiply(g.inverse(a.value_), g.inverse(b.value_)),
        g.multiply(a.value_, b.value_));
    return {a.group_, std::move(r)};
  }

  GroupElement conjugate_by(const GroupElement& t) const {
    // t a t^-1
    check_compatible(t);
    const Group& g = *group_;
    return {group_, g.multiply(g.multiply(t.value_, value_), g.inverse(t.value_))};
  }

  BigOrder order() const { return group_->element_order(value_); }

  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.group_->same_as(*b.group_) && a.value_ == b.value_;
  }
  friend bool operator!=(const GroupElement& a, const GroupElement& b) {
    return !(a == b);
  }

  std::string str() const { return group_->format(value_); }

 private:
  void check_compatible(const GroupElement& other) const {
    if (!group_ || !other.group_ || !group_->same_as(*other.group_))
      throw BackendMismatch("elements from different backends: " +
                            (group_ ? group_->name() : "<null>") + " vs " +
                            (other.group_ ? other.group_->name() : "<null>"));
  }

  GroupPtr group_;
  Value value_;
};

/// A marked group (G; s_1, ..., s_k): a backend handle plus an ordered
/// generator tuple. The generated subgroup is the group the marking denotes;
/// for subgroup markings it can be a proper subgroup of the universe.
class MarkedGroup {
 public:
  MarkedGroup() = default;
  MarkedGroup(GroupPtr g, std::vector<Value> marking, std::string label = "");

  std::size_t k() const { return marking_.size(); }
  const GroupPtr& group() const { return group_; }
  const std::vector<Value>& marking() const { return marking_; }
  GroupElement gen(std::size_t j) const { return {group_, marking_[j]}; }
  const std::string& label() const { return label_; }

  std::string describe() const;

 private:
  GroupPtr group_;
  std::vector<Value> marking_;
  std::string label_;
};

/// Componentwise direct product; payload List of factor payloads.
class ProductGroup final : public Group {
 public:
  explicit ProductGroup(std::vector<GroupPtr> fs) : fs_(std::move(fs)) {}
  std::string name() const override;
  Value identity() const override;
  Value multiply(const Value& a, const Value& b) const override;
  Value inverse(const Value& a) const override;
  bool contains(const Value& v) const override;
  BigOrder order() const override;
  BigOrder element_order(const Value& v) const override;
  std::string format(const Value& v) const override;
  const std::vector<GroupPtr>& factors() const { return fs_; }

 private:
  std::vector<GroupPtr> fs_;
};

// --- basic backend factories ---------------------------------------------

GroupPtr cyclic_group(std::int64_t n);           // Z/nZ, payload Int in [0,n)
GroupPtr integer_group();                        // Z
GroupPtr lattice_group(int d);                   // Z^d, payload Vec
GroupPtr dihedral_group(std::int64_t n);         // degree n (order 2n), n >= 2
GroupPtr dihedral_group_infinite();              // D_inf
GroupPtr symmetric_group(int n);                 // payload Vec of images
GroupPtr alternating_group(int n);
GroupPtr special_linear_group(int n, int p);     // n x n over F_p, det 1
GroupPtr direct_product_group(std::vector<GroupPtr> factors);

MarkedGroup cyclic_marked(std::int64_t n);       // (Z/nZ; 1)
MarkedGroup integers_marked();                   // (Z; 1)
MarkedGroup lattice_marked(int d);               // (Z^d; e_1..e_d)
MarkedGroup dihedral_marked(std::int64_t n);     // (D_n; c, d)
MarkedGroup dihedral_marked_infinite();
MarkedGroup symmetric_marked(int n);             // (Sym(n); (0 1), (0 1 .. n-1))
MarkedGroup klein8_marked();                     // ((Z/2)^3; a, b, c)
MarkedGroup direct_product_marked(const std::vector<MarkedGroup>& factors);

// dihedral helpers: c = (0,-1), d = (-1,-1) as symmetries x -> eps*x + r,
// so c*d is the rotation x -> x+1 of order n.
Value dihedral_value(std::int64_t rot, bool reflected, std::int64_t n /*0=inf*/);

// permutation payload bridges
GroupElement perm_element(int n, const std::vector<std::int32_t>& images,
                          bool alternating = false);

/// Parity of a permutation-backend element (+1/-1). Rejects other backends.
int perm_sign_of(const GroupElement& e);

}  // namespace mgk
