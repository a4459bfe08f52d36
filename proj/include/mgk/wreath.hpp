#pragma once

#include <cstdint>
#include <vector>

#include "mgk/group.hpp"

namespace mgk {

/// Restricted wreath product G wr H = (direct sum over H of G) x| H.
/// Payload: List{ support, top } with support a sorted List of List{key,val}
/// pairs, keys canonical top values, values non-identity base values.
/// Multiplication convention (normative, pinned by the delta-shift test):
///   (f1,h1)(f2,h2) = (f1 . (h1 |> f2), h1 h2),  (h |> f)(x) = f(x h).
class WreathGroup final : public Group {
 public:
  WreathGroup(GroupPtr base, GroupPtr top);

  std::string name() const override;
  Value identity() const override;
  Value multiply(const Value& a, const Value& b) const override;
  Value inverse(const Value& a) const override;
  bool contains(const Value& v) const override;
  BigOrder order() const override;
  BigOrder element_order(const Value& v) const override;
  std::string format(const Value& v) const override;

  const GroupPtr& base() const { return base_; }
  const GroupPtr& top() const { return top_; }

  /// (f, top) from explicit support; identity base values are dropped.
  Value make(std::vector<std::pair<Value, Value>> support, Value top) const;
  /// g delta_key as a base-only element (top = identity)
  Value delta(const Value& key, const Value& g) const;
  Value shift(const Value& top) const;  // (e, top)

  static std::vector<std::pair<Value, Value>> support_of(const Value& v);
  static Value top_of(const Value& v);

 private:
  Value translate(const Value& f, const Value& h) const;  // h |> f
  GroupPtr base_, top_;
};

std::shared_ptr<const WreathGroup> wreath_group(GroupPtr base, GroupPtr top);

/// Marked wreath product with the standard marking
/// ((s_1 d_e, e), ..., (s_k d_e, e), (e, t_1), ..., (e, t_l)).
MarkedGroup wreath_product(const MarkedGroup& base, const MarkedGroup& top);

/// Sidon condition: all pairwise differences distinct. Returns the colliding
/// difference as ((i,j),(i',j')) indices when violated.
struct SidonCheck {
  bool ok = true;
  std::array<std::size_t, 4> witness{};  // i, j, i2, j2 with a_j-a_i == a_j2-a_i2
};
SidonCheck check_sidon(const std::vector<std::int64_t>& placement);

/// Hall-type marking of G wr Z: w = (f, 0) with f(placement[j]) = s_j,
/// u = (e, 1). Placement must be a Sidon set of size k.
struct HallMarking {
  MarkedGroup marked;  // (<w,u>; w, u) inside G wr Z
  GroupElement w, u;
};
HallMarking hall_wreath_marking(const MarkedGroup& mg,
                                const std::vector<std::int64_t>& placement);

/// Absorption re-marking S_m of G wr Z: z_j supported at 2^m (j-1), plus the
/// shift t. A (k+1)-marking.
MarkedGroup absorption_marking(const MarkedGroup& mg, int m);

/// Marked limit (C_1 x ... x C_k) wr Z with marking
/// ((c_1 d_0, 0), ..., (c_k d_0, 0), (e, 1)); C_j cyclic of the given orders.
MarkedGroup abelian_lamplighter_marked(const std::vector<std::int64_t>& orders);

/// C wr Z marked ((c d_0, 0), (e, 1)) for cyclic C of the given order.
MarkedGroup cyclic_lamplighter_marked(std::int64_t order);

}  // namespace mgk
