#pragma once

#include "mgk/group.hpp"
#include "mgk/modmat.hpp"

namespace mgk {

/// Finitary-permutation-by-translation group over a countable base group G:
/// elements (pi, gamma) acting as x -> pi(x) * gamma with pi a finitely
/// supported permutation of G. With even_only, pi is restricted to the
/// finitary alternating group. Payload: List{ map, shift } where map is a
/// sorted List of List{src, dst} pairs without fixed points.
class FinitarySymGroup final : public Group {
 public:
  FinitarySymGroup(GroupPtr base, bool even_only);

  std::string name() const override;
  Value identity() const override;
  Value multiply(const Value& a, const Value& b) const override;
  Value inverse(const Value& a) const override;
  bool contains(const Value& v) const override;
  BigOrder element_order(const Value& v) const override;
  std::string format(const Value& v) const override;

  const GroupPtr& base() const { return base_; }

  Value transposition(const Value& gamma) const;   // chi: swap {e, gamma}
  Value translation(const Value& gamma) const;     // theta: x -> x gamma
  static int finitary_sign(const Value& v);        // sign of the map part

 private:
  Value conj_map(const Value& map, const Value& gamma) const;  // pi(x g) g^-1
  Value compose_maps(const Value& m1, const Value& m2) const;  // m1 after m2
  GroupPtr base_;
  bool even_only_;
};

std::shared_ptr<const FinitarySymGroup> finitary_sym_group(GroupPtr base,
                                                           bool even_only);

/// Finitary special-linear-by-translation group over G: elements M * P_gamma
/// with M a finite F_p block away from the identity and P_gamma the
/// permutation matrix of right translation. Payload:
/// List{ support (sorted base values), block entries (Vec), shift }.
class FinitarySlGroup final : public Group {
 public:
  FinitarySlGroup(GroupPtr base, int p);

  std::string name() const override;
  Value identity() const override;
  Value multiply(const Value& a, const Value& b) const override;
  Value inverse(const Value& a) const override;
  bool contains(const Value& v) const override;
  std::string format(const Value& v) const override;

  const GroupPtr& base() const { return base_; }
  int p() const { return p_; }

  Value elementary_unit(const Value& gamma) const;  // sigma: e_{e,gamma}^1
  Value translation(const Value& gamma) const;      // tau: permutation matrix

  Value make(const std::vector<Value>& support, const ModMat& block,
             const Value& shift) const;  // normalizes the support

 private:
  GroupPtr base_;
  int p_;
};

std::shared_ptr<const FinitarySlGroup> finitary_sl_group(GroupPtr base, int p);

}  // namespace mgk
