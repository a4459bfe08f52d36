#pragma once

#include <functional>
#include <optional>

#include "mgk/bsgs.hpp"
#include "mgk/group.hpp"
#include "mgk/perm.hpp"

namespace mgk {

/// A faithful permutation representation of a backend: an injective
/// homomorphism into Sym(degree) evaluated payload-by-payload.
struct PermRep {
  std::size_t degree = 0;
  std::function<Perm(const Value&)> to_perm;
  std::string kind;  // "natural" | "regular" | "imprimitive" | "union"
};

/// Faithful representation when one is available within the degree cap:
/// Sym/Alt natural, cyclic/dihedral regular or polygonal, finite wreath
/// imprimitive over a representable base, products as disjoint unions.
std::optional<PermRep> perm_representation(const GroupPtr& g,
                                           std::size_t degree_cap = 200000);

/// Exact order of the subgroup generated by a marking: permutation route
/// (BSGS) when a representation exists, otherwise cyclic shortcut or closure
/// enumeration. Throws ResourceExhausted when nothing applies within caps.
BigOrder marked_group_order(const MarkedGroup& mg,
                            std::size_t degree_cap = 200000,
                            std::size_t closure_cap = 2000000);

/// Marking images under the representation (helper for BSGS order checks).
std::vector<Perm> marking_perms(const MarkedGroup& mg, const PermRep& rep);

}  // namespace mgk
