#include "mgk/permrep.hpp"

#include <algorithm>

#include "mgk/enumerate.hpp"
#include "mgk/wreath.hpp"

namespace mgk {

namespace {

std::optional<std::vector<Value>> enumerate_universe(const GroupPtr& g,
                                                     std::size_t cap);

// sorted canonical element list for small finite backends
std::optional<std::vector<Value>> enumerate_universe(const GroupPtr& g,
                                                     std::size_t cap) {
  const std::string n = g->name();
  if (n.rfind("Z/", 0) == 0) {
    const std::int64_t m = std::stoll(n.substr(2));
    std::vector<Value> out;
    for (std::int64_t i = 0; i < m && static_cast<std::size_t>(i) < cap + 1; ++i)
      out.push_back(Value(i));
    if (out.size() > cap) return std::nullopt;
    return out;
  }
  if (n.rfind("D_", 0) == 0 && n != "D_inf") {
    const std::int64_t m = std::stoll(n.substr(2));
    if (static_cast<std::size_t>(2 * m) > cap) return std::nullopt;
    std::vector<Value> out;
    for (std::int64_t r = 0; r < m; ++r)
      for (int s = 0; s < 2; ++s) out.push_back(dihedral_value(r, s != 0, m));
    std::sort(out.begin(), out.end());
    return out;
  }
  return std::nullopt;
}

}  // namespace

std::optional<PermRep> perm_representation(const GroupPtr& g,
                                           std::size_t degree_cap) {
  const std::string n = g->name();

  if (n.rfind("Sym(", 0) == 0 || n.rfind("Alt(", 0) == 0) {
    const std::size_t deg = static_cast<std::size_t>(std::stoll(n.substr(4)));
    if (deg > degree_cap) return std::nullopt;
    PermRep rep;
    rep.degree = deg;
    rep.kind = "natural";
    rep.to_perm = [](const Value& v) { return Perm(v.as_vec()); };
    return rep;
  }

  if (n.rfind("Z/", 0) == 0) {
    const std::int64_t m = std::stoll(n.substr(2));
    if (static_cast<std::size_t>(m) > degree_cap) return std::nullopt;
    PermRep rep;
    rep.degree = static_cast<std::size_t>(m);
    rep.kind = "regular";
    rep.to_perm = [m](const Value& v) {
      const std::int64_t k = v.as_int();
      std::vector<std::int32_t> img(static_cast<std::size_t>(m));
      for (std::int64_t x = 0; x < m; ++x)
        img[static_cast<std::size_t>(x)] = static_cast<std::int32_t>((x + k) % m);
      return Perm(std::move(img));
    };
    return rep;
  }

  if (n.rfind("D_", 0) == 0 && n != "D_inf") {
    const std::int64_t m = std::stoll(n.substr(2));
    // polygonal action x -> eps x + r is faithful for degree >= 3
    const std::int64_t pts = m >= 3 ? m : 2 * m;
    if (static_cast<std::size_t>(pts) > degree_cap) return std::nullopt;
    PermRep rep;
    rep.degree = static_cast<std::size_t>(pts);
    rep.kind = m >= 3 ? "natural" : "regular";
    if (m >= 3) {
      rep.to_perm = [m](const Value& v) {
        const auto& x = v.as_vec();
        std::vector<std::int32_t> img(static_cast<std::size_t>(m));
        for (std::int64_t t = 0; t < m; ++t) {
          std::int64_t y = x[1] ? -t + x[0] : t + x[0];
          y %= m;
          if (y < 0) y += m;
          img[static_cast<std::size_t>(t)] = static_cast<std::int32_t>(y);
        }
        return Perm(std::move(img));
      };
    } else {
      auto universe = enumerate_universe(dihedral_group(m), 16);
      auto elems = std::make_shared<std::vector<Value>>(std::move(*universe));
      GroupPtr gp = dihedral_group(m);
      rep.to_perm = [elems, gp](const Value& v) {
        std::vector<std::int32_t> img(elems->size());
        for (std::size_t i = 0; i < elems->size(); ++i) {
          const Value w = gp->multiply(v, (*elems)[i]);
          const auto it = std::lower_bound(elems->begin(), elems->end(), w);
          img[i] = static_cast<std::int32_t>(it - elems->begin());
        }
        return Perm(std::move(img));
      };
    }
    return rep;
  }

  if (auto wg = std::dynamic_pointer_cast<const WreathGroup>(g)) {
    auto tops = enumerate_universe(wg->top(), degree_cap);
    if (!tops) return std::nullopt;
    auto base_rep = perm_representation(wg->base(), degree_cap);
    if (!base_rep) return std::nullopt;
    const std::size_t l = base_rep->degree;
    const std::size_t deg = tops->size() * l;
    if (deg > degree_cap || deg == 0) return std::nullopt;
    auto top_elems = std::make_shared<std::vector<Value>>(std::move(*tops));
    GroupPtr top = wg->top();
    auto brep = std::make_shared<PermRep>(std::move(*base_rep));
    PermRep rep;
    rep.degree = deg;
    rep.kind = "imprimitive";
    // (f,h): (x, i) -> (x h^-1, f(x h^-1)(i)), block-major point numbering
    rep.to_perm = [top_elems, top, brep, l](const Value& v) {
      const Value& f = v.as_list()[0];
      const Value hinv = top->inverse(v.as_list()[1]);
      std::vector<std::int32_t> img(top_elems->size() * l);
      for (std::size_t x = 0; x < top_elems->size(); ++x) {
        const Value y = top->multiply((*top_elems)[x], hinv);
        const auto it = std::lower_bound(top_elems->begin(), top_elems->end(), y);
        const std::size_t yi = static_cast<std::size_t>(it - top_elems->begin());
        // binary search y in the sorted support of f
        const auto& supp = f.as_list();
        const Value* val = nullptr;
        std::size_t lo = 0, hi = supp.size();
        while (lo < hi) {
          const std::size_t mid = (lo + hi) / 2;
          if (supp[mid].as_list()[0] < y)
            lo = mid + 1;
          else
            hi = mid;
        }
        if (lo < supp.size() && supp[lo].as_list()[0] == y)
          val = &supp[lo].as_list()[1];
        if (val) {
          const Perm bp = brep->to_perm(*val);
          for (std::size_t i = 0; i < l; ++i)
            img[x * l + i] = static_cast<std::int32_t>(
                yi * l + static_cast<std::size_t>(bp[i]));
        } else {
          for (std::size_t i = 0; i < l; ++i)
            img[x * l + i] = static_cast<std::int32_t>(yi * l + i);
        }
      }
      return Perm(std::move(img));
    };
    return rep;
  }

  if (auto pg = std::dynamic_pointer_cast<const ProductGroup>(g)) {
    // disjoint union of factor representations
    auto reps = std::make_shared<std::vector<PermRep>>();
    auto offsets = std::make_shared<std::vector<std::size_t>>();
    std::size_t deg = 0;
    for (const GroupPtr& f : pg->factors()) {
      auto fr = perm_representation(f, degree_cap);
      if (!fr) return std::nullopt;
      offsets->push_back(deg);
      deg += fr->degree;
      reps->push_back(std::move(*fr));
      if (deg > degree_cap) return std::nullopt;
    }
    PermRep rep;
    rep.degree = deg;
    rep.kind = "union";
    rep.to_perm = [reps, offsets, deg](const Value& v) {
      std::vector<std::int32_t> img(deg);
      for (std::size_t fi = 0; fi < reps->size(); ++fi) {
        const Perm p = (*reps)[fi].to_perm(v.as_list()[fi]);
        const std::size_t off = (*offsets)[fi];
        for (std::size_t i = 0; i < p.degree(); ++i)
          img[off + i] = static_cast<std::int32_t>(off + static_cast<std::size_t>(p[i]));
      }
      return Perm(std::move(img));
    };
    return rep;
  }

  return std::nullopt;
}

std::vector<Perm> marking_perms(const MarkedGroup& mg, const PermRep& rep) {
  std::vector<Perm> out;
  out.reserve(mg.k());
  for (const Value& v : mg.marking()) out.push_back(rep.to_perm(v));
  return out;
}

BigOrder marked_group_order(const MarkedGroup& mg, std::size_t degree_cap,
                            std::size_t closure_cap) {
  if (auto rep = perm_representation(mg.group(), degree_cap)) {
    auto r = bsgs_order(marking_perms(mg, *rep));
    return r.order;
  }
  if (mg.k() == 1) return mg.group()->element_order(mg.marking()[0]);
  Closure c = enumerate_subgroup(mg, closure_cap);
  if (!c.capped) return BigOrder(BigInt(static_cast<unsigned long>(c.elements.size())));
  throw ResourceExhausted("no permutation representation and closure cap hit for " +
                          mg.group()->name());
}

}  // namespace mgk
