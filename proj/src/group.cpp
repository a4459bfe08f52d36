#include "mgk/group.hpp"

#include <numeric>
#include <sstream>

#include "mgk/modmat.hpp"
#include "mgk/perm.hpp"

namespace mgk {

BigOrder Group::element_order(const Value& v) const {
  // generic fallback: iterate powers (finite backends override with formulas)
  constexpr int kCap = 1 << 20;
  Value e = identity();
  Value x = v;
  for (int n = 1; n <= kCap; ++n) {
    if (x == e) return BigOrder(BigInt(n));
    x = multiply(x, v);
  }
  return BigOrder::infinite();
}

GroupElement GroupElement::power(std::int64_t n) const {
  const Group& g = *group_;
  Value base = n < 0 ? g.inverse(value_) : value_;
  std::uint64_t e = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1
                          : static_cast<std::uint64_t>(n);
  Value acc = g.identity();
  while (e) {
    if (e & 1) acc = g.multiply(acc, base);
    base = g.multiply(base, base);
    e >>= 1;
  }
  return {group_, std::move(acc)};
}

MarkedGroup::MarkedGroup(GroupPtr g, std::vector<Value> marking, std::string label)
    : group_(std::move(g)), marking_(std::move(marking)), label_(std::move(label)) {
  for (const Value& v : marking_)
    if (!group_->contains(v))
      throw Precondition("marking entry outside backend " + group_->name());
}

std::string MarkedGroup::describe() const {
  std::ostringstream os;
  os << (label_.empty() ? group_->name() : label_) << "; k=" << marking_.size();
  return os.str();
}

namespace {

std::int64_t floormod(std::int64_t a, std::int64_t n) {
  std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

class CyclicGroup final : public Group {
 public:
  explicit CyclicGroup(std::int64_t n) : n_(n) {}
  std::string name() const override { return "Z/" + std::to_string(n_) + "Z"; }
  Value identity() const override { return Value(std::int64_t{0}); }
  Value multiply(const Value& a, const Value& b) const override {
    return Value(floormod(a.as_int() + b.as_int(), n_));
  }
  Value inverse(const Value& a) const override {
    return Value(floormod(-a.as_int(), n_));
  }
  bool contains(const Value& v) const override {
    return v.is_int() && v.as_int() >= 0 && v.as_int() < n_;
  }
  BigOrder order() const override { return BigOrder(BigInt(n_)); }
  BigOrder element_order(const Value& v) const override {
    return BigOrder(BigInt(n_ / std::gcd(n_, v.as_int())));
  }

 private:
  std::int64_t n_;
};

class IntegerGroup final : public Group {
 public:
  std::string name() const override { return "Z"; }
  Value identity() const override { return Value(std::int64_t{0}); }
  Value multiply(const Value& a, const Value& b) const override {
    return Value(a.as_int() + b.as_int());
  }
  Value inverse(const Value& a) const override { return Value(-a.as_int()); }
  bool contains(const Value& v) const override { return v.is_int(); }
  BigOrder element_order(const Value& v) const override {
    return v.as_int() == 0 ? BigOrder(BigInt(1)) : BigOrder::infinite();
  }
};

class LatticeGroup final : public Group {
 public:
  explicit LatticeGroup(int d) : d_(d) {}
  std::string name() const override { return "Z^" + std::to_string(d_); }
  Value identity() const override {
    return Value(std::vector<std::int32_t>(static_cast<std::size_t>(d_), 0));
  }
  Value multiply(const Value& a, const Value& b) const override {
    std::vector<std::int32_t> r = a.as_vec();
    const auto& y = b.as_vec();
    for (int i = 0; i < d_; ++i) r[static_cast<std::size_t>(i)] += y[static_cast<std::size_t>(i)];
    return Value(std::move(r));
  }
  Value inverse(const Value& a) const override {
    std::vector<std::int32_t> r = a.as_vec();
    for (auto& x : r) x = -x;
    return Value(std::move(r));
  }
  bool contains(const Value& v) const override {
    return v.is_vec() && v.as_vec().size() == static_cast<std::size_t>(d_);
  }
  BigOrder element_order(const Value& v) const override {
    for (auto x : v.as_vec())
      if (x) return BigOrder::infinite();
    return BigOrder(BigInt(1));
  }

 private:
  int d_;
};

// Symmetries x -> eps*x + r of Z/nZ (n > 0) or Z (n == 0); pair (r, eps-bit).
class DihedralGroup final : public Group {
 public:
  explicit DihedralGroup(std::int64_t n) : n_(n) {}
  std::string name() const override {
    return n_ ? "D_" + std::to_string(n_) : "D_inf";
  }
  Value identity() const override {
    return Value(std::vector<std::int32_t>{0, 0});
  }
  Value multiply(const Value& a, const Value& b) const override {
    const auto& x = a.as_vec();
    const auto& y = b.as_vec();
    std::int64_t r1 = x[0], r2 = y[0];
    const bool s1 = x[1] != 0, s2 = y[1] != 0;
    std::int64_t r = r1 + (s1 ? -r2 : r2);
    if (n_) r = floormod(r, n_);
    return Value(std::vector<std::int32_t>{static_cast<std::int32_t>(r),
                                           static_cast<std::int32_t>(s1 ^ s2)});
  }
  Value inverse(const Value& a) const override {
    const auto& x = a.as_vec();
    const bool s = x[1] != 0;
    std::int64_t r = s ? x[0] : -static_cast<std::int64_t>(x[0]);
    if (n_) r = floormod(r, n_);
    return Value(std::vector<std::int32_t>{static_cast<std::int32_t>(r),
                                           static_cast<std::int32_t>(s)});
  }
  bool contains(const Value& v) const override {
    if (!v.is_vec() || v.as_vec().size() != 2) return false;
    if (v.as_vec()[1] != 0 && v.as_vec()[1] != 1) return false;
    return n_ == 0 || (v.as_vec()[0] >= 0 && v.as_vec()[0] < n_);
  }
  BigOrder order() const override {
    return n_ ? BigOrder(BigInt(2 * n_)) : BigOrder::infinite();
  }
  BigOrder element_order(const Value& v) const override {
    const auto& x = v.as_vec();
    if (x[1]) return BigOrder(BigInt(2));
    if (x[0] == 0) return BigOrder(BigInt(1));
    if (!n_) return BigOrder::infinite();
    return BigOrder(BigInt(n_ / std::gcd(n_, static_cast<std::int64_t>(x[0]))));
  }
  std::string format(const Value& v) const override {
    const auto& x = v.as_vec();
    std::ostringstream os;
    os << "r^" << x[0] << (x[1] ? "*refl" : "");
    return os.str();
  }

 private:
  std::int64_t n_;  // 0 means infinite
};

class PermGroupBase : public Group {
 public:
  explicit PermGroupBase(int n) : n_(n) {}
  Value identity() const override {
    std::vector<std::int32_t> img(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) img[static_cast<std::size_t>(i)] = i;
    return Value(std::move(img));
  }
  Value multiply(const Value& a, const Value& b) const override {
    const auto& x = a.as_vec();
    const auto& y = b.as_vec();
    std::vector<std::int32_t> r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
      r[i] = x[static_cast<std::size_t>(y[i])];
    return Value(std::move(r));
  }
  Value inverse(const Value& a) const override {
    const auto& x = a.as_vec();
    std::vector<std::int32_t> r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
      r[static_cast<std::size_t>(x[i])] = static_cast<std::int32_t>(i);
    return Value(std::move(r));
  }
  BigOrder element_order(const Value& v) const override {
    return BigOrder(Perm(v.as_vec()).order());
  }
  std::string format(const Value& v) const override {
    return Perm(v.as_vec()).cycle_string();
  }

 protected:
  int n_;
};

class SymmetricGroup final : public PermGroupBase {
 public:
  using PermGroupBase::PermGroupBase;
  std::string name() const override { return "Sym(" + std::to_string(n_) + ")"; }
  bool contains(const Value& v) const override {
    return v.is_vec() && v.as_vec().size() == static_cast<std::size_t>(n_) &&
           is_valid_permutation(v.as_vec());
  }
  BigOrder order() const override {
    BigInt f = 1;
    for (int i = 2; i <= n_; ++i) f *= i;
    return BigOrder(f);
  }
};

class AlternatingGroup final : public PermGroupBase {
 public:
  using PermGroupBase::PermGroupBase;
  std::string name() const override { return "Alt(" + std::to_string(n_) + ")"; }
  bool contains(const Value& v) const override {
    return v.is_vec() && v.as_vec().size() == static_cast<std::size_t>(n_) &&
           is_valid_permutation(v.as_vec()) && Perm(v.as_vec()).sign() == 1;
  }
  BigOrder order() const override {
    BigInt f = 1;
    for (int i = 3; i <= n_; ++i) f *= i;
    return BigOrder(f);
  }
};

class SpecialLinearGroup final : public Group {
 public:
  SpecialLinearGroup(int n, int p) : n_(n), p_(p) {}
  std::string name() const override {
    return "SL(" + std::to_string(n_) + ",F_" + std::to_string(p_) + ")";
  }
  Value identity() const override { return mat_value(ModMat::identity(n_, p_)); }
  Value multiply(const Value& a, const Value& b) const override {
    return mat_value(mat_mul(mat_from_value(a, n_, p_), mat_from_value(b, n_, p_)));
  }
  Value inverse(const Value& a) const override {
    return mat_value(mat_inverse(mat_from_value(a, n_, p_)));
  }
  bool contains(const Value& v) const override {
    if (!v.is_vec() || v.as_vec().size() != static_cast<std::size_t>(n_) * n_)
      return false;
    for (auto x : v.as_vec())
      if (x < 0 || x >= p_) return false;
    return mat_det(mat_from_value(v, n_, p_)) == 1;
  }
  BigOrder order() const override {
    // p^(n(n-1)/2) * prod_{i=2..n} (p^i - 1)
    BigInt q = p_;
    BigInt o = boost::multiprecision::pow(q, static_cast<unsigned>(n_ * (n_ - 1) / 2));
    BigInt pi = q;
    for (int i = 2; i <= n_; ++i) {
      pi *= q;
      o *= pi - 1;
    }
    return BigOrder(o);
  }

 private:
  int n_, p_;
};

}  // namespace

std::string ProductGroup::name() const {
  std::string s = "Prod(";
  for (std::size_t i = 0; i < fs_.size(); ++i) {
    if (i) s += " x ";
    s += fs_[i]->name();
  }
  return s + ")";
}
Value ProductGroup::identity() const {
  Value::List xs;
  xs.reserve(fs_.size());
  for (const auto& f : fs_) xs.push_back(f->identity());
  return Value(std::move(xs));
}
Value ProductGroup::multiply(const Value& a, const Value& b) const {
  const auto& x = a.as_list();
  const auto& y = b.as_list();
  Value::List r;
  r.reserve(fs_.size());
  for (std::size_t i = 0; i < fs_.size(); ++i)
    r.push_back(fs_[i]->multiply(x[i], y[i]));
  return Value(std::move(r));
}
Value ProductGroup::inverse(const Value& a) const {
  const auto& x = a.as_list();
  Value::List r;
  r.reserve(fs_.size());
  for (std::size_t i = 0; i < fs_.size(); ++i) r.push_back(fs_[i]->inverse(x[i]));
  return Value(std::move(r));
}
bool ProductGroup::contains(const Value& v) const {
  if (!v.is_list() || v.as_list().size() != fs_.size()) return false;
  for (std::size_t i = 0; i < fs_.size(); ++i)
    if (!fs_[i]->contains(v.as_list()[i])) return false;
  return true;
}
BigOrder ProductGroup::order() const {
  BigInt o = 1;
  for (const auto& f : fs_) {
    BigOrder fo = f->order();
    if (!fo.is_finite()) return BigOrder::infinite();
    o *= fo.value();
  }
  return BigOrder(o);
}
BigOrder ProductGroup::element_order(const Value& v) const {
  BigInt o = 1;
  for (std::size_t i = 0; i < fs_.size(); ++i) {
    BigOrder c = fs_[i]->element_order(v.as_list()[i]);
    if (!c.is_finite()) return BigOrder::infinite();
    o = lcm_big(o, c.value());
  }
  return BigOrder(o);
}
std::string ProductGroup::format(const Value& v) const {
  std::string s = "(";
  for (std::size_t i = 0; i < fs_.size(); ++i) {
    if (i) s += ", ";
    s += fs_[i]->format(v.as_list()[i]);
  }
  return s + ")";
}

GroupPtr cyclic_group(std::int64_t n) { return std::make_shared<CyclicGroup>(n); }
GroupPtr integer_group() { return std::make_shared<IntegerGroup>(); }
GroupPtr lattice_group(int d) { return std::make_shared<LatticeGroup>(d); }
GroupPtr dihedral_group(std::int64_t n) {
  if (n < 2) throw Precondition("dihedral degree must be >= 2");
  return std::make_shared<DihedralGroup>(n);
}
GroupPtr dihedral_group_infinite() { return std::make_shared<DihedralGroup>(0); }
GroupPtr symmetric_group(int n) { return std::make_shared<SymmetricGroup>(n); }
GroupPtr alternating_group(int n) { return std::make_shared<AlternatingGroup>(n); }
GroupPtr special_linear_group(int n, int p) {
  return std::make_shared<SpecialLinearGroup>(n, p);
}
GroupPtr direct_product_group(std::vector<GroupPtr> factors) {
  return std::make_shared<ProductGroup>(std::move(factors));
}

Value dihedral_value(std::int64_t rot, bool reflected, std::int64_t n) {
  if (n) rot = floormod(rot, n);
  return Value(std::vector<std::int32_t>{static_cast<std::int32_t>(rot),
                                         reflected ? 1 : 0});
}

MarkedGroup cyclic_marked(std::int64_t n) {
  return MarkedGroup(cyclic_group(n), {Value(std::int64_t{1})},
                     "(Z/" + std::to_string(n) + "Z; 1)");
}
MarkedGroup integers_marked() {
  return MarkedGroup(integer_group(), {Value(std::int64_t{1})}, "(Z; 1)");
}
MarkedGroup lattice_marked(int d) {
  std::vector<Value> gens;
  for (int i = 0; i < d; ++i) {
    std::vector<std::int32_t> e(static_cast<std::size_t>(d), 0);
    e[static_cast<std::size_t>(i)] = 1;
    gens.push_back(Value(std::move(e)));
  }
  return MarkedGroup(lattice_group(d), std::move(gens));
}
MarkedGroup dihedral_marked(std::int64_t n) {
  GroupPtr g = dihedral_group(n);
  return MarkedGroup(g, {dihedral_value(0, true, n), dihedral_value(-1, true, n)},
                     "(D_" + std::to_string(n) + "; c, d)");
}
MarkedGroup dihedral_marked_infinite() {
  GroupPtr g = dihedral_group_infinite();
  return MarkedGroup(g, {dihedral_value(0, true, 0), dihedral_value(-1, true, 0)},
                     "(D_inf; c, d)");
}
MarkedGroup symmetric_marked(int n) {
  std::vector<std::int32_t> t(static_cast<std::size_t>(n));
  std::vector<std::int32_t> c(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    t[static_cast<std::size_t>(i)] = i;
    c[static_cast<std::size_t>(i)] = (i + 1) % n;
  }
  std::swap(t[0], t[1]);
  return MarkedGroup(symmetric_group(n), {Value(std::move(t)), Value(std::move(c))},
                     "(Sym(" + std::to_string(n) + "); (0 1), n-cycle)");
}
MarkedGroup klein8_marked() {
  std::vector<GroupPtr> fs{cyclic_group(2), cyclic_group(2), cyclic_group(2)};
  GroupPtr g = direct_product_group(fs);
  auto unit = [&](int i) {
    Value::List xs;
    for (int j = 0; j < 3; ++j) xs.push_back(Value(std::int64_t{i == j ? 1 : 0}));
    return Value(std::move(xs));
  };
  return MarkedGroup(g, {unit(0), unit(1), unit(2)}, "((Z/2)^3; a, b, c)");
}
MarkedGroup direct_product_marked(const std::vector<MarkedGroup>& factors) {
  std::vector<GroupPtr> gs;
  std::size_t k = 0;
  for (const auto& f : factors) {
    gs.push_back(f.group());
    k += f.k();
  }
  GroupPtr g = direct_product_group(gs);
  std::vector<Value> marking;
  marking.reserve(k);
  for (std::size_t fi = 0; fi < factors.size(); ++fi)
    for (std::size_t j = 0; j < factors[fi].k(); ++j) {
      Value::List xs;
      for (std::size_t gi = 0; gi < factors.size(); ++gi)
        xs.push_back(gi == fi ? factors[fi].marking()[j]
                              : factors[gi].group()->identity());
      marking.push_back(Value(std::move(xs)));
    }
  return MarkedGroup(g, std::move(marking));
}

GroupElement perm_element(int n, const std::vector<std::int32_t>& images,
                          bool alternating) {
  GroupPtr g = alternating ? alternating_group(n) : symmetric_group(n);
  Value v{std::vector<std::int32_t>(images)};
  if (!g->contains(v)) throw Precondition("invalid permutation payload");
  return {g, v};
}

int perm_sign_of(const GroupElement& e) {
  const std::string n = e.group()->name();
  if (n.rfind("Sym(", 0) != 0 && n.rfind("Alt(", 0) != 0)
    throw BackendMismatch("perm_sign requires a permutation backend, got " + n);
  return Perm(e.value().as_vec()).sign();
}

}  // namespace mgk
