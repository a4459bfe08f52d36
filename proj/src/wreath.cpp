#include "mgk/wreath.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace mgk {

namespace {
bool top_supported(const Group& top) {
  const std::string n = top.name();
  return n == "Z" || n == "Z^2" || n.rfind("Z/", 0) == 0 ||
         n.rfind("D_", 0) == 0;
}
}  // namespace

WreathGroup::WreathGroup(GroupPtr base, GroupPtr top)
    : base_(std::move(base)), top_(std::move(top)) {
  if (!top_supported(*top_))
    throw Precondition("unsupported wreath top backend: " + top_->name());
}

std::shared_ptr<const WreathGroup> wreath_group(GroupPtr base, GroupPtr top) {
  return std::make_shared<WreathGroup>(std::move(base), std::move(top));
}

std::string WreathGroup::name() const {
  return "Wr(" + base_->name() + ", " + top_->name() + ")";
}

Value WreathGroup::identity() const {
  return Value(Value::List{Value(Value::List{}), top_->identity()});
}

std::vector<std::pair<Value, Value>> WreathGroup::support_of(const Value& v) {
  std::vector<std::pair<Value, Value>> out;
  for (const Value& kv : v.as_list()[0].as_list())
    out.push_back({kv.as_list()[0], kv.as_list()[1]});
  return out;
}

Value WreathGroup::top_of(const Value& v) { return v.as_list()[1]; }

Value WreathGroup::make(std::vector<std::pair<Value, Value>> support,
                        Value top) const {
  std::map<Value, Value> merged;
  const Value e = base_->identity();
  for (auto& [k, g] : support) {
    auto it = merged.find(k);
    if (it == merged.end())
      merged.emplace(k, g);
    else
      it->second = base_->multiply(it->second, g);
  }
  Value::List supp;
  for (auto& [k, g] : merged)
    if (!(g == e)) supp.push_back(Value(Value::List{k, g}));
  return Value(Value::List{Value(std::move(supp)), std::move(top)});
}

Value WreathGroup::delta(const Value& key, const Value& g) const {
  return make({{key, g}}, top_->identity());
}

Value WreathGroup::shift(const Value& top) const { return make({}, top); }

Value WreathGroup::translate(const Value& f, const Value& h) const {
  // (h |> f)(x) = f(x h): keys move to key * h^-1
  const Value hinv = top_->inverse(h);
  Value::List supp;
  for (const Value& kv : f.as_list()) {
    const Value& k = kv.as_list()[0];
    supp.push_back(Value(Value::List{top_->multiply(k, hinv), kv.as_list()[1]}));
  }
  std::sort(supp.begin(), supp.end());
  return Value(std::move(supp));
}

Value WreathGroup::multiply(const Value& a, const Value& b) const {
  const Value& f1 = a.as_list()[0];
  const Value& h1 = a.as_list()[1];
  const Value& f2 = b.as_list()[0];
  const Value& h2 = b.as_list()[1];
  const Value f2t = translate(f2, h1);
  // pointwise product f1 * f2t
  const Value e = base_->identity();
  Value::List supp;
  const auto& xs = f1.as_list();
  const auto& ys = f2t.as_list();
  std::size_t i = 0, j = 0;
  while (i < xs.size() || j < ys.size()) {
    if (j >= ys.size() || (i < xs.size() && xs[i].as_list()[0] < ys[j].as_list()[0])) {
      supp.push_back(xs[i]);
      ++i;
    } else if (i >= xs.size() || ys[j].as_list()[0] < xs[i].as_list()[0]) {
      supp.push_back(ys[j]);
      ++j;
    } else {
      Value prod = base_->multiply(xs[i].as_list()[1], ys[j].as_list()[1]);
      if (!(prod == e))
        supp.push_back(Value(Value::List{xs[i].as_list()[0], std::move(prod)}));
      ++i;
      ++j;
    }
  }
  return Value(Value::List{Value(std::move(supp)), top_->multiply(h1, h2)});
}

Value WreathGroup::inverse(const Value& a) const {
  const Value& f = a.as_list()[0];
  const Value& h = a.as_list()[1];
  const Value hinv = top_->inverse(h);
  // (f,h)^-1 = (h^-1 |> f^-1, h^-1)
  Value::List supp;
  for (const Value& kv : f.as_list())
    supp.push_back(Value(Value::List{top_->multiply(kv.as_list()[0], h),
                                     base_->inverse(kv.as_list()[1])}));
  std::sort(supp.begin(), supp.end());
  return Value(Value::List{Value(std::move(supp)), hinv});
}

bool WreathGroup::contains(const Value& v) const {
  if (!v.is_list() || v.as_list().size() != 2) return false;
  if (!v.as_list()[0].is_list()) return false;
  if (!top_->contains(v.as_list()[1])) return false;
  const Value e = base_->identity();
  Value prev;
  bool first = true;
  for (const Value& kv : v.as_list()[0].as_list()) {
    if (!kv.is_list() || kv.as_list().size() != 2) return false;
    const Value& k = kv.as_list()[0];
    if (!top_->contains(k) || !base_->contains(kv.as_list()[1])) return false;
    if (kv.as_list()[1] == e) return false;       // normalized support only
    if (!first && !(prev < k)) return false;      // strictly sorted keys
    prev = k;
    first = false;
  }
  return true;
}

BigOrder WreathGroup::order() const {
  const BigOrder bo = base_->order();
  const BigOrder to = top_->order();
  if (!bo.is_finite() || !to.is_finite()) return BigOrder::infinite();
  const unsigned long texp = to.value().convert_to<unsigned long>();
  return BigOrder(boost::multiprecision::pow(bo.value(), static_cast<unsigned>(texp)) *
                  to.value());
}

BigOrder WreathGroup::element_order(const Value& v) const {
  const Value& h = v.as_list()[1];
  const BigOrder oh = top_->element_order(h);
  if (!oh.is_finite()) return BigOrder::infinite();
  const std::int64_t o = oh.value().convert_to<std::int64_t>();
  // (f,h)^o = (F, e); order = o * ord(F); F accumulated by repeated product
  Value acc = v;
  for (std::int64_t i = 1; i < o; ++i) acc = multiply(acc, v);
  BigInt base_ord = 1;
  for (const Value& kv : acc.as_list()[0].as_list()) {
    const BigOrder c = base_->element_order(kv.as_list()[1]);
    if (!c.is_finite()) return BigOrder::infinite();
    base_ord = lcm_big(base_ord, c.value());
  }
  return BigOrder(BigInt(o) * base_ord);
}

std::string WreathGroup::format(const Value& v) const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const Value& kv : v.as_list()[0].as_list()) {
    if (!first) os << ", ";
    os << top_->format(kv.as_list()[0]) << ": " << base_->format(kv.as_list()[1]);
    first = false;
  }
  os << "} * " << top_->format(v.as_list()[1]);
  return os.str();
}

MarkedGroup wreath_product(const MarkedGroup& base, const MarkedGroup& top) {
  auto wg = wreath_group(base.group(), top.group());
  std::vector<Value> marking;
  for (const Value& s : base.marking())
    marking.push_back(wg->delta(top.group()->identity(), s));
  for (const Value& t : top.marking()) marking.push_back(wg->shift(t));
  return MarkedGroup(wg, std::move(marking),
                     "Wr(" + base.describe() + ", " + top.describe() + ")");
}

SidonCheck check_sidon(const std::vector<std::int64_t>& placement) {
  SidonCheck out;
  for (std::size_t i = 0; i < placement.size(); ++i)
    for (std::size_t j = 0; j < placement.size(); ++j) {
      if (i == j) continue;
      for (std::size_t i2 = 0; i2 < placement.size(); ++i2)
        for (std::size_t j2 = 0; j2 < placement.size(); ++j2) {
          if (i2 == j2 || (i == i2 && j == j2)) continue;
          if (placement[j] - placement[i] == placement[j2] - placement[i2]) {
            out.ok = false;
            out.witness = {i, j, i2, j2};
            return out;
          }
        }
    }
  return out;
}

HallMarking hall_wreath_marking(const MarkedGroup& mg,
                                const std::vector<std::int64_t>& placement) {
  if (placement.size() != mg.k())
    throw Precondition("placement size must equal the marking length");
  SidonCheck sc = check_sidon(placement);
  if (!sc.ok) {
    std::ostringstream os;
    os << "placement is not a Sidon set: a[" << sc.witness[1] << "]-a["
       << sc.witness[0] << "] == a[" << sc.witness[3] << "]-a[" << sc.witness[2]
       << "]";
    throw Precondition(os.str());
  }
  auto wg = wreath_group(mg.group(), integer_group());
  std::vector<std::pair<Value, Value>> supp;
  for (std::size_t j = 0; j < mg.k(); ++j)
    supp.push_back({Value(placement[j]), mg.marking()[j]});
  Value w = wg->make(std::move(supp), Value(std::int64_t{0}));
  Value u = wg->shift(Value(std::int64_t{1}));
  GroupElement we(wg, w), ue(wg, u);
  MarkedGroup marked(wg, {w, u}, "Hall(" + mg.describe() + ")");
  return {std::move(marked), std::move(we), std::move(ue)};
}

MarkedGroup absorption_marking(const MarkedGroup& mg, int m) {
  if (mg.k() < 1) throw Precondition("marking must be nonempty");
  auto wg = wreath_group(mg.group(), integer_group());
  std::vector<Value> marking;
  for (std::size_t j = 0; j < mg.k(); ++j) {
    const std::int64_t pos = (std::int64_t{1} << m) * static_cast<std::int64_t>(j);
    marking.push_back(wg->delta(Value(pos), mg.marking()[j]));
  }
  marking.push_back(wg->shift(Value(std::int64_t{1})));
  return MarkedGroup(wg, std::move(marking),
                     "S_" + std::to_string(m) + "(" + mg.describe() + " wr Z)");
}

MarkedGroup abelian_lamplighter_marked(const std::vector<std::int64_t>& orders) {
  std::vector<GroupPtr> fs;
  for (std::int64_t o : orders) fs.push_back(cyclic_group(o));
  GroupPtr c = direct_product_group(fs);
  auto wg = wreath_group(c, integer_group());
  std::vector<Value> marking;
  for (std::size_t j = 0; j < orders.size(); ++j) {
    Value::List xs;
    for (std::size_t i = 0; i < orders.size(); ++i)
      xs.push_back(Value(std::int64_t{i == j ? 1 : 0}));
    marking.push_back(wg->delta(Value(std::int64_t{0}), Value(std::move(xs))));
  }
  marking.push_back(wg->shift(Value(std::int64_t{1})));
  return MarkedGroup(wg, std::move(marking), "(C_* wr Z; c_j d_0, t)");
}

MarkedGroup cyclic_lamplighter_marked(std::int64_t order) {
  auto wg = wreath_group(cyclic_group(order), integer_group());
  std::vector<Value> marking{wg->delta(Value(std::int64_t{0}), Value(std::int64_t{1})),
                             wg->shift(Value(std::int64_t{1}))};
  return MarkedGroup(wg, std::move(marking),
                     "(Z/" + std::to_string(order) + " wr Z; c d_0, t)");
}

}  // namespace mgk
