#include "mgk/bsgs.hpp"

#include <algorithm>
#include <deque>

#include "mgk/error.hpp"

namespace mgk {

// ---------------------------------------------------------------- Slp

int Slp::gen(int g) {
  nodes_.push_back({Node::kGen, -1, -1, g, BigInt{}});
  return static_cast<int>(nodes_.size()) - 1;
}
int Slp::mul(int a, int b) {
  nodes_.push_back({Node::kMul, a, b, -1, BigInt{}});
  return static_cast<int>(nodes_.size()) - 1;
}
int Slp::inv(int a) {
  nodes_.push_back({Node::kInv, a, -1, -1, BigInt{}});
  return static_cast<int>(nodes_.size()) - 1;
}
int Slp::pow(int a, BigInt e) {
  nodes_.push_back({Node::kPow, a, -1, -1, std::move(e)});
  return static_cast<int>(nodes_.size()) - 1;
}

std::vector<Perm> Slp::eval(std::span<const Perm> gens,
                            std::span<const int> roots) const {
  std::vector<char> need(nodes_.size(), 0);
  {
    std::vector<int> stack(roots.begin(), roots.end());
    while (!stack.empty()) {
      const int n = stack.back();
      stack.pop_back();
      if (need[static_cast<std::size_t>(n)]) continue;
      need[static_cast<std::size_t>(n)] = 1;
      const Node& nd = nodes_[static_cast<std::size_t>(n)];
      if (nd.a >= 0) stack.push_back(nd.a);
      if (nd.b >= 0) stack.push_back(nd.b);
    }
  }
  std::vector<Perm> memo(nodes_.size());
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (!need[i]) continue;
    const Node& nd = nodes_[i];
    switch (nd.kind) {
      case Node::kGen:
        memo[i] = gens[static_cast<std::size_t>(nd.gen)];
        break;
      case Node::kMul:
        memo[i] = memo[static_cast<std::size_t>(nd.a)] *
                  memo[static_cast<std::size_t>(nd.b)];
        break;
      case Node::kInv:
        memo[i] = memo[static_cast<std::size_t>(nd.a)].inverse();
        break;
      case Node::kPow:
        memo[i] = memo[static_cast<std::size_t>(nd.a)].power(nd.exp);
        break;
    }
  }
  std::vector<Perm> out;
  out.reserve(roots.size());
  for (int r : roots) out.push_back(memo[static_cast<std::size_t>(r)]);
  return out;
}

int Slp::import(const Slp& other, int node, std::span<const int> gen_map) {
  std::unordered_map<int, int> memo;
  std::vector<std::pair<int, bool>> stack{{node, false}};
  while (!stack.empty()) {
    auto [n, ready] = stack.back();
    stack.pop_back();
    if (memo.count(n)) continue;
    const Node& nd = other.nodes_[static_cast<std::size_t>(n)];
    if (!ready) {
      stack.push_back({n, true});
      if (nd.a >= 0 && !memo.count(nd.a)) stack.push_back({nd.a, false});
      if (nd.b >= 0 && !memo.count(nd.b)) stack.push_back({nd.b, false});
      continue;
    }
    int copy = -1;
    switch (nd.kind) {
      case Node::kGen:
        copy = gen_map[static_cast<std::size_t>(nd.gen)];
        break;
      case Node::kMul:
        copy = mul(memo.at(nd.a), memo.at(nd.b));
        break;
      case Node::kInv:
        copy = inv(memo.at(nd.a));
        break;
      case Node::kPow:
        copy = pow(memo.at(nd.a), nd.exp);
        break;
    }
    memo[n] = copy;
  }
  return memo.at(node);
}

// ---------------------------------------------------------------- Bsgs

Bsgs::Bsgs(std::vector<Perm> gens, BsgsOptions opt)
    : opt_(std::move(opt)), input_gens_(std::move(gens)) {
  for (const Perm& g : input_gens_)
    if (g.degree()) {
      degree_ = g.degree();
      break;
    }
  for (const Perm& g : input_gens_)
    if (g.degree() != degree_)
      throw BackendMismatch("mixed permutation degrees in BSGS input");
  for (std::int32_t b : opt_.forced_base) push_level(b);
  if (opt_.forced_base.empty()) {
    std::int64_t beta0 = -1;
    for (const Perm& g : input_gens_) {
      const std::int64_t m = g.first_moved();
      if (m >= 0 && (beta0 < 0 || m < beta0)) beta0 = m;
    }
    if (beta0 >= 0) push_level(static_cast<std::int32_t>(beta0));
  }
  for (const Perm& g : input_gens_) add_strong(g);
}

void Bsgs::push_level(std::int32_t beta) {
  Level L;
  L.beta = beta;
  L.orbit.push_back(beta);
  L.tree[beta] = TreeEntry{};
  levels_.push_back(std::move(L));
}

void Bsgs::apply_inverse_transversal(std::size_t lvl, std::int32_t y,
                                     Perm& g) const {
  const Level& L = levels_[lvl];
  while (y != L.beta) {
    const TreeEntry& e = L.tree.at(y);
    if (e.shortcut >= 0) {
      g = shortcut_inv_[static_cast<std::size_t>(e.shortcut)] * g;
      return;  // shortcut edges run straight from the root
    }
    const std::size_t gid = static_cast<std::size_t>(e.label) >> 1;
    const bool inv_edge = (e.label & 1) != 0;
    g = (inv_edge ? sg_[gid] : sg_inv_[gid]) * g;
    y = e.parent;
  }
}

Perm Bsgs::transversal(std::size_t lvl, std::int32_t y) const {
  const Level& L = levels_[lvl];
  Perm u(degree_);
  bool started = false;
  while (y != L.beta) {
    const TreeEntry& e = L.tree.at(y);
    const Perm* lp;
    if (e.shortcut >= 0) {
      lp = &shortcut_[static_cast<std::size_t>(e.shortcut)];
      u = started ? u * *lp : *lp;
      return u;
    }
    const std::size_t gid = static_cast<std::size_t>(e.label) >> 1;
    const bool inv_edge = (e.label & 1) != 0;
    lp = inv_edge ? &sg_inv_[gid] : &sg_[gid];
    u = started ? u * *lp : *lp;
    started = true;
    y = e.parent;
  }
  return u;
}

std::pair<Perm, std::size_t> Bsgs::sift(Perm g) const {
  for (std::size_t lvl = 0; lvl < levels_.size(); ++lvl) {
    const Level& L = levels_[lvl];
    const std::int32_t y = g[static_cast<std::size_t>(L.beta)];
    if (y == L.beta) continue;
    if (!L.tree.count(y)) return {std::move(g), lvl};
    apply_inverse_transversal(lvl, y, g);
  }
  return {std::move(g), levels_.size()};
}

void Bsgs::note_point_added(std::size_t lvl) {
  const std::size_t sz = levels_[lvl].orbit.size();
  product_ /= static_cast<unsigned long>(sz - 1);
  product_ *= static_cast<unsigned long>(sz);
}

bool Bsgs::target_reached() const {
  return opt_.expected_order && product_ == *opt_.expected_order;
}

void Bsgs::add_edge(std::size_t lvl, std::int32_t from, std::int32_t to,
                    std::size_t gid, bool inv) {
  Level& L = levels_[lvl];
  TreeEntry e;
  e.parent = from;
  e.label = static_cast<std::int32_t>((gid << 1) | (inv ? 1u : 0u));
  e.depth = L.tree.at(from).depth + 1;
  if (static_cast<std::size_t>(e.depth) > opt_.depth_cap) {
    Perm u = transversal(lvl, from);
    u = (inv ? sg_inv_[gid] : sg_[gid]) * u;
    shortcut_.push_back(u);
    shortcut_inv_.push_back(u.inverse());
    e = TreeEntry{};
    e.parent = L.beta;
    e.shortcut = static_cast<std::int32_t>(shortcut_.size()) - 1;
    e.depth = 1;
  }
  L.tree[to] = e;
  L.orbit.push_back(to);
  note_point_added(lvl);
}

void Bsgs::grow_orbit(std::size_t lvl, std::vector<std::int32_t> frontier) {
  Level& L = levels_[lvl];
  std::deque<std::int32_t> queue(frontier.begin(), frontier.end());
  while (!queue.empty()) {
    const std::int32_t pt = queue.front();
    queue.pop_front();
    for (std::size_t gid = 0; gid < sg_.size(); ++gid) {
      if (sg_level_[gid] < lvl) continue;
      for (int dir = 0; dir < 2; ++dir) {
        const Perm& p = dir ? sg_inv_[gid] : sg_[gid];
        const std::int32_t q = p[static_cast<std::size_t>(pt)];
        if (L.tree.count(q)) continue;
        add_edge(lvl, pt, q, gid, dir != 0);
        queue.push_back(q);
      }
    }
  }
}

void Bsgs::extend_orbit_new_gen(std::size_t lvl, std::size_t gid) {
  Level& L = levels_[lvl];
  std::vector<std::int32_t> frontier;
  const std::size_t snapshot = L.orbit.size();
  for (std::size_t i = 0; i < snapshot; ++i) {
    const std::int32_t pt = L.orbit[i];
    for (int dir = 0; dir < 2; ++dir) {
      const Perm& p = dir ? sg_inv_[gid] : sg_[gid];
      const std::int32_t q = p[static_cast<std::size_t>(pt)];
      if (L.tree.count(q)) continue;
      add_edge(lvl, pt, q, gid, dir != 0);
      frontier.push_back(q);
    }
  }
  if (!frontier.empty()) grow_orbit(lvl, std::move(frontier));
}

void Bsgs::insert_raw(Perm g, std::size_t lvl) {
  if (lvl == levels_.size())
    push_level(static_cast<std::int32_t>(g.first_moved()));
  sg_inv_.push_back(g.inverse());
  sg_.push_back(std::move(g));
  sg_level_.push_back(lvl);
  const std::size_t gid = sg_.size() - 1;
  for (std::size_t i = 0; i <= lvl && i < levels_.size(); ++i)
    extend_orbit_new_gen(i, gid);
  completed_ = false;
}

void Bsgs::add_strong(Perm g) {
  if (!g.degree() || g.is_identity()) return;
  auto [residue, lvl] = sift(std::move(g));
  if (residue.is_identity()) return;
  insert_raw(std::move(residue), lvl);
}

void Bsgs::seed_words(const Slp& slp, std::span<const int> roots) {
  std::vector<Perm> elems = slp.eval(input_gens_, roots);
  for (Perm& e : elems) {
    if (target_reached()) break;
    add_strong(std::move(e));
  }
}

bool Bsgs::process_one_pair(std::size_t lvl, bool& added) {
  Level& L = levels_[lvl];
  std::size_t pt_idx = 0, gid = 0;
  bool found = false;
  // finish pending columns (new generators against settled orbit points)
  while (L.ws_gens < sg_.size()) {
    if (sg_level_[L.ws_gens] < lvl || L.cur_col >= L.ws_orbit) {
      ++L.ws_gens;
      L.cur_col = 0;
      continue;
    }
    gid = L.ws_gens;
    pt_idx = L.cur_col++;
    found = true;
    break;
  }
  if (!found) {
    // next row: a settled generator set against one new orbit point
    while (L.ws_orbit < L.orbit.size()) {
      if (L.cur_row >= L.ws_gens) {
        ++L.ws_orbit;
        L.cur_row = 0;
        continue;
      }
      if (sg_level_[L.cur_row] < lvl) {
        ++L.cur_row;
        continue;
      }
      gid = L.cur_row++;
      pt_idx = L.ws_orbit;
      found = true;
      break;
    }
  }
  if (!found) return false;

  const std::int32_t pt = L.orbit[pt_idx];
  // Schreier generator u_{g(pt)}^{-1} * g * u_{pt}
  Perm s = sg_[gid] * transversal(lvl, pt);
  const std::int32_t y = s[static_cast<std::size_t>(L.beta)];
  apply_inverse_transversal(lvl, y, s);
  if (s.is_identity()) return true;
  auto [residue, rl] = sift(std::move(s));
  if (!residue.is_identity()) {
    insert_raw(std::move(residue), rl);
    added = true;
  }
  return true;
}

void Bsgs::complete() {
  if (completed_) return;
  if (target_reached()) {
    target_hit_ = true;
    return;
  }
  std::size_t lvl = levels_.size();
  while (lvl > 0) {
    if (target_reached()) {
      target_hit_ = true;
      return;
    }
    bool added = false;
    const bool had_pair = process_one_pair(lvl - 1, added);
    if (!had_pair) {
      --lvl;
      continue;
    }
    if (added) lvl = std::min(levels_.size(), sg_level_.back() + 1);
  }
  completed_ = true;
}

const BigInt& Bsgs::order() {
  if (!completed_ && !target_hit_) complete();
  if (opt_.expected_order && product_ > *opt_.expected_order)
    throw Error("orbit product exceeds the ambient order bound");
  return product_;
}

bool Bsgs::contains(const Perm& g) {
  if (!completed_ && !target_hit_) complete();
  if (!g.degree() || g.is_identity()) return true;
  if (g.degree() != degree_) return false;
  auto [residue, lvl] = sift(g);
  (void)lvl;
  return residue.is_identity();
}

std::vector<std::int32_t> Bsgs::base() const {
  std::vector<std::int32_t> b;
  b.reserve(levels_.size());
  for (const Level& L : levels_) b.push_back(L.beta);
  return b;
}

PermGroupOrder bsgs_order(std::vector<Perm> gens, BsgsOptions opt) {
  bool all_trivial = true;
  for (const Perm& g : gens)
    if (g.degree() && !g.is_identity()) all_trivial = false;
  if (gens.empty() || all_trivial) return {BigOrder(BigInt(1)), nullptr};
  auto chain = std::make_shared<Bsgs>(std::move(gens), std::move(opt));
  BigInt o = chain->order();
  return {BigOrder(o), std::move(chain)};
}

// ---------------------------------------------------------------- WordBsgs

WordBsgs::WordBsgs(std::vector<Perm> gens, std::vector<std::int32_t> forced_base) {
  for (const Perm& g : gens)
    if (g.degree()) degree_ = g.degree();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const int leaf = slp_.gen(static_cast<int>(i));
    if (!gens[i].is_identity()) strong_.push_back({gens[i], leaf});
  }
  for (std::int32_t b : forced_base) {
    WLevel L;
    L.beta = b;
    levels_.push_back(std::move(L));
  }

  auto level_gens = [&](std::size_t lvl) {
    std::vector<std::size_t> ids;
    for (std::size_t i = 0; i < strong_.size(); ++i) {
      bool fixes = true;
      for (std::size_t j = 0; j < lvl; ++j)
        if (strong_[i].first[static_cast<std::size_t>(levels_[j].beta)] !=
            levels_[j].beta) {
          fixes = false;
          break;
        }
      if (fixes) ids.push_back(i);
    }
    return ids;
  };

  auto recompute_orbit = [&](std::size_t lvl) {
    WLevel& L = levels_[lvl];
    L.orbit.assign(1, L.beta);
    L.trans.clear();
    L.trans[L.beta] = {Perm(degree_), -1};
    const auto ids = level_gens(lvl);
    for (std::size_t qi = 0; qi < L.orbit.size(); ++qi) {
      const std::int32_t pt = L.orbit[qi];
      for (std::size_t id : ids) {
        const std::int32_t q = strong_[id].first[static_cast<std::size_t>(pt)];
        if (L.trans.count(q)) continue;
        const auto& [upt, wpt] = L.trans.at(pt);
        Perm u = strong_[id].first * upt;
        const int w =
            wpt < 0 ? strong_[id].second : slp_.mul(strong_[id].second, wpt);
        L.trans[q] = {std::move(u), w};
        L.orbit.push_back(q);
      }
    }
  };

  auto ensure_level_for = [&](const Perm& g) {
    for (const WLevel& L : levels_)
      if (g[static_cast<std::size_t>(L.beta)] != L.beta) return;
    WLevel L;
    L.beta = static_cast<std::int32_t>(g.first_moved());
    levels_.push_back(std::move(L));
    recompute_orbit(levels_.size() - 1);
  };

  // sift with word tracking; identity residue means member
  auto sift_word = [&](Perm g, int word) -> std::pair<Perm, int> {
    for (auto& L : levels_) {
      const std::int32_t y = g[static_cast<std::size_t>(L.beta)];
      if (y == L.beta) continue;
      auto it = L.trans.find(y);
      if (it == L.trans.end()) return {std::move(g), word};
      g = it->second.first.inverse() * g;
      if (it->second.second >= 0) word = slp_.mul(slp_.inv(it->second.second), word);
    }
    return {std::move(g), word};
  };

  bool dirty = true;
  while (dirty) {
    dirty = false;
    for (const auto& sg : strong_) ensure_level_for(sg.first);
    for (std::size_t lvl = 0; lvl < levels_.size(); ++lvl) recompute_orbit(lvl);
    for (std::size_t lvl = 0; lvl < levels_.size() && !dirty; ++lvl) {
      WLevel& L = levels_[lvl];
      const auto ids = level_gens(lvl);
      for (std::int32_t pt : L.orbit) {
        if (dirty) break;
        for (std::size_t id : ids) {
          const auto& [upt, wpt] = L.trans.at(pt);
          Perm s = strong_[id].first * upt;
          int sw = wpt < 0 ? strong_[id].second : slp_.mul(strong_[id].second, wpt);
          const std::int32_t y = s[static_cast<std::size_t>(L.beta)];
          const auto& [uy, wy] = L.trans.at(y);
          s = uy.inverse() * s;
          if (wy >= 0) sw = slp_.mul(slp_.inv(wy), sw);
          if (s.is_identity()) continue;
          auto [r, rw] = sift_word(std::move(s), sw);
          if (r.is_identity()) continue;
          strong_.push_back({std::move(r), rw});
          dirty = true;
          break;
        }
      }
    }
  }

  order_ = 1;
  for (const auto& L : levels_) {
    order_ *= static_cast<unsigned long>(L.orbit.size());
    base_.push_back(L.beta);
  }
}

std::optional<int> WordBsgs::express(const Perm& g) {
  // g = u_1 u_2 ... u_k from the sift decomposition
  Perm h = g;
  std::int64_t word = -1;
  bool have = false;
  int acc = -1;
  for (auto& L : levels_) {
    const std::int32_t y = h[static_cast<std::size_t>(L.beta)];
    if (y == L.beta) continue;
    auto it = L.trans.find(y);
    if (it == L.trans.end()) return std::nullopt;
    h = it->second.first.inverse() * h;
    const int uw = it->second.second;
    if (uw >= 0) acc = have ? slp_.mul(acc, uw) : uw, have = true;
  }
  (void)word;
  if (!h.is_identity()) return std::nullopt;
  if (!have) {
    // identity: empty product; synthesize g0 * g0^-1 when possible
    if (strong_.empty()) return std::nullopt;
    const int leaf = strong_[0].second;
    return slp_.mul(leaf, slp_.inv(leaf));
  }
  return acc;
}

}  // namespace mgk
