#include "mgk/cayley.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>
#include <unordered_map>

#include "mgk/error.hpp"

namespace mgk {

Value evaluate_word(const GroupPtr& g, const std::vector<Value>& letters,
                    const Word& w) {
  Value acc = g->identity();
  for (int x : w) {
    if (x == 0 || static_cast<std::size_t>(std::abs(x)) > letters.size())
      throw Precondition("word letter out of range: " + std::to_string(x));
    const Value& v = letters[static_cast<std::size_t>(std::abs(x)) - 1];
    acc = g->multiply(acc, x > 0 ? v : g->inverse(v));
  }
  return acc;
}

RootedBall ball(const MarkedGroup& mg, int R, std::size_t vertex_cap) {
  const GroupPtr& g = mg.group();
  const int k = static_cast<int>(mg.k());
  std::vector<Value> inv;
  for (const Value& s : mg.marking()) inv.push_back(g->inverse(s));

  // BFS over s_j g and s_j^-1 g
  std::unordered_map<Value, int, ValueHash> dist;
  std::vector<Value> order;
  const Value e = g->identity();
  dist.emplace(e, 0);
  order.push_back(e);
  std::size_t head = 0;
  while (head < order.size()) {
    const Value v = order[head++];
    const int d = dist.at(v);
    if (d == R) continue;
    for (int j = 0; j < k; ++j) {
      for (int dir = 0; dir < 2; ++dir) {
        Value w = g->multiply(dir ? inv[static_cast<std::size_t>(j)]
                                  : mg.marking()[static_cast<std::size_t>(j)],
                              v);
        if (dist.emplace(w, d + 1).second) {
          order.push_back(std::move(w));
          if (order.size() > vertex_cap)
            throw ResourceExhausted("ball vertex cap exceeded at radius " +
                                    std::to_string(d + 1));
        }
      }
    }
  }

  RootedBall out;
  out.radius = R;
  out.color_count = k;
  out.vertices = std::move(order);
  std::sort(out.vertices.begin(), out.vertices.end(),
            [&](const Value& a, const Value& b) {
              const int da = dist.at(a), db = dist.at(b);
              return da != db ? da < db : a < b;
            });
  std::unordered_map<Value, std::int32_t, ValueHash> index;
  out.distance.resize(out.vertices.size());
  for (std::size_t i = 0; i < out.vertices.size(); ++i) {
    index.emplace(out.vertices[i], static_cast<std::int32_t>(i));
    out.distance[i] = dist.at(out.vertices[i]);
  }
  for (std::size_t i = 0; i < out.vertices.size(); ++i)
    for (int j = 0; j < k; ++j) {
      Value w = g->multiply(mg.marking()[static_cast<std::size_t>(j)],
                            out.vertices[i]);
      auto it = index.find(w);
      if (it != index.end())
        out.edges.push_back({static_cast<std::int32_t>(i), it->second,
                             static_cast<std::int32_t>(j)});
    }
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

std::string RootedBall::to_json() const {
  std::ostringstream os;
  os << "{\"radius\":" << radius << ",\"vertices\":[";
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (i) os << ',';
    os << "{\"dist\":" << distance[i] << "}";
  }
  os << "],\"edges\":[";
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i) os << ',';
    os << "{\"src\":" << edges[i][0] << ",\"dst\":" << edges[i][1]
       << ",\"color\":" << edges[i][2] << ",\"dir\":1}";
  }
  os << "]}";
  return os.str();
}

namespace {
// per-vertex color tables: out[color] and in[color] targets, -1 when absent
struct ColorTables {
  std::vector<std::int32_t> out, in;
};
std::vector<ColorTables> color_tables(const RootedBall& b) {
  std::vector<ColorTables> t(b.vertices.size());
  for (auto& ct : t) {
    ct.out.assign(static_cast<std::size_t>(b.color_count), -1);
    ct.in.assign(static_cast<std::size_t>(b.color_count), -1);
  }
  for (const auto& e : b.edges) {
    t[static_cast<std::size_t>(e[0])].out[static_cast<std::size_t>(e[2])] = e[1];
    t[static_cast<std::size_t>(e[1])].in[static_cast<std::size_t>(e[2])] = e[0];
  }
  return t;
}
}  // namespace

BallIso balls_isomorphic(const RootedBall& b1, const RootedBall& b2) {
  if (b1.radius != b2.radius)
    throw Precondition("ball radii differ: " + std::to_string(b1.radius) +
                       " vs " + std::to_string(b2.radius));
  if (b1.color_count != b2.color_count)
    throw Precondition("color counts differ");
  BallIso out;
  if (b1.vertices.size() != b2.vertices.size()) {
    out.reason = "vertex count mismatch: " + std::to_string(b1.vertices.size()) +
                 " vs " + std::to_string(b2.vertices.size());
    return out;
  }
  if (b1.edges.size() != b2.edges.size()) {
    out.reason = "edge count mismatch: " + std::to_string(b1.edges.size()) +
                 " vs " + std::to_string(b2.edges.size());
    return out;
  }
  const auto t1 = color_tables(b1);
  const auto t2 = color_tables(b2);
  std::vector<std::int32_t> map1(b1.vertices.size(), -1);
  std::vector<std::int32_t> map2(b2.vertices.size(), -1);
  map1[0] = 0;
  map2[0] = 0;
  std::vector<std::int32_t> queue{0};
  std::size_t head = 0;
  while (head < queue.size()) {
    const std::int32_t v = queue[head++];
    const std::int32_t w = map1[static_cast<std::size_t>(v)];
    for (int c = 0; c < b1.color_count; ++c) {
      for (int dir = 0; dir < 2; ++dir) {
        const std::int32_t x =
            dir ? t1[static_cast<std::size_t>(v)].in[static_cast<std::size_t>(c)]
                : t1[static_cast<std::size_t>(v)].out[static_cast<std::size_t>(c)];
        const std::int32_t y =
            dir ? t2[static_cast<std::size_t>(w)].in[static_cast<std::size_t>(c)]
                : t2[static_cast<std::size_t>(w)].out[static_cast<std::size_t>(c)];
        if ((x < 0) != (y < 0)) {
          std::ostringstream os;
          os << "edge presence differs at vertex pair (" << v << "," << w
             << "), color " << c << (dir ? " incoming" : " outgoing")
             << ", BFS frontier distance " << b1.distance[static_cast<std::size_t>(v)];
          out.reason = os.str();
          return out;
        }
        if (x < 0) continue;
        std::int32_t& mx = map1[static_cast<std::size_t>(x)];
        std::int32_t& my = map2[static_cast<std::size_t>(y)];
        if (mx < 0 && my < 0) {
          mx = y;
          my = x;
          queue.push_back(x);
        } else if (mx != y || my != x) {
          std::ostringstream os;
          os << "forced targets conflict at vertex pair (" << v << "," << w
             << "), color " << c << (dir ? " incoming" : " outgoing");
          out.reason = os.str();
          return out;
        }
      }
    }
  }
  // deterministic balls of equal size: the propagation must cover everything
  for (std::size_t i = 0; i < map1.size(); ++i)
    if (map1[i] < 0) {
      out.reason = "vertex " + std::to_string(i) + " unreached by propagation";
      return out;
    }
  out.isomorphic = true;
  out.mapping = std::move(map1);
  return out;
}

AgreementRadius agreement_radius(const MarkedGroup& a, const MarkedGroup& b,
                                 int rmax, std::size_t vertex_cap) {
  if (a.k() != b.k()) throw Precondition("marking lengths differ");
  AgreementRadius out;
  for (int r = 0; r <= rmax; ++r) {
    RootedBall ba = ball(a, r, vertex_cap);
    RootedBall bb = ball(b, r, vertex_cap);
    if (!balls_isomorphic(ba, bb).isomorphic) {
      out.value = r - 1;
      if (out.value < 0) out.value = 0;  // disagree already at radius 0: degenerate
      out.at_least_rmax = false;
      return out;
    }
  }
  out.value = rmax;
  out.at_least_rmax = true;
  return out;
}

MarkedGroup induce_marking(const MarkedGroup& mg, const std::vector<Word>& words) {
  std::vector<Value> marking;
  marking.reserve(words.size());
  for (const Word& w : words)
    marking.push_back(evaluate_word(mg.group(), mg.marking(), w));
  return MarkedGroup(mg.group(), std::move(marking),
                     "induced(" + mg.describe() + ")");
}

}  // namespace mgk
