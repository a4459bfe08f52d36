#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mgk/group.hpp"

namespace mgk {

/// Free-group word over letters 1..l: signed indices, negative = inverse.
using Word = std::vector<int>;

Value evaluate_word(const GroupPtr& g, const std::vector<Value>& letters,
                    const Word& w);

/// Radius-R ball of a Cayley diagram as a rooted, edge-colored, oriented
/// graph. Vertices are sorted by (distance, canonical payload); vertex 0 is
/// the root. An edge (src, dst, color) means dst = s_color * src; both
/// endpoints lie in the ball.
struct RootedBall {
  int radius = 0;
  int color_count = 0;
  std::vector<Value> vertices;
  std::vector<int> distance;                        // per vertex
  std::vector<std::array<std::int32_t, 3>> edges;   // src, dst, color; sorted

  std::string to_json() const;  // {radius, vertices:[{dist}], edges:[...]}
};

/// BFS ball of radius R around the identity; edges with both endpoints
/// within R. Throws ResourceExhausted past vertex_cap.
RootedBall ball(const MarkedGroup& mg, int R, std::size_t vertex_cap = 2000000);

/// Result of the deterministic rooted-diagram matcher.
struct BallIso {
  bool isomorphic = false;
  std::vector<std::int32_t> mapping;  // vertex i of b1 -> mapping[i] of b2
  std::string reason;                 // first divergence when not isomorphic
};

/// Deterministic matcher: pair the roots, then propagate along colors in both
/// directions. Cayley balls are deterministic per color, so there is no
/// backtracking. Radius or color-count mismatch throws Precondition.
BallIso balls_isomorphic(const RootedBall& b1, const RootedBall& b2);

/// Largest R <= rmax with isomorphic balls; value rmax+1 encodes "at least
/// rmax" (all radii agreed). Linear scan from R=0, so the first failing
/// radius is the natural witness.
struct AgreementRadius {
  int value = 0;
  bool at_least_rmax = false;
  std::string str() const {
    return at_least_rmax ? "at least " + std::to_string(value)
                         : std::to_string(value);
  }
};
AgreementRadius agreement_radius(const MarkedGroup& a, const MarkedGroup& b,
                                 int rmax, std::size_t vertex_cap = 2000000);

/// New marking s_j = w_j(v_1...v_l) evaluated in mg's backend; the group
/// handle of the result is the generated subgroup (order on demand).
MarkedGroup induce_marking(const MarkedGroup& mg, const std::vector<Word>& words);

}  // namespace mgk
