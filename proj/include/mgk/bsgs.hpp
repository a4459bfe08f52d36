#pragma once

#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "mgk/order.hpp"
#include "mgk/perm.hpp"

namespace mgk {

/// Straight-line programs over a generator alphabet. Nodes form a DAG, so
/// shared subwords (powers of the shift, transported block words) are
/// evaluated once. Every element an Slp denotes is by construction a product
/// of the generators handed to eval().
class Slp {
 public:
  int gen(int g);
  int mul(int a, int b);
  int inv(int a);
  int pow(int a, BigInt e);
  int conj(int t, int a) { return mul(mul(t, a), inv(t)); }     // t a t^-1
  int comm(int a, int b) {                                      // a^-1 b^-1 a b
    return mul(mul(inv(a), inv(b)), mul(a, b));
  }

  std::size_t size() const { return nodes_.size(); }

  /// Evaluate roots over concrete generators, memoizing every node.
  std::vector<Perm> eval(std::span<const Perm> gens,
                         std::span<const int> roots) const;

  /// Copy a node (and its cone) from another program, mapping generator
  /// leaves through gen_map. Returns the corresponding node here.
  int import(const Slp& other, int node, std::span<const int> gen_map);

 private:
  struct Node {
    enum Kind { kGen, kMul, kInv, kPow } kind;
    int a = -1, b = -1;
    int gen = -1;
    BigInt exp;
  };
  std::vector<Node> nodes_;
};

/// Deterministic base-and-strong-generating-set chain for a permutation
/// group. Base points are chosen greedily (first moved point) unless a base
/// is forced; Schreier trees are BFS with depth-capped shortcut edges;
/// Schreier generators are processed in a fixed order, no randomization.
///
/// Certification modes:
///  - complete(): full deterministic Schreier-Sims; order() is exact.
///  - expected_order: the caller guarantees |<gens>| <= expected (the
///    generators live in an ambient group of that order). The orbit product
///    is always a lower bound for |<gens>|, so the moment it reaches the
///    expected value the chain is complete and the order certified without
///    further Schreier processing. If it stalls below the target the build
///    falls back to full completion.
struct BsgsOptions {
  std::optional<BigInt> expected_order;
  std::vector<std::int32_t> forced_base;  // pre-created levels, in order
  std::size_t depth_cap = 24;
};

class Bsgs {
 public:
  explicit Bsgs(std::vector<Perm> gens, BsgsOptions opt = {});

  /// Sift-insert extra elements given as words over the original generators
  /// (deterministic warm start; membership in the group holds by
  /// construction since words are products of the generators).
  void seed_words(const Slp& slp, std::span<const int> roots);

  void complete();

  /// Certified order of the generated group (runs complete() if needed).
  const BigInt& order();

  bool contains(const Perm& g);

  std::size_t degree() const { return degree_; }
  std::vector<std::int32_t> base() const;
  bool certified_by_target() const { return target_hit_; }
  std::size_t strong_generator_count() const { return sg_.size(); }

 private:
  struct TreeEntry {
    std::int32_t parent = -1;   // parent point (-1 at the root)
    std::int32_t label = -1;    // 2*gen_id + inverse_bit
    std::int32_t shortcut = -1; // shortcut id when >= 0 (edge from the root)
    std::int32_t depth = 0;
  };
  struct Level {
    std::int32_t beta = -1;
    std::vector<std::int32_t> orbit;                   // BFS order
    std::unordered_map<std::int32_t, TreeEntry> tree;  // point -> edge
    // Schreier-pair watermarks: region orbit[0..ws_orbit) x sg[0..ws_gens)
    // has been processed; cursors walk the next row/column.
    std::size_t ws_orbit = 0, ws_gens = 0;
    std::size_t cur_row = 0, cur_col = 0;
  };

  void push_level(std::int32_t beta);
  void apply_inverse_transversal(std::size_t lvl, std::int32_t y, Perm& g) const;
  Perm transversal(std::size_t lvl, std::int32_t y) const;

  // returns (residue, level); identity residue means membership
  std::pair<Perm, std::size_t> sift(Perm g) const;
  void add_strong(Perm g);
  void insert_raw(Perm g, std::size_t lvl);
  void extend_orbit_new_gen(std::size_t lvl, std::size_t gid);
  void grow_orbit(std::size_t lvl, std::vector<std::int32_t> frontier);
  void add_edge(std::size_t lvl, std::int32_t from, std::int32_t to,
                std::size_t gid, bool inv);
  void note_point_added(std::size_t lvl);
  bool target_reached() const;
  bool process_one_pair(std::size_t lvl, bool& added);

  std::size_t degree_ = 0;
  BsgsOptions opt_;
  std::vector<Perm> input_gens_;  // exactly as given, for Slp evaluation
  std::vector<Perm> sg_, sg_inv_;
  std::vector<std::size_t> sg_level_;
  std::vector<Perm> shortcut_, shortcut_inv_;
  std::vector<Level> levels_;
  BigInt product_ = 1;
  bool completed_ = false;
  bool target_hit_ = false;
};

/// Word-tracking Schreier-Sims for small degrees. Produces a full strong
/// generating set together with straight-line words over the input
/// generators; also expresses arbitrary members as words. Used to transport
/// stabilizer chains of small groups into big imprimitive ones.
class WordBsgs {
 public:
  WordBsgs(std::vector<Perm> gens, std::vector<std::int32_t> forced_base = {});

  const BigInt& order() const { return order_; }
  const Slp& slp() const { return slp_; }
  Slp& slp() { return slp_; }
  /// Strong generators as (permutation, slp node) pairs; input generators
  /// appear with their leaf nodes.
  const std::vector<std::pair<Perm, int>>& strong() const { return strong_; }
  const std::vector<std::int32_t>& base() const { return base_; }

  ///

  /// Word for a member, as an slp node; nullopt when g is not in the group.
  std::optional<int> express(const Perm& g);

 private:
  struct WLevel {
    std::int32_t beta;
    std::vector<std::int32_t> orbit;
    std::unordered_map<std::int32_t, std::pair<Perm, int>> trans;  // u_pt, word
  };
  std::size_t degree_ = 0;
  BigInt order_ = 1;
  Slp slp_;
  std::vector<std::pair<Perm, int>> strong_;
  std::vector<std::int32_t> base_;
  std::vector<WLevel> levels_;
};

/// Exact order of the group generated by permutations, with a membership
/// handle. Deterministic; empty input yields the trivial group.
struct PermGroupOrder {
  BigOrder order;
  std::shared_ptr<Bsgs> chain;  // null for the trivial group
};
PermGroupOrder bsgs_order(std::vector<Perm> gens, BsgsOptions opt = {});

}  // namespace mgk
