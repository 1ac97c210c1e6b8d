#ifndef QSTRIPE_GENERATORS_HPP
#define QSTRIPE_GENERATORS_HPP

#include <cstdint>
#include <vector>

#include "qstripe/core.hpp"

namespace qstripe {

/// Deterministic 64-bit stream (splitmix64): the state advances by the
/// golden-ratio constant and each output is finalized with two xor-shift
/// multiplies. Chosen so generated instances reproduce bit-exactly across
/// implementations.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform value in [0, bound).
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

 private:
  std::uint64_t state_;
};

/// Rooted tree with ordered children and non-negative integer edge lengths;
/// leaves are numbered 0..n-1 left to right (depth-first child order).
struct OrderedTree {
  std::vector<int> parent;             // parent[0] == -1 for the root
  std::vector<Cost> edge_length;       // length of the edge to the parent
  std::vector<std::vector<int>> children;  // in left-to-right order

  static OrderedTree from_parents(std::vector<int> parent, std::vector<Cost> edge_length);

  int node_count() const { return static_cast<int>(parent.size()); }
  std::vector<int> leaves_left_to_right() const;
};

struct Point {
  long long x = 0;
  long long y = 0;
};

/// The 0/1 separating family D_{n,q}: entry 1 exactly in the band
/// q+2 <= |i-j| <= n-q-2 (1-indexed reading of i, j).
DistanceMatrix gen_example_matrix(int n, int q);

/// Pairwise distances of a strictly convex clockwise point set, rounded
/// Euclidean at the given scale. Exact only up to the scale; callers wanting
/// exact Kalmanson instances should prefer tree metrics.
DistanceMatrix gen_convex_polygon_matrix(const std::vector<Point>& points, long long scale);

/// Exact leaf-to-leaf shortest-path matrix of an ordered tree.
DistanceMatrix gen_tree_metric_matrix(const OrderedTree& tree);

/// Random non-negative integer combination of tree metrics; post-verified to
/// pass the q-Kalmanson recognizer. Deterministic in the seed.
DistanceMatrix gen_random_q_kalmanson(int n, int q, std::uint64_t seed);

/// Random non-negative combination of the bases (i-j)^2 and u_i + u_j with
/// the diagonal zeroed; post-verified Monge.
DistanceMatrix gen_symmetric_monge(int n, std::uint64_t seed);

/// Random ordered tree with n leaves and integer edge lengths in [0, max_len].
OrderedTree gen_random_ordered_tree(int n_leaves, Cost max_len, SplitMix64& rng);

}  // namespace qstripe

#endif  // QSTRIPE_GENERATORS_HPP
