#ifndef QSTRIPE_GRAPHS_HPP
#define QSTRIPE_GRAPHS_HPP

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "qstripe/core.hpp"

namespace qstripe {

class UndirectedGraph {
 public:
  explicit UndirectedGraph(int n);

  int size() const { return n_; }
  void add_edge(int u, int v);
  bool has_edge(int u, int v) const { return adj_[static_cast<std::size_t>(u) * n_ + v]; }
  int degree(int u) const { return degree_[static_cast<std::size_t>(u)]; }
  const std::vector<int>& neighbors(int u) const { return nbrs_[static_cast<std::size_t>(u)]; }
  std::vector<std::pair<int, int>> edges() const;  // sorted, u < v
  int edge_count() const { return edge_count_; }

  /// Text format: line 1 = "n m", then m lines "u v" (1-indexed).
  static UndirectedGraph load(std::istream& in);
  static UndirectedGraph load_file(const std::string& path);
  void save(std::ostream& out) const;

 private:
  int n_;
  int edge_count_ = 0;
  std::vector<char> adj_;
  std::vector<int> degree_;
  std::vector<std::vector<int>> nbrs_;
};

class DirectedGraph {
 public:
  explicit DirectedGraph(int n);

  int size() const { return n_; }
  void add_arc(int u, int v);
  bool has_arc(int u, int v) const { return adj_[static_cast<std::size_t>(u) * n_ + v]; }
  const std::vector<int>& successors(int u) const { return succ_[static_cast<std::size_t>(u)]; }
  std::vector<std::pair<int, int>> arcs() const;
  int in_degree(int v) const { return in_degree_[static_cast<std::size_t>(v)]; }
  int out_degree(int v) const { return static_cast<int>(succ_[static_cast<std::size_t>(v)].size()); }

  static DirectedGraph load(std::istream& in);
  static DirectedGraph load_file(const std::string& path);
  void save(std::ostream& out) const;

 private:
  int n_;
  std::vector<char> adj_;
  std::vector<int> in_degree_;
  std::vector<std::vector<int>> succ_;
};

/// Cyclic vertex order whose every pair within cyclic distance <= q is
/// adjacent in the host graph.
struct Spine {
  std::vector<int> order;
};

/// True iff the order is a permutation and all q-windows (wrap-around
/// included) are host edges.
bool validate_spine(const UndirectedGraph& g, const Spine& spine, int q);

/// q-th power of the n-cycle: i ~ j iff |i-j| <= q or |i-j| >= n-q.
UndirectedGraph build_cqn(int n, int q);

/// 0 on edges, 1 on non-edges; the q-stripe optimum is 0 exactly when g has
/// a spanning C_n^q.
DistanceMatrix graph_to_qstripe_matrix(const UndirectedGraph& g);

enum class SearchStatus { kFound, kAbsent, kBudgetExceeded };

struct SpanResult {
  SearchStatus status = SearchStatus::kAbsent;
  std::optional<Spine> spine;
};

inline constexpr std::uint64_t kSpanSearchBudget = 50'000'000;

/// Exact backtracking search for a Hamiltonian spine of a spanning C_n^q,
/// v_1 fixed to vertex 0. Budget exhaustion is a third outcome, never
/// reported as absence.
SpanResult spanning_cqn_search(const UndirectedGraph& g, int q,
                               std::uint64_t budget = kSpanSearchBudget);

/// An edge [u,v] with three common neighbors x,y,z, if one exists. A planar
/// graph containing this configuration has no spanning C_n^2.
std::optional<std::array<int, 5>> forbidden_config_check(const UndirectedGraph& g);

struct PlanarSpanResult {
  std::optional<Spine> spine;
  bool forbidden_config_found = false;
  bool planarity_assumed = true;  // planarity is taken on trust, not tested
};

/// Polynomial spanning-C_n^2 decision for planar inputs: absent on the
/// forbidden configuration, otherwise each starting triangle extends
/// deterministically.
PlanarSpanResult spanning_c2_planar(const UndirectedGraph& g);

struct Reduction {
  UndirectedGraph g1;
  std::vector<int> part;  // part[v] in 0..q, class W_{part[v]}
  int q;
};

/// Hardness gadget: vertex v of the digraph becomes v_1..v_{2q+2} with edges
/// [v_i,v_j] for |i-j| <= q; arc (u,v) becomes edges [u_i,v_j] for i-j >= q+2.
Reduction reduce_hc_to_g1(const DirectedGraph& g, int q);

/// G2 = G1 plus the clique on W_1 ∪ ... ∪ W_q (split graph, independent W_0).
UndirectedGraph extend_g1_to_g2(const UndirectedGraph& g1, const std::vector<int>& part, int q);

inline constexpr int kHamiltonianCap = 8;

std::optional<std::vector<int>> hamiltonian_circuit_brute(const DirectedGraph& g,
                                                          int cap = kHamiltonianCap);

/// Induced K_{1,4} witness (center, four pairwise non-adjacent neighbors),
/// or nullopt when the graph is K_{1,4}-free.
std::optional<std::array<int, 5>> is_k14_free(const UndirectedGraph& g);

}  // namespace qstripe

#endif  // QSTRIPE_GRAPHS_HPP
