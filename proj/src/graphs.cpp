#include "qstripe/graphs.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <ostream>
#include <sstream>

namespace qstripe {

namespace {

constexpr int kMaskVertexCap = 64;  // spanning search keeps adjacency in one word

std::vector<std::uint64_t> adjacency_masks(const UndirectedGraph& g) {
  std::vector<std::uint64_t> masks(static_cast<std::size_t>(g.size()), 0);
  for (int u = 0; u < g.size(); ++u)
    for (int v : g.neighbors(u)) masks[static_cast<std::size_t>(u)] |= 1ULL << v;
  return masks;
}

struct SpanSearch {
  SpanSearch(const UndirectedGraph& graph, const std::vector<std::uint64_t>& masks, int nn,
             int qq, std::uint64_t node_budget)
      : g(graph), adj(masks), n(nn), q(qq), budget(node_budget) {}

  const UndirectedGraph& g;
  const std::vector<std::uint64_t>& adj;
  int n;
  int q;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  std::vector<int> spine;
  std::uint64_t used = 0;
  bool out_of_budget = false;

  bool closes() const {
    for (int p = 1; p <= q; ++p)
      for (int i = n - p; i < n; ++i)
        if (!g.has_edge(spine[static_cast<std::size_t>(i)],
                        spine[static_cast<std::size_t>(i + p - n)]))
          return false;
    return true;
  }

  // Sound feasibility cuts; each only ever prunes prefixes that cannot be
  // completed to a valid spine.
  bool feasible() const {
    const int len = static_cast<int>(spine.size());
    const int remaining = n - len;
    const std::uint64_t unused = ~used & ((n == 64) ? ~0ULL : ((1ULL << n) - 1));

    // Closing windows: when remaining >= q-k, all of the last q-k spine
    // positions are still unfilled and must be adjacent to spine[k].
    for (int k = 0; k < q && k < len; ++k) {
      const int need = q - k;
      if (remaining >= need &&
          std::popcount(adj[static_cast<std::size_t>(spine[static_cast<std::size_t>(k)])] & unused) < need)
        return false;
    }

    // Window availability: an unused vertex ends up with 2q window-mates,
    // each of which is unused now or sits within the first/last q placed.
    std::uint64_t boundary = 0;
    for (int k = 0; k < q && k < len; ++k) {
      boundary |= 1ULL << spine[static_cast<std::size_t>(k)];
      boundary |= 1ULL << spine[static_cast<std::size_t>(len - 1 - k)];
    }
    std::uint64_t scan = unused;
    while (scan) {
      const int u = std::countr_zero(scan);
      scan &= scan - 1;
      if (std::popcount(adj[static_cast<std::size_t>(u)] & (unused | boundary)) < 2 * q)
        return false;
    }

    // Pigeonhole on a greedy independent set among the unused vertices:
    // pairwise non-adjacent vertices sit at least q+1 apart on the spine.
    std::uint64_t indep = 0;
    int indep_size = 0;
    scan = unused;
    while (scan) {
      const int u = std::countr_zero(scan);
      scan &= scan - 1;
      if ((adj[static_cast<std::size_t>(u)] & indep) == 0) {
        indep |= 1ULL << u;
        ++indep_size;
      }
    }
    if (indep_size > 0 && remaining < (indep_size - 1) * (q + 1) + 1) return false;

    // The unused vertices together with the current tail must be connected.
    if (remaining > 0) {
      const std::uint64_t region = unused | (1ULL << spine.back());
      std::uint64_t reached = 1ULL << spine.back();
      std::uint64_t frontier = reached;
      while (frontier) {
        const int u = std::countr_zero(frontier);
        frontier &= frontier - 1;
        const std::uint64_t fresh = adj[static_cast<std::size_t>(u)] & region & ~reached;
        reached |= fresh;
        frontier |= fresh;
      }
      if (reached != region) return false;
    }
    return true;
  }

  bool extend() {
    const int len = static_cast<int>(spine.size());
    if (len == n) return closes();
    if (++nodes > budget) {
      out_of_budget = true;
      return false;
    }
    if (!feasible()) return false;

    std::uint64_t candidates = ~used & ((n == 64) ? ~0ULL : ((1ULL << n) - 1));
    const int window = std::min(q, len);
    for (int k = 1; k <= window; ++k)
      candidates &= adj[static_cast<std::size_t>(spine[static_cast<std::size_t>(len - k)])];

    while (candidates) {
      const int v = std::countr_zero(candidates);
      candidates &= candidates - 1;
      spine.push_back(v);
      used |= 1ULL << v;
      if (extend()) return true;
      used &= ~(1ULL << v);
      spine.pop_back();
      if (out_of_budget) return false;
    }
    return false;
  }
};

}  // namespace

UndirectedGraph::UndirectedGraph(int n) : n_(n) {
  if (n_ < 1) throw InputError("graph needs at least one vertex");
  adj_.assign(static_cast<std::size_t>(n_) * n_, 0);
  degree_.assign(static_cast<std::size_t>(n_), 0);
  nbrs_.resize(static_cast<std::size_t>(n_));
}

void UndirectedGraph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw InputError("edge endpoint out of range");
  if (u == v) throw InputError("self-loops are not allowed");
  if (has_edge(u, v)) return;
  adj_[static_cast<std::size_t>(u) * n_ + v] = 1;
  adj_[static_cast<std::size_t>(v) * n_ + u] = 1;
  nbrs_[static_cast<std::size_t>(u)].push_back(v);
  nbrs_[static_cast<std::size_t>(v)].push_back(u);
  std::sort(nbrs_[static_cast<std::size_t>(u)].begin(), nbrs_[static_cast<std::size_t>(u)].end());
  std::sort(nbrs_[static_cast<std::size_t>(v)].begin(), nbrs_[static_cast<std::size_t>(v)].end());
  ++degree_[static_cast<std::size_t>(u)];
  ++degree_[static_cast<std::size_t>(v)];
  ++edge_count_;
}

std::vector<std::pair<int, int>> UndirectedGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(edge_count_));
  for (int u = 0; u < n_; ++u)
    for (int v : nbrs_[static_cast<std::size_t>(u)])
      if (u < v) out.emplace_back(u, v);
  return out;
}

UndirectedGraph UndirectedGraph::load(std::istream& in) {
  int n = 0, m = 0;
  if (!(in >> n >> m)) throw InputError("failed to read graph header 'n m'");
  if (n < 1 || m < 0) throw InputError("invalid graph header");
  UndirectedGraph g(n);
  for (int e = 0; e < m; ++e) {
    int u = 0, v = 0;
    if (!(in >> u >> v)) throw InputError("failed to read edge " + std::to_string(e + 1));
    if (u < 1 || v < 1 || u > n || v > n) {
      throw InputError("edge " + std::to_string(e + 1) + " endpoint out of range");
    }
    g.add_edge(u - 1, v - 1);
  }
  return g;
}

UndirectedGraph UndirectedGraph::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open graph file: " + path);
  return load(in);
}

void UndirectedGraph::save(std::ostream& out) const {
  const auto es = edges();
  out << n_ << ' ' << es.size() << '\n';
  for (const auto& [u, v] : es) out << u + 1 << ' ' << v + 1 << '\n';
}

DirectedGraph::DirectedGraph(int n) : n_(n) {
  if (n_ < 1) throw InputError("graph needs at least one vertex");
  adj_.assign(static_cast<std::size_t>(n_) * n_, 0);
  in_degree_.assign(static_cast<std::size_t>(n_), 0);
  succ_.resize(static_cast<std::size_t>(n_));
}

void DirectedGraph::add_arc(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw InputError("arc endpoint out of range");
  if (u == v) throw InputError("self-loops are not allowed");
  if (has_arc(u, v)) return;
  adj_[static_cast<std::size_t>(u) * n_ + v] = 1;
  succ_[static_cast<std::size_t>(u)].push_back(v);
  std::sort(succ_[static_cast<std::size_t>(u)].begin(), succ_[static_cast<std::size_t>(u)].end());
  ++in_degree_[static_cast<std::size_t>(v)];
}

std::vector<std::pair<int, int>> DirectedGraph::arcs() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (int v : succ_[static_cast<std::size_t>(u)]) out.emplace_back(u, v);
  return out;
}

DirectedGraph DirectedGraph::load(std::istream& in) {
  int n = 0, m = 0;
  if (!(in >> n >> m)) throw InputError("failed to read graph header 'n m'");
  if (n < 1 || m < 0) throw InputError("invalid graph header");
  DirectedGraph g(n);
  for (int e = 0; e < m; ++e) {
    int u = 0, v = 0;
    if (!(in >> u >> v)) throw InputError("failed to read arc " + std::to_string(e + 1));
    if (u < 1 || v < 1 || u > n || v > n) {
      throw InputError("arc " + std::to_string(e + 1) + " endpoint out of range");
    }
    g.add_arc(u - 1, v - 1);
  }
  return g;
}

DirectedGraph DirectedGraph::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open graph file: " + path);
  return load(in);
}

void DirectedGraph::save(std::ostream& out) const {
  const auto as = arcs();
  out << n_ << ' ' << as.size() << '\n';
  for (const auto& [u, v] : as) out << u + 1 << ' ' << v + 1 << '\n';
}

bool validate_spine(const UndirectedGraph& g, const Spine& spine, int q) {
  const int n = g.size();
  if (static_cast<int>(spine.order.size()) != n) return false;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int v : spine.order) {
    if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = 1;
  }
  for (int i = 0; i < n; ++i)
    for (int p = 1; p <= q; ++p)
      if (!g.has_edge(spine.order[static_cast<std::size_t>(i)],
                      spine.order[static_cast<std::size_t>((i + p) % n)]))
        return false;
  return true;
}

UndirectedGraph build_cqn(int n, int q) {
  if (q < 1 || n < 2 * q + 1) throw InputError("cycle power needs q >= 1 and n >= 2q+1");
  UndirectedGraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (j - i <= q || j - i >= n - q) g.add_edge(i, j);
  return g;
}

DistanceMatrix graph_to_qstripe_matrix(const UndirectedGraph& g) {
  const int n = g.size();
  if (n < 3) throw InputError("matrix needs at least 3 vertices");
  std::vector<Cost> entries(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && !g.has_edge(i, j)) entries[static_cast<std::size_t>(i) * n + j] = 1;
  return DistanceMatrix(n, std::move(entries));
}

SpanResult spanning_cqn_search(const UndirectedGraph& g, int q, std::uint64_t budget) {
  const int n = g.size();
  if (q < 1 || n < 2 * q + 1) throw InputError("spanning search needs q >= 1 and n >= 2q+1");
  if (n > kMaskVertexCap) {
    throw InputError("spanning search supports at most " + std::to_string(kMaskVertexCap) +
                     " vertices");
  }
  // C_n^q is 2q-regular; a low-degree vertex settles the question at once.
  for (int v = 0; v < n; ++v)
    if (g.degree(v) < 2 * q) return {SearchStatus::kAbsent, std::nullopt};

  const auto adj = adjacency_masks(g);
  SpanSearch search(g, adj, n, q, budget);
  search.spine.reserve(static_cast<std::size_t>(n));
  search.spine.push_back(0);  // rotation symmetry: fix v_1
  search.used = 1;
  if (search.extend()) return {SearchStatus::kFound, Spine{search.spine}};
  if (search.out_of_budget) return {SearchStatus::kBudgetExceeded, std::nullopt};
  return {SearchStatus::kAbsent, std::nullopt};
}

std::optional<std::array<int, 5>> forbidden_config_check(const UndirectedGraph& g) {
  const int n = g.size();
  for (int u = 0; u < n; ++u) {
    for (int v : g.neighbors(u)) {
      if (v <= u) continue;
      std::array<int, 3> common{};
      int found = 0;
      for (int x = 0; x < n && found < 3; ++x) {
        if (x == u || x == v) continue;
        if (g.has_edge(u, x) && g.has_edge(v, x)) common[static_cast<std::size_t>(found++)] = x;
      }
      if (found == 3) return std::array<int, 5>{u, v, common[0], common[1], common[2]};
    }
  }
  return std::nullopt;
}

PlanarSpanResult spanning_c2_planar(const UndirectedGraph& g) {
  const int n = g.size();
  if (n < 5) throw InputError("spanning C_n^2 needs n >= 5");
  PlanarSpanResult result;
  if (forbidden_config_check(g)) {
    result.forbidden_config_found = true;
    return result;
  }
  // Forbidden-configuration-freeness caps the common neighborhood of any
  // edge at two vertices, so each prefix extends to at most one candidate.
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (b == a || !g.has_edge(a, b)) continue;
      for (int c = 0; c < n; ++c) {
        if (c == a || c == b || !g.has_edge(b, c) || !g.has_edge(a, c)) continue;
        std::vector<int> spine = {a, b, c};
        std::vector<char> used(static_cast<std::size_t>(n), 0);
        used[static_cast<std::size_t>(a)] = used[static_cast<std::size_t>(b)] = used[static_cast<std::size_t>(c)] = 1;
        while (static_cast<int>(spine.size()) < n) {
          const int x = spine[spine.size() - 2];
          const int y = spine.back();
          int candidate = -1;
          for (int w : g.neighbors(y)) {
            if (used[static_cast<std::size_t>(w)] || !g.has_edge(x, w)) continue;
            candidate = w;
            break;
          }
          if (candidate < 0) break;
          spine.push_back(candidate);
          used[static_cast<std::size_t>(candidate)] = 1;
        }
        if (static_cast<int>(spine.size()) == n &&
            g.has_edge(spine[static_cast<std::size_t>(n - 2)], spine[0]) &&
            g.has_edge(spine[static_cast<std::size_t>(n - 1)], spine[0]) &&
            g.has_edge(spine[static_cast<std::size_t>(n - 1)], spine[1])) {
          result.spine = Spine{std::move(spine)};
          return result;
        }
      }
    }
  }
  return result;
}

Reduction reduce_hc_to_g1(const DirectedGraph& g, int q) {
  if (q < 2) throw InputError("reduction needs q >= 2");
  const int n = g.size();
  const int block = 2 * q + 2;
  UndirectedGraph g1(n * block);
  std::vector<int> part(static_cast<std::size_t>(n) * block, 0);
  const auto id = [block](int v, int i) { return v * block + (i - 1); };  // i in 1..2q+2

  for (int v = 0; v < n; ++v) {
    for (int i = 1; i <= block; ++i) {
      part[static_cast<std::size_t>(id(v, i))] = i % (q + 1);
      for (int j = i + 1; j <= block && j - i <= q; ++j) g1.add_edge(id(v, i), id(v, j));
    }
  }
  for (const auto& [u, v] : g.arcs()) {
    for (int i = q + 2; i <= block; ++i)
      for (int j = 1; j <= i - (q + 2); ++j) g1.add_edge(id(u, i), id(v, j));
  }
  // The mod-(q+1) classes must form a proper coloring; a full edge scan
  // guards the construction.
  for (const auto& [u, v] : g1.edges()) {
    if (part[static_cast<std::size_t>(u)] == part[static_cast<std::size_t>(v)]) {
      throw std::logic_error("reduction partition is not proper");
    }
  }
  return {std::move(g1), std::move(part), q};
}

UndirectedGraph extend_g1_to_g2(const UndirectedGraph& g1, const std::vector<int>& part, int q) {
  const int n = g1.size();
  if (static_cast<int>(part.size()) != n) throw InputError("partition size does not match graph");
  for (int v = 0; v < n; ++v) {
    if (part[static_cast<std::size_t>(v)] < 0 || part[static_cast<std::size_t>(v)] > q) {
      throw InputError("partition class out of range 0..q");
    }
  }
  UndirectedGraph g2(n);
  for (const auto& [u, v] : g1.edges()) g2.add_edge(u, v);
  for (int u = 0; u < n; ++u) {
    if (part[static_cast<std::size_t>(u)] == 0) continue;
    for (int v = u + 1; v < n; ++v)
      if (part[static_cast<std::size_t>(v)] != 0) g2.add_edge(u, v);
  }
  return g2;
}

std::optional<std::vector<int>> hamiltonian_circuit_brute(const DirectedGraph& g, int cap) {
  const int n = g.size();
  if (n > cap) {
    throw BudgetExceeded("Hamiltonian circuit cap is " + std::to_string(cap) +
                         " vertices, got " + std::to_string(n));
  }
  if (n < 2) return std::nullopt;
  std::vector<int> path = {0};
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  used[0] = 1;
  std::optional<std::vector<int>> found;

  const auto dfs = [&](auto&& self) -> bool {
    if (static_cast<int>(path.size()) == n) {
      if (g.has_arc(path.back(), 0)) {
        found = path;
        return true;
      }
      return false;
    }
    for (int v : g.successors(path.back())) {
      if (used[static_cast<std::size_t>(v)]) continue;
      used[static_cast<std::size_t>(v)] = 1;
      path.push_back(v);
      if (self(self)) return true;
      path.pop_back();
      used[static_cast<std::size_t>(v)] = 0;
    }
    return false;
  };
  dfs(dfs);
  return found;
}

std::optional<std::array<int, 5>> is_k14_free(const UndirectedGraph& g) {
  const int n = g.size();
  for (int c = 0; c < n; ++c) {
    const auto& nb = g.neighbors(c);
    const int deg = static_cast<int>(nb.size());
    if (deg < 4) continue;
    for (int a = 0; a < deg; ++a)
      for (int b = a + 1; b < deg; ++b) {
        if (g.has_edge(nb[static_cast<std::size_t>(a)], nb[static_cast<std::size_t>(b)])) continue;
        for (int d = b + 1; d < deg; ++d) {
          if (g.has_edge(nb[static_cast<std::size_t>(a)], nb[static_cast<std::size_t>(d)]) ||
              g.has_edge(nb[static_cast<std::size_t>(b)], nb[static_cast<std::size_t>(d)]))
            continue;
          for (int e = d + 1; e < deg; ++e) {
            if (g.has_edge(nb[static_cast<std::size_t>(a)], nb[static_cast<std::size_t>(e)]) ||
                g.has_edge(nb[static_cast<std::size_t>(b)], nb[static_cast<std::size_t>(e)]) ||
                g.has_edge(nb[static_cast<std::size_t>(d)], nb[static_cast<std::size_t>(e)]))
              continue;
            return std::array<int, 5>{c, nb[static_cast<std::size_t>(a)],
                                      nb[static_cast<std::size_t>(b)],
                                      nb[static_cast<std::size_t>(d)],
                                      nb[static_cast<std::size_t>(e)]};
          }
        }
      }
  }
  return std::nullopt;
}

}  // namespace qstripe
