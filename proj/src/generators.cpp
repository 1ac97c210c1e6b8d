#include "qstripe/generators.hpp"

#include <algorithm>
#include <cmath>

#include "qstripe/matclass.hpp"

namespace qstripe {

namespace {

long long cross(const Point& o, const Point& a, const Point& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

// Distance of every node to the root, summed edge lengths.
std::vector<Cost> depths(const OrderedTree& t) {
  const int m = t.node_count();
  std::vector<Cost> depth(static_cast<std::size_t>(m), 0);
  std::vector<int> stack = {0};
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int c : t.children[static_cast<std::size_t>(u)]) {
      depth[static_cast<std::size_t>(c)] =
          depth[static_cast<std::size_t>(u)] + t.edge_length[static_cast<std::size_t>(c)];
      stack.push_back(c);
    }
  }
  return depth;
}

int lowest_common_ancestor(const OrderedTree& t, int u, int v) {
  std::vector<char> seen(static_cast<std::size_t>(t.node_count()), 0);
  for (int x = u; x != -1; x = t.parent[static_cast<std::size_t>(x)]) seen[static_cast<std::size_t>(x)] = 1;
  for (int x = v; x != -1; x = t.parent[static_cast<std::size_t>(x)]) {
    if (seen[static_cast<std::size_t>(x)]) return x;
  }
  throw InputError("tree is not connected");
}

void validate_tree(const OrderedTree& t) {
  const int m = t.node_count();
  if (m < 1 || t.edge_length.size() != t.parent.size() || t.children.size() != t.parent.size()) {
    throw InputError("malformed tree: inconsistent node arrays");
  }
  if (t.parent[0] != -1) throw InputError("malformed tree: node 0 must be the root");
  std::vector<int> seen_parent(static_cast<std::size_t>(m), -2);
  for (int u = 0; u < m; ++u) {
    for (int c : t.children[static_cast<std::size_t>(u)]) {
      if (c <= 0 || c >= m) throw InputError("malformed tree: child index out of range");
      seen_parent[static_cast<std::size_t>(c)] = u;
    }
  }
  for (int u = 1; u < m; ++u) {
    if (t.parent[static_cast<std::size_t>(u)] != seen_parent[static_cast<std::size_t>(u)]) {
      throw InputError("malformed tree: parent/children mismatch at node " + std::to_string(u));
    }
    if (t.edge_length[static_cast<std::size_t>(u)] < 0) {
      throw InputError("malformed tree: negative edge length");
    }
  }
}

}  // namespace

OrderedTree OrderedTree::from_parents(std::vector<int> parent, std::vector<Cost> edge_length) {
  OrderedTree t;
  t.parent = std::move(parent);
  t.edge_length = std::move(edge_length);
  t.children.resize(t.parent.size());
  for (std::size_t u = 1; u < t.parent.size(); ++u) {
    const int p = t.parent[u];
    if (p < 0 || static_cast<std::size_t>(p) >= u) {
      throw InputError("from_parents requires parent[u] < u");
    }
    t.children[static_cast<std::size_t>(p)].push_back(static_cast<int>(u));
  }
  return t;
}

std::vector<int> OrderedTree::leaves_left_to_right() const {
  std::vector<int> leaves;
  std::vector<int> stack = {0};
  // Explicit stack, pushing children reversed so they pop left-to-right.
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    if (children[static_cast<std::size_t>(u)].empty()) {
      leaves.push_back(u);
      continue;
    }
    for (auto it = children[static_cast<std::size_t>(u)].rbegin();
         it != children[static_cast<std::size_t>(u)].rend(); ++it) {
      stack.push_back(*it);
    }
  }
  return leaves;
}

DistanceMatrix gen_example_matrix(int n, int q) {
  if (q < 1 || n < 2 * q + 4) {
    throw InputError("separating family needs q >= 1 and n >= 2q+4");
  }
  std::vector<Cost> entries(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int gap = std::abs(i - j);
      if (gap >= q + 2 && gap <= n - q - 2) entries[static_cast<std::size_t>(i) * n + j] = 1;
    }
  }
  return DistanceMatrix(n, std::move(entries));
}

DistanceMatrix gen_convex_polygon_matrix(const std::vector<Point>& points, long long scale) {
  const int n = static_cast<int>(points.size());
  if (n < 3) throw InputError("polygon needs at least 3 points");
  if (scale < 1) throw InputError("scale must be positive");
  for (int i = 0; i < n; ++i) {
    const Point& a = points[static_cast<std::size_t>(i)];
    const Point& b = points[static_cast<std::size_t>((i + 1) % n)];
    const Point& c = points[static_cast<std::size_t>((i + 2) % n)];
    if (cross(a, b, c) >= 0) {
      throw InputError("points are not in strictly convex clockwise position at vertex " +
                       std::to_string(i + 2));
    }
  }
  std::vector<Cost> entries(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const long double dx = static_cast<long double>(points[static_cast<std::size_t>(i)].x -
                                                      points[static_cast<std::size_t>(j)].x);
      const long double dy = static_cast<long double>(points[static_cast<std::size_t>(i)].y -
                                                      points[static_cast<std::size_t>(j)].y);
      const Cost d = static_cast<Cost>(std::llroundl(scale * std::sqrt(dx * dx + dy * dy)));
      entries[static_cast<std::size_t>(i) * n + j] = d;
      entries[static_cast<std::size_t>(j) * n + i] = d;
    }
  }
  return DistanceMatrix(n, std::move(entries));
}

DistanceMatrix gen_tree_metric_matrix(const OrderedTree& tree) {
  validate_tree(tree);
  const std::vector<int> leaves = tree.leaves_left_to_right();
  const int n = static_cast<int>(leaves.size());
  if (n < 3) throw InputError("tree metric needs at least 3 leaves");
  const std::vector<Cost> depth = depths(tree);
  std::vector<Cost> entries(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const int u = leaves[static_cast<std::size_t>(i)];
      const int v = leaves[static_cast<std::size_t>(j)];
      const int a = lowest_common_ancestor(tree, u, v);
      const Cost d = depth[static_cast<std::size_t>(u)] + depth[static_cast<std::size_t>(v)] -
                     2 * depth[static_cast<std::size_t>(a)];
      entries[static_cast<std::size_t>(i) * n + j] = d;
      entries[static_cast<std::size_t>(j) * n + i] = d;
    }
  }
  return DistanceMatrix(n, std::move(entries));
}

OrderedTree gen_random_ordered_tree(int n_leaves, Cost max_len, SplitMix64& rng) {
  if (n_leaves < 3) throw InputError("random tree needs at least 3 leaves");
  // Caterpillar shape: a spine path, leaves hanging off in left-to-right
  // order. Spine node u has children [its leaves..., next spine node].
  const int spine = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n_leaves)));
  const int total = spine + n_leaves;
  OrderedTree t;
  t.parent.assign(static_cast<std::size_t>(total), -1);
  t.edge_length.assign(static_cast<std::size_t>(total), 0);
  t.children.resize(static_cast<std::size_t>(total));
  for (int s = 1; s < spine; ++s) {
    t.parent[static_cast<std::size_t>(s)] = s - 1;
    t.edge_length[static_cast<std::size_t>(s)] = static_cast<Cost>(rng.below(static_cast<std::uint64_t>(max_len) + 1));
  }
  for (int leaf = 0; leaf < n_leaves; ++leaf) {
    const int node = spine + leaf;
    const int host = static_cast<int>((static_cast<long long>(leaf) * spine) / n_leaves);
    t.parent[static_cast<std::size_t>(node)] = host;
    t.edge_length[static_cast<std::size_t>(node)] = static_cast<Cost>(rng.below(static_cast<std::uint64_t>(max_len) + 1));
    t.children[static_cast<std::size_t>(host)].push_back(node);
  }
  for (int s = 1; s < spine; ++s) t.children[static_cast<std::size_t>(s - 1)].push_back(s);
  return t;
}

DistanceMatrix gen_random_q_kalmanson(int n, int q, std::uint64_t seed) {
  if (n < 3 || q < 1 || 2 * q > n - 1) throw InputError("invalid (n, q) for q-Kalmanson generator");
  SplitMix64 rng(seed);
  const int terms = 2 + static_cast<int>(rng.below(3));
  std::vector<Cost> entries(static_cast<std::size_t>(n) * n, 0);
  for (int t = 0; t < terms; ++t) {
    const Cost coeff = 1 + static_cast<Cost>(rng.below(3));
    OrderedTree tree = gen_random_ordered_tree(n, 6, rng);
    DistanceMatrix metric = gen_tree_metric_matrix(tree);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        entries[static_cast<std::size_t>(i) * n + j] += coeff * metric.at(i, j);
  }
  DistanceMatrix out(n, std::move(entries));
  // Tree metrics are Kalmanson and the class is closed under non-negative
  // combination; verify anyway so a bad instance can never leak into tests.
  if (n >= 2 * q + 2 && !is_q_kalmanson(out, q).verdict) {
    throw std::logic_error("q-Kalmanson generator produced a matrix failing its recognizer");
  }
  return out;
}

DistanceMatrix gen_symmetric_monge(int n, std::uint64_t seed) {
  if (n < 3) throw InputError("Monge generator needs n >= 3");
  for (std::uint64_t attempt = 0;; ++attempt) {
    SplitMix64 rng(seed + attempt);
    const Cost a = 1 + static_cast<Cost>(rng.below(4));
    std::vector<Cost> u(static_cast<std::size_t>(n));
    // u_i <= a keeps the zeroed diagonal inside the quadratic base's slack.
    for (auto& v : u) v = static_cast<Cost>(rng.below(static_cast<std::uint64_t>(a) + 1));
    std::vector<Cost> entries(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        const Cost gap = static_cast<Cost>(i - j);
        entries[static_cast<std::size_t>(i) * n + j] =
            a * gap * gap + u[static_cast<std::size_t>(i)] + u[static_cast<std::size_t>(j)];
      }
    }
    DistanceMatrix out(n, std::move(entries));
    if (is_monge(out).verdict) return out;
  }
}

}  // namespace qstripe
