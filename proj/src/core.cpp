#include "qstripe/core.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>

namespace qstripe {

namespace {

void check_same_n(int a, int b, const char* what) {
  if (a != b) {
    throw InputError(std::string("dimension mismatch: ") + what + " (" +
                     std::to_string(a) + " vs " + std::to_string(b) + ")");
  }
}

}  // namespace

DistanceMatrix::DistanceMatrix(int n, std::vector<Cost> entries)
    : n_(n), entries_(std::move(entries)), max_abs_(0) {
  if (n_ < 3) throw InputError("matrix size must be at least 3, got " + std::to_string(n_));
  if (entries_.size() != static_cast<std::size_t>(n_) * n_) {
    throw InputError("entry count does not match n*n");
  }
  for (int i = 0; i < n_; ++i) {
    if (at(i, i) != 0) {
      throw InputError("nonzero diagonal at row " + std::to_string(i + 1) +
                       ", column " + std::to_string(i + 1));
    }
    for (int j = i + 1; j < n_; ++j) {
      if (at(i, j) != at(j, i)) {
        throw InputError("asymmetric entries at row " + std::to_string(i + 1) +
                         ", column " + std::to_string(j + 1));
      }
      max_abs_ = std::max(max_abs_, std::abs(at(i, j)));
    }
  }
  // Every objective here is a sum of at most n^2 entries; reject matrices
  // whose worst-case accumulation could overflow the Cost type.
  const Cost cells = static_cast<Cost>(n_) * n_;
  if (max_abs_ != 0 && max_abs_ > std::numeric_limits<Cost>::max() / cells) {
    throw InputError("entries too large: n^2 * max|d| would overflow the cost accumulator");
  }
}

DistanceMatrix DistanceMatrix::induced(const std::vector<int>& cities) const {
  const int m = static_cast<int>(cities.size());
  std::vector<Cost> sub(static_cast<std::size_t>(m) * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) sub[static_cast<std::size_t>(a) * m + b] = at(cities[a], cities[b]);
  return DistanceMatrix(m, std::move(sub));
}

DistanceMatrix DistanceMatrix::load(std::istream& in) {
  int n = 0;
  if (!(in >> n)) throw InputError("failed to read matrix size");
  if (n < 3 || n > 100000) throw InputError("invalid matrix size " + std::to_string(n));
  std::vector<Cost> entries(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (!(in >> entries[static_cast<std::size_t>(i) * n + j])) {
        throw InputError("failed to read entry at row " + std::to_string(i + 1) +
                         ", column " + std::to_string(j + 1));
      }
    }
  }
  return DistanceMatrix(n, std::move(entries));
}

DistanceMatrix DistanceMatrix::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open matrix file: " + path);
  return load(in);
}

void DistanceMatrix::save(std::ostream& out) const {
  out << n_ << '\n';
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) out << at(i, j) << (j + 1 == n_ ? '\n' : ' ');
  }
}

SquareMatrix::SquareMatrix(int n, std::vector<Cost> entries)
    : n_(n), entries_(std::move(entries)) {
  if (n_ < 1) throw InputError("square matrix size must be positive");
  if (entries_.size() != static_cast<std::size_t>(n_) * n_) {
    throw InputError("entry count does not match n*n");
  }
}

Tour::Tour(std::vector<int> order) : order_(std::move(order)) {
  const int n = static_cast<int>(order_.size());
  if (n < 1) throw InputError("empty tour");
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int c : order_) {
    if (c < 0 || c >= n || seen[static_cast<std::size_t>(c)]) {
      throw InputError("tour is not a permutation of 0.." + std::to_string(n - 1));
    }
    seen[static_cast<std::size_t>(c)] = 1;
  }
}

Tour Tour::identity(int n) {
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  return Tour(std::move(order));
}

Tour Tour::rotated(int shift) const {
  const int n = size();
  std::vector<int> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = at(i + shift);
  return Tour(std::move(out));
}

Tour Tour::reversed() const {
  std::vector<int> out(order_.rbegin(), order_.rend());
  return Tour(std::move(out));
}

QStripeInstance::QStripeInstance(DistanceMatrix m, int stripe) : matrix(std::move(m)), q(stripe) {
  if (q < 1 || 2 * q > matrix.size() - 1) {
    throw InputError("stripe width must satisfy 1 <= q <= (n-1)/2, got q=" + std::to_string(q) +
                     " for n=" + std::to_string(matrix.size()));
  }
}

QapInstance::QapInstance(DistanceMatrix dist, SquareMatrix coupling)
    : d(std::move(dist)), c(std::move(coupling)) {
  check_same_n(d.size(), c.size(), "QAP matrices");
}

Cost tsp_cost(const Tour& t, const DistanceMatrix& m) {
  check_same_n(t.size(), m.size(), "tour vs matrix");
  const int n = m.size();
  Cost total = 0;
  for (int i = 0; i < n; ++i) total += m.at(t.at(i), t.at(i + 1));
  return total;
}

Cost qstripe_cost(const Tour& t, const QStripeInstance& inst) {
  check_same_n(t.size(), inst.matrix.size(), "tour vs instance");
  const int n = inst.matrix.size();
  Cost total = 0;
  for (int p = 1; p <= inst.q; ++p)
    for (int i = 0; i < n; ++i) total += inst.matrix.at(t.at(i), t.at(i + p));
  return total;
}

Cost bottleneck_qstripe_cost(const Tour& t, const QStripeInstance& inst) {
  check_same_n(t.size(), inst.matrix.size(), "tour vs instance");
  const int n = inst.matrix.size();
  Cost worst = std::numeric_limits<Cost>::min();
  for (int p = 1; p <= inst.q; ++p)
    for (int i = 0; i < n; ++i) worst = std::max(worst, inst.matrix.at(t.at(i), t.at(i + p)));
  return worst;
}

Cost qap_cost(const Tour& t, const QapInstance& inst) {
  check_same_n(t.size(), inst.d.size(), "tour vs instance");
  const int n = inst.d.size();
  Cost total = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) total += inst.d.at(t.at(i), t.at(j)) * inst.c.at(i, j);
  return total;
}

QapInstance qstripe_as_qap(const QStripeInstance& inst) {
  const int n = inst.matrix.size();
  std::vector<Cost> adj(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const int gap = std::abs(i - j);
      if (gap <= inst.q || gap >= n - inst.q) adj[static_cast<std::size_t>(i) * n + j] = 1;
    }
  }
  return QapInstance(inst.matrix, SquareMatrix(n, std::move(adj)));
}

}  // namespace qstripe
