#ifndef QSTRIPE_CORE_HPP
#define QSTRIPE_CORE_HPP

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace qstripe {

using Cost = std::int64_t;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Symmetric cost matrix with zero diagonal. Entries are exact integers;
/// geometric instances go through a fixed scale factor before construction.
/// Cities are 0-indexed here; the 1-indexed external numbering is confined
/// to I/O.
class DistanceMatrix {
 public:
  DistanceMatrix(int n, std::vector<Cost> entries);

  int size() const { return n_; }
  Cost at(int i, int j) const { return entries_[static_cast<std::size_t>(i) * n_ + j]; }
  Cost max_abs() const { return max_abs_; }

  /// Principal sub-matrix on the given (strictly increasing) cities.
  DistanceMatrix induced(const std::vector<int>& cities) const;

  /// Text format: line 1 = n, then n rows of n entries.
  static DistanceMatrix load(std::istream& in);
  static DistanceMatrix load_file(const std::string& path);
  void save(std::ostream& out) const;

  bool operator==(const DistanceMatrix&) const = default;

 private:
  int n_;
  std::vector<Cost> entries_;
  Cost max_abs_;
};

/// Plain square integer matrix, no symmetry requirement (QAP coupling side).
class SquareMatrix {
 public:
  SquareMatrix(int n, std::vector<Cost> entries);

  int size() const { return n_; }
  Cost at(int i, int j) const { return entries_[static_cast<std::size_t>(i) * n_ + j]; }

 private:
  int n_;
  std::vector<Cost> entries_;
};

/// A cyclic permutation of cities 0..n-1; position arithmetic wraps mod n.
class Tour {
 public:
  explicit Tour(std::vector<int> order);
  static Tour identity(int n);

  int size() const { return static_cast<int>(order_.size()); }
  /// City at position i, cyclically (i may be any non-negative index).
  int at(int i) const { return order_[static_cast<std::size_t>(i) % order_.size()]; }
  const std::vector<int>& order() const { return order_; }

  Tour rotated(int shift) const;
  Tour reversed() const;

  bool operator==(const Tour&) const = default;

 private:
  std::vector<int> order_;
};

struct QStripeInstance {
  DistanceMatrix matrix;
  int q;

  QStripeInstance(DistanceMatrix m, int stripe);
};

struct QapInstance {
  DistanceMatrix d;
  SquareMatrix c;

  QapInstance(DistanceMatrix dist, SquareMatrix coupling);
};

Cost tsp_cost(const Tour& t, const DistanceMatrix& m);
Cost qstripe_cost(const Tour& t, const QStripeInstance& inst);
Cost bottleneck_qstripe_cost(const Tour& t, const QStripeInstance& inst);
Cost qap_cost(const Tour& t, const QapInstance& inst);

/// Embeds a q-stripe instance into a QAP with the adjacency matrix of C_n^q
/// as coupling; qap_cost then equals twice the q-stripe cost of any tour.
QapInstance qstripe_as_qap(const QStripeInstance& inst);

}  // namespace qstripe

#endif  // QSTRIPE_CORE_HPP
