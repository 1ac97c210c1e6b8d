#ifndef QSTRIPE_MATCLASS_HPP
#define QSTRIPE_MATCLASS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qstripe/core.hpp"

namespace qstripe {

/// Strictly increasing cities (0-indexed).
struct CitySubset {
  std::vector<int> cities;

  explicit CitySubset(std::vector<int> c);
  int size() const { return static_cast<int>(cities.size()); }

  bool operator==(const CitySubset&) const = default;
};

struct Matching {
  std::vector<std::pair<int, int>> edges;  // each pair (a, b) with a < b, sorted
  Cost weight = 0;

  bool operator==(const Matching&) const = default;
};

struct RecognitionReport {
  bool verdict = true;
  std::optional<CitySubset> witness;  // violating cities, present iff verdict is false
  std::optional<Matching> detail;     // a matching strictly beating the fully crossing one
  std::string description;            // human-readable statement of the violated condition
};

inline constexpr int kMatchingCityCap = 12;          // (cap-1)!! matchings enumerated
inline constexpr std::uint64_t kSubsetBudget = 10'000'000;

/// Matching pairing city i_j with i_{j+k} on 2k cities; every edge pair crosses.
Matching cross_match(const CitySubset& s, const DistanceMatrix& m);

/// Exhaustive maximum-weight perfect matching; ties broken by
/// lexicographically smallest sorted edge list.
Matching max_weight_perfect_matching(const CitySubset& s, const DistanceMatrix& m,
                                     int cap = kMatchingCityCap);

/// True iff the fully crossing matching on s (|s| = 2q+2) is maximum weight.
bool satisfies_q_kalmanson_condition(const CitySubset& s, const DistanceMatrix& m);

RecognitionReport is_q_kalmanson(const DistanceMatrix& m, int q,
                                 std::uint64_t budget = kSubsetBudget);
RecognitionReport is_kalmanson(const DistanceMatrix& m);
RecognitionReport is_monge(const DistanceMatrix& m);
RecognitionReport is_demidenko(const DistanceMatrix& m);

/// sum_i d(x, y_i) - CrossMatch(ys) for |ys| = 2q, x not in ys.
Cost f_x_value(int x, const CitySubset& ys, const DistanceMatrix& m);

/// Brute-force minimizer of f_x over all 2q-subsets of the other cities.
std::pair<CitySubset, Cost> minimize_f_x(int x, const QStripeInstance& inst,
                                         std::uint64_t budget = kSubsetBudget);

/// The 2q cyclic neighbors of x (q preceding, q succeeding).
CitySubset circular_neighbors(int x, int n, int q);

}  // namespace qstripe

#endif  // QSTRIPE_MATCLASS_HPP
