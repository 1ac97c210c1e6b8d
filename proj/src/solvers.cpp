#include "qstripe/solvers.hpp"

#include <algorithm>
#include <numeric>

namespace qstripe {

std::string certificate_name(Certificate c) {
  switch (c) {
    case Certificate::kIdentityByQKalmanson: return "identity-by-qkalmanson";
    case Certificate::kSupnickByMonge: return "supnick-by-monge";
    case Certificate::kBruteForce: return "brute-force";
  }
  return "unknown";
}

Tour supnick_permutation(int n) {
  if (n < 1) throw InputError("supnick permutation needs n >= 1");
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(n));
  for (int c = 0; c < n; c += 2) order.push_back(c);       // odd cities 1,3,5,...
  for (int c = (n % 2 == 0) ? n - 1 : n - 2; c >= 1; c -= 2) order.push_back(c);
  return Tour(std::move(order));
}

SolveResult solve_monge(const QStripeInstance& inst, bool verify) {
  if (verify) {
    RecognitionReport report = is_monge(inst.matrix);
    if (!report.verdict) throw NotInClass("matrix is not a Monge matrix", std::move(report));
  }
  Tour tour = supnick_permutation(inst.matrix.size());
  const Cost cost = qstripe_cost(tour, inst);
  return {std::move(tour), cost, Certificate::kSupnickByMonge};
}

SolveResult solve_q_kalmanson(const QStripeInstance& inst, bool verify) {
  if (verify) {
    RecognitionReport report = is_q_kalmanson(inst.matrix, inst.q);
    if (!report.verdict) {
      throw NotInClass("matrix is not a " + std::to_string(inst.q) + "-Kalmanson matrix",
                       std::move(report));
    }
  }
  Tour tour = Tour::identity(inst.matrix.size());
  const Cost cost = qstripe_cost(tour, inst);
  return {std::move(tour), cost, Certificate::kIdentityByQKalmanson};
}

SolveResult brute_force_qstripe(const QStripeInstance& inst, int cap) {
  const int n = inst.matrix.size();
  if (n > cap) {
    throw BudgetExceeded("brute force cap is " + std::to_string(cap) + " cities, got " +
                         std::to_string(n));
  }
  std::vector<int> rest(static_cast<std::size_t>(n - 1));
  std::iota(rest.begin(), rest.end(), 1);

  std::optional<Tour> best;
  Cost best_cost = 0;
  std::vector<int> order(static_cast<std::size_t>(n));
  order[0] = 0;
  do {
    // Reflections are duplicates by the symmetry of d; keep the orientation
    // with the smaller second city.
    if (n >= 3 && rest.front() > rest.back()) continue;
    std::copy(rest.begin(), rest.end(), order.begin() + 1);
    Tour tour(order);
    const Cost cost = qstripe_cost(tour, inst);
    if (!best || cost < best_cost) {
      best = std::move(tour);
      best_cost = cost;
    }
  } while (std::next_permutation(rest.begin(), rest.end()));
  return {std::move(*best), best_cost, Certificate::kBruteForce};
}

MasterTourResult check_master_tour(const QStripeInstance& inst) {
  const int n = inst.matrix.size();
  const int min_size = 2 * inst.q + 1;
  // Subsets below 2q+1 cities cannot carry a width-q stripe objective.
  for (int size = min_size; size <= n; ++size) {
    std::vector<int> comb(static_cast<std::size_t>(size));
    std::iota(comb.begin(), comb.end(), 0);
    while (true) {
      QStripeInstance sub(inst.matrix.induced(comb), inst.q);
      const Cost identity_cost = qstripe_cost(Tour::identity(size), sub);
      const SolveResult opt = brute_force_qstripe(sub);
      if (opt.cost < identity_cost) {
        return {false, CitySubset(comb)};
      }
      // next lexicographic size-combination of {0..n-1}
      int i = size - 1;
      while (i >= 0 && comb[static_cast<std::size_t>(i)] == n - size + i) --i;
      if (i < 0) break;
      ++comb[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < size; ++j)
        comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return {};
}

}  // namespace qstripe
