#include "qstripe/matclass.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qstripe {

namespace {

// Advances a strictly increasing m-combination of {0..n-1} to its
// lexicographic successor; returns false after the last one.
bool next_combination(std::vector<int>& comb, int n) {
  const int m = static_cast<int>(comb.size());
  for (int i = m - 1; i >= 0; --i) {
    if (comb[static_cast<std::size_t>(i)] < n - m + i) {
      ++comb[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < m; ++j)
        comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
      return true;
    }
  }
  return false;
}

void enumerate_matchings(const std::vector<int>& cities, const DistanceMatrix& m,
                         std::vector<char>& used, std::vector<std::pair<int, int>>& edges,
                         Cost weight, Matching& best, bool& have_best) {
  const int sz = static_cast<int>(cities.size());
  int a = 0;
  while (a < sz && used[static_cast<std::size_t>(a)]) ++a;
  if (a == sz) {
    // Candidates arrive in lexicographic edge-list order, so a strict
    // improvement test keeps the lexicographically smallest maximizer.
    if (!have_best || weight > best.weight) {
      best.edges = edges;
      best.weight = weight;
      have_best = true;
    }
    return;
  }
  used[static_cast<std::size_t>(a)] = 1;
  for (int b = a + 1; b < sz; ++b) {
    if (used[static_cast<std::size_t>(b)]) continue;
    used[static_cast<std::size_t>(b)] = 1;
    edges.emplace_back(cities[static_cast<std::size_t>(a)], cities[static_cast<std::size_t>(b)]);
    enumerate_matchings(cities, m, used, edges, weight + m.at(cities[static_cast<std::size_t>(a)],
                                                              cities[static_cast<std::size_t>(b)]),
                        best, have_best);
    edges.pop_back();
    used[static_cast<std::size_t>(b)] = 0;
  }
  used[static_cast<std::size_t>(a)] = 0;
}

}  // namespace

CitySubset::CitySubset(std::vector<int> c) : cities(std::move(c)) {
  for (std::size_t i = 0; i < cities.size(); ++i) {
    if (cities[i] < 0 || (i > 0 && cities[i] <= cities[i - 1])) {
      throw InputError("city subset must be strictly increasing and non-negative");
    }
  }
}

Matching cross_match(const CitySubset& s, const DistanceMatrix& m) {
  const int sz = s.size();
  if (sz < 2 || sz % 2 != 0) throw InputError("cross match needs an even subset of size >= 2");
  if (s.cities.back() >= m.size()) throw InputError("subset city out of matrix range");
  const int k = sz / 2;
  Matching out;
  for (int j = 0; j < k; ++j) {
    const int a = s.cities[static_cast<std::size_t>(j)];
    const int b = s.cities[static_cast<std::size_t>(j + k)];
    out.edges.emplace_back(a, b);
    out.weight += m.at(a, b);
  }
  return out;
}

Matching max_weight_perfect_matching(const CitySubset& s, const DistanceMatrix& m, int cap) {
  const int sz = s.size();
  if (sz < 2 || sz % 2 != 0) throw InputError("perfect matching needs an even subset of size >= 2");
  if (sz > cap) {
    throw InputError("subset size " + std::to_string(sz) + " exceeds matching cap " +
                     std::to_string(cap));
  }
  if (s.cities.back() >= m.size()) throw InputError("subset city out of matrix range");
  std::vector<char> used(static_cast<std::size_t>(sz), 0);
  std::vector<std::pair<int, int>> edges;
  Matching best;
  bool have_best = false;
  enumerate_matchings(s.cities, m, used, edges, 0, best, have_best);
  return best;
}

bool satisfies_q_kalmanson_condition(const CitySubset& s, const DistanceMatrix& m) {
  return cross_match(s, m).weight == max_weight_perfect_matching(s, m).weight;
}

RecognitionReport is_q_kalmanson(const DistanceMatrix& m, int q, std::uint64_t budget) {
  if (q < 1) throw InputError("q must be positive");
  const int sz = 2 * q + 2;
  if (m.size() < 2 * q + 1) {
    throw InputError("q-Kalmanson test needs n >= 2q+1 (n=" + std::to_string(m.size()) +
                     ", q=" + std::to_string(q) + ")");
  }
  // At n = 2q+1 there is no (2q+2)-city subset: the condition holds vacuously.
  if (m.size() < sz) return {};
  std::vector<int> comb(static_cast<std::size_t>(sz));
  std::iota(comb.begin(), comb.end(), 0);
  std::uint64_t checked = 0;
  do {
    if (++checked > budget) {
      throw BudgetExceeded("q-Kalmanson enumeration exceeded budget of " +
                           std::to_string(budget) + " subset checks");
    }
    CitySubset s(comb);
    const Matching crossing = cross_match(s, m);
    const Matching best = max_weight_perfect_matching(s, m);
    if (best.weight > crossing.weight) {
      RecognitionReport report;
      report.verdict = false;
      report.witness = s;
      report.detail = best;
      std::ostringstream msg;
      msg << "fully crossing matching of weight " << crossing.weight
          << " is beaten by a matching of weight " << best.weight;
      report.description = msg.str();
      return report;
    }
  } while (next_combination(comb, m.size()));
  return {};
}

RecognitionReport is_kalmanson(const DistanceMatrix& m) {
  if (m.size() < 4) throw InputError("Kalmanson test needs n >= 4");
  const int n = m.size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        for (int l = k + 1; l < n; ++l) {
          const Cost diag = m.at(i, k) + m.at(j, l);
          const bool bad_sides = m.at(i, j) + m.at(k, l) > diag;
          const bool bad_outer = m.at(i, l) + m.at(j, k) > diag;
          if (bad_sides || bad_outer) {
            RecognitionReport report;
            report.verdict = false;
            report.witness = CitySubset({i, j, k, l});
            std::ostringstream msg;
            msg << "quadruple (" << i + 1 << "," << j + 1 << "," << k + 1 << "," << l + 1 << "): "
                << (bad_sides ? "d(i,j)+d(k,l)" : "d(i,l)+d(j,k)") << " > d(i,k)+d(j,l)";
            report.description = msg.str();
            return report;
          }
        }
  return {};
}

RecognitionReport is_monge(const DistanceMatrix& m) {
  const int n = m.size();
  for (int i = 0; i < n; ++i)
    for (int r = i + 1; r < n; ++r)
      for (int j = 0; j < n; ++j)
        for (int s = j + 1; s < n; ++s) {
          if (m.at(i, j) + m.at(r, s) > m.at(i, s) + m.at(r, j)) {
            RecognitionReport report;
            report.verdict = false;
            std::vector<int> cities = {i, r, j, s};
            std::sort(cities.begin(), cities.end());
            cities.erase(std::unique(cities.begin(), cities.end()), cities.end());
            report.witness = CitySubset(std::move(cities));
            std::ostringstream msg;
            msg << "Monge condition fails for i=" << i + 1 << " r=" << r + 1 << " j=" << j + 1
                << " s=" << s + 1;
            report.description = msg.str();
            return report;
          }
        }
  return {};
}

RecognitionReport is_demidenko(const DistanceMatrix& m) {
  if (m.size() < 4) throw InputError("Demidenko test needs n >= 4");
  const int n = m.size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        for (int l = k + 1; l < n; ++l) {
          if (m.at(i, j) + m.at(k, l) > m.at(i, k) + m.at(j, l)) {
            RecognitionReport report;
            report.verdict = false;
            report.witness = CitySubset({i, j, k, l});
            std::ostringstream msg;
            msg << "quadruple (" << i + 1 << "," << j + 1 << "," << k + 1 << "," << l + 1
                << "): d(i,j)+d(k,l) > d(i,k)+d(j,l)";
            report.description = msg.str();
            return report;
          }
        }
  return {};
}

Cost f_x_value(int x, const CitySubset& ys, const DistanceMatrix& m) {
  if (ys.size() < 2 || ys.size() % 2 != 0) throw InputError("f_x needs an even subset");
  if (std::binary_search(ys.cities.begin(), ys.cities.end(), x)) {
    throw InputError("f_x city x must not belong to the subset");
  }
  Cost star = 0;
  for (int y : ys.cities) star += m.at(x, y);
  return star - cross_match(ys, m).weight;
}

std::pair<CitySubset, Cost> minimize_f_x(int x, const QStripeInstance& inst,
                                         std::uint64_t budget) {
  const int n = inst.matrix.size();
  const int m = 2 * inst.q;
  if (x < 0 || x >= n) throw InputError("city out of range");
  std::vector<int> others;
  others.reserve(static_cast<std::size_t>(n - 1));
  for (int c = 0; c < n; ++c)
    if (c != x) others.push_back(c);

  std::vector<int> comb(static_cast<std::size_t>(m));
  std::iota(comb.begin(), comb.end(), 0);
  std::optional<CitySubset> best;
  Cost best_value = 0;
  std::uint64_t checked = 0;
  do {
    if (++checked > budget) {
      throw BudgetExceeded("f_x minimization exceeded budget of " + std::to_string(budget) +
                           " subsets");
    }
    std::vector<int> cities(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i)
      cities[static_cast<std::size_t>(i)] = others[static_cast<std::size_t>(comb[static_cast<std::size_t>(i)])];
    CitySubset s(std::move(cities));
    const Cost value = f_x_value(x, s, inst.matrix);
    if (!best || value < best_value) {
      best = s;
      best_value = value;
    }
  } while (next_combination(comb, n - 1));
  return {*best, best_value};
}

CitySubset circular_neighbors(int x, int n, int q) {
  if (n < 2 * q + 1) throw InputError("circular neighborhood needs n >= 2q+1");
  std::vector<int> cities;
  cities.reserve(static_cast<std::size_t>(2 * q));
  for (int off = -q; off <= q; ++off) {
    if (off == 0) continue;
    cities.push_back(((x + off) % n + n) % n);
  }
  std::sort(cities.begin(), cities.end());
  return CitySubset(std::move(cities));
}

}  // namespace qstripe
