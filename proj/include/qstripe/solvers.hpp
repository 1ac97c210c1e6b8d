#ifndef QSTRIPE_SOLVERS_HPP
#define QSTRIPE_SOLVERS_HPP

#include <optional>
#include <string>

#include "qstripe/core.hpp"
#include "qstripe/matclass.hpp"

namespace qstripe {

enum class Certificate { kIdentityByQKalmanson, kSupnickByMonge, kBruteForce };

std::string certificate_name(Certificate c);

struct SolveResult {
  Tour tour;
  Cost cost;
  Certificate certificate;
};

/// Thrown when a structure-exploiting solver is handed a matrix outside its
/// class; carries the recognizer's negative report.
struct NotInClass : std::runtime_error {
  NotInClass(std::string what, RecognitionReport rep)
      : std::runtime_error(std::move(what)), report(std::move(rep)) {}
  RecognitionReport report;
};

inline constexpr int kBruteForceCap = 11;

/// Odd cities ascending, then even cities descending (1-indexed reading;
/// 0-indexed cities 0,2,4,... then ...,5,3,1).
Tour supnick_permutation(int n);

SolveResult solve_monge(const QStripeInstance& inst, bool verify = true);
SolveResult solve_q_kalmanson(const QStripeInstance& inst, bool verify = true);

/// Exact optimum over all (n-1)!/2 tours: first city fixed, orientation with
/// the smaller second city kept. Ties break to the lexicographically
/// smallest tour.
SolveResult brute_force_qstripe(const QStripeInstance& inst, int cap = kBruteForceCap);

struct MasterTourResult {
  bool verdict = true;
  std::optional<CitySubset> witness;  // subset where the restricted identity is beaten
};

/// Checks that the identity tour restricted to every city subset of size
/// >= 2q+1 stays optimal for the induced sub-instance.
MasterTourResult check_master_tour(const QStripeInstance& inst);

}  // namespace qstripe

#endif  // QSTRIPE_SOLVERS_HPP
