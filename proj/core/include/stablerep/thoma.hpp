#pragma once

// Thoma characters of the infinite symmetric group: evaluation, the
// II_1 / II_infinity dichotomy, and recovery of (alpha, beta) from values on
// cycles.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "stablerep/perm.hpp"

namespace stablerep {

/// Two weakly decreasing lists of reals in (0, 1] with sum(alpha) +
/// sum(beta) <= 1. gamma = 1 - sum(alpha) - sum(beta) is derived.
class ThomaParams {
 public:
  static constexpr double kSumSlack = 1e-12;

  /// The regular character (alpha = beta = ()).
  ThomaParams() = default;

  /// Sorts both lists decreasingly and drops exact zeros. Throws
  /// std::invalid_argument for negative entries, entries above 1, or a total
  /// exceeding 1 + kSumSlack.
  static ThomaParams make(std::vector<double> alpha, std::vector<double> beta);

  const std::vector<double>& alpha() const { return alpha_; }
  const std::vector<double>& beta() const { return beta_; }
  double total() const;
  double gamma() const { return 1.0 - total(); }

  /// sum_i alpha_i^k + (-1)^(k+1) sum_j beta_j^k, the value on a k-cycle.
  double cycle_value(int k) const;

  std::string to_string() const;

  friend bool operator==(const ThomaParams&, const ThomaParams&) = default;

 private:
  std::vector<double> alpha_;
  std::vector<double> beta_;
};

/// Product over the cycles of c of cycle_value(k); 1 on the identity.
double thoma_character(const ThomaParams& p, const CycleType& c);

enum class FactorType { TypeII1, TypeIIInfinity };

std::string to_string(FactorType t);

/// TypeIIInfinity iff |sum - 1| <= tol, TypeII1 iff sum < 1 - tol. Throws
/// std::invalid_argument if the sum exceeds 1 + tol.
FactorType type_classify(const ThomaParams& p, double tol = 1e-9);

struct RecoveryOptions {
  int alpha_bound = 2;  // max number of nonzero alpha entries
  int beta_bound = 2;
  double accept_residual = 1e-10;
  std::uint64_t seed = 0;
  int random_starts = 6;
  int max_iterations = 4000;
};

struct RecoveryResult {
  ThomaParams params;
  double residual = 0.0;  // sqrt(sum_k (v_k - model_k)^2)
  bool accepted = false;  // residual <= accept_residual
  int alpha_support = 0;  // support sizes of the fitted model
  int beta_support = 0;
};

/// Least-squares fit of cycle values v_k (keys 2..K, contiguous) by Thoma
/// parameters with at most (alpha_bound, beta_bound) nonzero entries.
///
/// Models are tried in order of increasing total support; each is fitted by
/// projected Levenberg-Marquardt from deterministic corner starts plus
/// seeded random starts. The first model whose best residual is within
/// accept_residual wins; otherwise the best fit overall is returned with
/// accepted = false. Throws std::invalid_argument for malformed keys, negative
/// bounds, or K < alpha_bound + beta_bound + 1.
RecoveryResult recover_params(const std::map<int, double>& values, const RecoveryOptions& options = {});

/// sqrt(sum_k (v_k - p.cycle_value(k))^2) over the keys of values.
double recovery_residual(const std::map<int, double>& values, const ThomaParams& p);

}  // namespace stablerep
