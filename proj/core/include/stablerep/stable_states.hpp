#pragma once

// Partially central states f_{n, lambda, alpha, beta} of S_N, their
// asymptotic characters, central depth, and the quasi-equivalence invariant.

#include <climits>
#include <complex>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "stablerep/fourier.hpp"
#include "stablerep/perm.hpp"
#include "stablerep/thoma.hpp"

namespace stablerep {

/// State of central depth n:
///   f(s) = chi_lambda(s1)/d_lambda * chi_{alpha,beta}(s2)  if s = s1 s2 with
///          s1 in S_n, s2 in S_{N\n};  0 otherwise.
struct CanonicalStateSpec {
  int n = 0;
  Partition lambda;
  ThomaParams params;

  /// Throws std::invalid_argument unless |lambda| == n >= 0.
  static CanonicalStateSpec make(int n, Partition lambda, ThomaParams params);
};

double evaluate(const CanonicalStateSpec& spec, const Permutation& s);

/// A state on S_N given by an evaluation function, defined for permutations
/// of level <= max_level.
class StateView {
 public:
  static constexpr int kUnbounded = INT_MAX;
  using Fn = std::function<Complex(const Permutation&)>;

  StateView(Fn fn, int max_level = kUnbounded) : fn_(std::move(fn)), max_level_(max_level) {}

  /// Throws std::out_of_range beyond max_level.
  Complex operator()(const Permutation& s) const;
  int max_level() const { return max_level_; }

  /// Value table on S_level.
  StateFunction tabulate(int level) const;

  static StateView of(const CanonicalStateSpec& spec);
  static StateView of(const ThomaParams& params);
  static StateView of(StateFunction table);

 private:
  Fn fn_;
  int max_level_;
};

/// sigma_m for m = first..last with
///   sigma_m g sigma_m^-1 in S_{N\m}  and  sigma_{m+1} sigma_m^-1 in S_{N\m}.
/// sigma_first moves supp(g) = {x_1 < ... < x_r} onto {first+1..first+r}
/// via the transpositions (x_i, first+i); sigma_{m+1} = rho_{m+1} sigma_m
/// with rho_{m+1} the cycle (m+1, m+2, ..., m+r+1).
struct ShiftSequence {
  Permutation base;
  int first = 0;
  std::vector<Permutation> sigmas;

  int last() const { return first + static_cast<int>(sigmas.size()) - 1; }
  const Permutation& sigma(int m) const { return sigmas.at(static_cast<std::size_t>(m - first)); }
  /// sigma_m g sigma_m^-1
  Permutation shifted(int m) const { return conjugate(sigma(m), base); }
};

/// Throws std::invalid_argument if first < level(g) or last < first.
ShiftSequence shift_sequence(const Permutation& g, int first, int last);

struct AsymptoticTrace {
  Permutation g;
  std::vector<std::pair<int, Complex>> values;  // (m, state(sigma_m g sigma_m^-1))
  /// Smallest m from which consecutive values agree within tolerance through
  /// the end of the trace, provided at least one agreeing pair exists.
  std::optional<int> stabilized_at;

  Complex limit() const { return values.back().second; }
};

/// Values along shift_sequence(g, level(g), last). Requires last > level(g).
AsymptoticTrace asymptotic_character(const StateView& state, const Permutation& g, int last, double tol = 1e-12);

class ClassificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The unique lambda |- n with sum_{g in S_n} state(g) chi_mu(g) nonzero
/// (|.| > threshold). Throws ClassificationError if none or several survive.
Partition recover_lambda(const StateView& state, int n, double threshold = 1e-8);

struct DepthOptions {
  double vanish_tol = 1e-10;
};

/// Smallest n <= level of f such that (a) f vanishes on every s in S_K that
/// does not preserve {1..n}, and (b) f(t s t^-1) = f(s) for the adjacent
/// transpositions t generating S_n and S_{N\n} within S_K. nullopt means
/// "> K".
std::optional<int> central_depth(const StateFunction& f, const DepthOptions& options = {});
std::optional<int> central_depth(const StateView& state, int level, const DepthOptions& options = {});

/// The quasi-equivalence datum (n, lambda, alpha, beta).
struct ClassInvariant {
  int n = 0;
  Partition lambda;
  std::vector<double> alpha;
  std::vector<double> beta;

  static ClassInvariant of(const CanonicalStateSpec& spec);
  CanonicalStateSpec to_spec() const;
};

/// n and lambda equal, alpha and beta equal entrywise within tol after
/// sorting decreasingly and discarding entries <= tol.
bool quasi_equivalent(const ClassInvariant& a, const ClassInvariant& b, double tol = 1e-6);

struct ClassifyOptions {
  int depth_level = 5;  // truncation K for central_depth
  int max_cycle = 8;    // cycle values v_2..v_max_cycle feed the recovery
  RecoveryOptions recovery;
  double lambda_threshold = 1e-8;
  double stabilization_tol = 1e-12;
  DepthOptions depth;
};

struct Classification {
  ClassInvariant invariant;
  RecoveryResult recovery;
  std::map<int, double> cycle_values;
  std::map<int, int> stabilized_at;  // cycle length -> stabilization index
};

/// central_depth, then recover_lambda, then asymptotic values on the cycles
/// (1 2 ... k), then recover_params. Throws ClassificationError when depth
/// exceeds the truncation, a trace does not stabilize, a cycle value is not
/// real, or the parameter fit is not accepted.
Classification classify(const StateView& state, const ClassifyOptions& options = {});

}  // namespace stablerep
