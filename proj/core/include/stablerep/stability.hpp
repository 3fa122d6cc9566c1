#pragma once

// Probes of the metric rho(f, h) = sup_n ||f - h||_n (truncated) along inner
// automorphisms Ad t.

#include <vector>

#include "stablerep/fourier.hpp"
#include "stablerep/perm.hpp"

namespace stablerep {

/// (f o Ad t)(s) = f(t s t^-1), carried at the level of f. Throws
/// std::invalid_argument if level(t) exceeds the level of f.
StateFunction ad_orbit_state(const StateFunction& f, const Permutation& t);

/// max over n <= K of restricted_distance(f, h, n).
double rho_distance(const StateFunction& f, const StateFunction& h, int K, IrrepCache& cache = IrrepCache::global());

struct ProfilePoint {
  int m = 0;
  double defect = 0.0;
  Permutation witness;  // maximizing automorphism; identity if defect is 0
};

struct StabilityProfile {
  int level = 0;  // truncation K of rho
  std::vector<ProfilePoint> points;
};

struct ProbeOptions {
  /// Sweep every element of the probed subgroup inside S_{level of f}
  /// instead of the generator set. Exponential; meant for tiny levels.
  bool exhaustive = false;
};

/// For m = 0..M: defect(m) = max over g in {(m+1 m+2), (m+1 m+2 m+3)} (those
/// inside S_{level of f}) of rho_distance(f o Ad g, f, K). These probes do not
/// generate S_{m+1..level}, so the value is a lower bound for the exhaustive
/// sweep. Requires
/// K <= level(f) and M + 2 <= level(f).
StabilityProfile stability_profile(const StateFunction& f, int K, int M, const ProbeOptions& options = {},
                                   IrrepCache& cache = IrrepCache::global());

/// max over the adjacent-transposition generators t of S_n (S_{N\n} within
/// S_K) of rho_distance(f o Ad t, f, K). Requires n <= K - 2 and
/// K <= level(f).
double centrality_defect(const StateFunction& f, int n, int K, const ProbeOptions& options = {},
                         IrrepCache& cache = IrrepCache::global());

}  // namespace stablerep
