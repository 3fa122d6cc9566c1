#include "stablerep/stability.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace stablerep {

StateFunction ad_orbit_state(const StateFunction& f, const Permutation& t) {
  if (t.level() > f.level())
    throw std::invalid_argument("ad_orbit_state: " + t.to_string() + " is outside S_" + std::to_string(f.level()));
  const auto& group = SymmetricGroup::of(f.level());
  StateFunction out(f.level());
  for (std::size_t i = 0; i < group.order(); ++i) out.at(i) = f(conjugate(t, group.element(i)));
  return out;
}

double rho_distance(const StateFunction& f, const StateFunction& h, int K, IrrepCache& cache) {
  if (K < 0 || K > f.level() || K > h.level())
    throw std::invalid_argument("rho_distance: truncation " + std::to_string(K) + " exceeds the function levels");
  double best = 0.0;
  for (int n = 0; n <= K; ++n) best = std::max(best, restricted_distance(f, h, n, cache));
  return best;
}

namespace {

// All permutations of the points lo..hi (inclusive).
std::vector<Permutation> all_permutations_of(int lo, int hi) {
  std::vector<Permutation> out;
  if (hi < lo) return {Permutation{}};
  std::vector<Point> pts(static_cast<std::size_t>(hi - lo + 1));
  std::iota(pts.begin(), pts.end(), lo);
  std::vector<Point> perm = pts;
  do {
    std::vector<std::vector<Point>> cycles;
    std::vector<Point> images(static_cast<std::size_t>(hi));
    std::iota(images.begin(), images.end(), 1);
    for (std::size_t i = 0; i < pts.size(); ++i) images[pts[i] - 1] = perm[i];
    out.push_back(Permutation::from_images(images));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

ProfilePoint worst_of(const StateFunction& f, const std::vector<Permutation>& probes, int K, IrrepCache& cache) {
  ProfilePoint p;
  for (const auto& g : probes) {
    if (g.is_identity()) continue;
    const double d = rho_distance(ad_orbit_state(f, g), f, K, cache);
    if (d > p.defect) {
      p.defect = d;
      p.witness = g;
    }
  }
  return p;
}

}  // namespace

StabilityProfile stability_profile(const StateFunction& f, int K, int M, const ProbeOptions& options,
                                   IrrepCache& cache) {
  const int top = f.level();
  if (K > top) throw std::invalid_argument("stability_profile: truncation exceeds the level of f");
  if (M < 0 || M + 2 > top)
    throw std::invalid_argument("stability_profile: M = " + std::to_string(M) + " needs f on S_" +
                                std::to_string(M + 2) + " or above");
  StabilityProfile profile;
  profile.level = K;
  for (int m = 0; m <= M; ++m) {
    std::vector<Permutation> probes;
    if (options.exhaustive) {
      probes = all_permutations_of(m + 1, top);
    } else {
      probes.push_back(Permutation::transposition(m + 1, m + 2));
      if (m + 3 <= top) probes.push_back(Permutation::cycle(std::vector<Point>{m + 1, m + 2, m + 3}));
    }
    ProfilePoint p = worst_of(f, probes, K, cache);
    p.m = m;
    profile.points.push_back(std::move(p));
  }
  return profile;
}

double centrality_defect(const StateFunction& f, int n, int K, const ProbeOptions& options, IrrepCache& cache) {
  if (K > f.level()) throw std::invalid_argument("centrality_defect: truncation exceeds the level of f");
  if (n < 0 || n > K - 2) throw std::invalid_argument("centrality_defect: need 0 <= n <= K - 2");
  std::vector<Permutation> probes;
  if (options.exhaustive) {
    for (const auto& a : all_permutations_of(1, n))
      for (const auto& b : all_permutations_of(n + 1, K)) probes.push_back(a * b);
  } else {
    for (int i = 1; i < K; ++i)
      if (i != n) probes.push_back(Permutation::transposition(i, i + 1));
  }
  return worst_of(f, probes, K, cache).defect;
}

}  // namespace stablerep
