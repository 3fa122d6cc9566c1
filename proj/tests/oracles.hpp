#pragma once

// Independent reference computations for the unit and acceptance tests. None
// of these call into the library beyond basic permutation plumbing; they are
// brute force on purpose.

#include <algorithm>
#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include <Eigen/Dense>

#include "stablerep/fourier.hpp"
#include "stablerep/perm.hpp"

namespace oracle {

using stablerep::Complex;
using stablerep::Permutation;

/// One-line image array of p on {1..n}, evaluated pointwise.
inline std::vector<int> images(const Permutation& p, int n) {
  std::vector<int> out(n);
  for (int i = 1; i <= n; ++i) out[i - 1] = p(i);
  return out;
}

/// All permutations of {1..n} as image arrays (std::next_permutation order).
inline std::vector<std::vector<int>> all_image_arrays(int n) {
  std::vector<int> a(n);
  std::iota(a.begin(), a.end(), 1);
  std::vector<std::vector<int>> out;
  do out.push_back(a);
  while (std::next_permutation(a.begin(), a.end()));
  return out;
}

inline Permutation from_array(const std::vector<int>& a) { return Permutation::from_images(a); }

/// Partitions by sorting every composition of n and deduplicating.
inline std::set<std::vector<int>> partitions_by_compositions(int n) {
  std::set<std::vector<int>> out;
  if (n == 0) {
    out.insert(std::vector<int>{});
    return out;
  }
  // compositions of n <-> subsets of the n-1 gaps
  for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
    std::vector<int> parts;
    int run = 1;
    for (int i = 0; i < n - 1; ++i) {
      if (mask & (1u << i)) {
        parts.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    parts.push_back(run);
    std::sort(parts.rbegin(), parts.rend());
    out.insert(parts);
  }
  return out;
}

/// Number of standard Young tableaux: try every arrangement of 1..n in the
/// diagram (row-major cells) and keep those increasing along rows and columns.
inline std::uint64_t count_standard_tableaux(const std::vector<int>& shape) {
  std::vector<std::pair<int, int>> cells;
  for (int r = 0; r < static_cast<int>(shape.size()); ++r)
    for (int c = 0; c < shape[r]; ++c) cells.emplace_back(r, c);
  const int n = static_cast<int>(cells.size());
  std::map<std::pair<int, int>, int> pos;
  for (int i = 0; i < n; ++i) pos[cells[i]] = i;
  std::uint64_t count = 0;
  for (const auto& filling : all_image_arrays(n)) {
    bool ok = true;
    for (int i = 0; ok && i < n; ++i) {
      const auto [r, c] = cells[i];
      if (auto it = pos.find({r, c + 1}); it != pos.end() && filling[it->second] < filling[i]) ok = false;
      if (auto it = pos.find({r + 1, c}); it != pos.end() && filling[it->second] < filling[i]) ok = false;
    }
    if (ok) ++count;
  }
  return count;
}

/// Character of the standard representation T_(n-1,1): fixed points minus 1.
inline int standard_character(const Permutation& g, int n) {
  int fixed = 0;
  for (int i = 1; i <= n; ++i) fixed += g(i) == i;
  return fixed - 1;
}

/// Explicit 2x2 real matrices of T_(2,1) of S_3 on {x in R^3 : sum x = 0}
/// with basis e1 - e2, e2 - e3.
inline Eigen::Matrix2d standard_rep_s3(const Permutation& g) {
  // permutation matrix P e_i = e_g(i), restricted
  Eigen::Matrix3d p = Eigen::Matrix3d::Zero();
  for (int i = 1; i <= 3; ++i) p(g(i) - 1, i - 1) = 1.0;
  Eigen::Matrix<double, 3, 2> b;
  b << 1, 0, -1, 1, 0, -1;
  // solve b * m = p * b in least squares (exact since the plane is invariant)
  return (b.transpose() * b).inverse() * b.transpose() * p * b;
}

/// Gram matrix G[g, h] = f(g^-1 h) over S_n (group enumeration of the library
/// is not used: elements in next_permutation order).
inline Eigen::MatrixXcd gram_matrix(const stablerep::StateFunction& f) {
  const int n = f.level();
  std::vector<Permutation> elems;
  for (const auto& a : all_image_arrays(n)) elems.push_back(from_array(a));
  const auto size = static_cast<Eigen::Index>(elems.size());
  Eigen::MatrixXcd g(size, size);
  for (Eigen::Index i = 0; i < size; ++i)
    for (Eigen::Index j = 0; j < size; ++j) g(i, j) = f(elems[i].inverse() * elems[j]);
  return g;
}

inline double gram_min_eigenvalue(const stablerep::StateFunction& f) {
  const Eigen::MatrixXcd g = gram_matrix(f);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(0.5 * (g + g.adjoint()), Eigen::EigenvaluesOnly);
  return es.eigenvalues()[0];
}

/// Littlewood-Richardson coefficient c^nu_{lambda mu}: number of fillings of
/// the skew diagram nu/lambda with content mu, rows weakly increasing,
/// columns strictly increasing, and reverse reading word a lattice word.
inline std::int64_t lr_coefficient(const std::vector<int>& lambda, const std::vector<int>& mu,
                                   const std::vector<int>& nu) {
  const int rows = static_cast<int>(nu.size());
  auto lam = [&](int r) { return r < static_cast<int>(lambda.size()) ? lambda[r] : 0; };
  for (int r = 0; r < static_cast<int>(lambda.size()); ++r)
    if (r >= rows || lambda[r] > nu[r]) return 0;
  int skew = 0;
  for (int r = 0; r < rows; ++r) skew += nu[r] - lam(r);
  if (skew != std::accumulate(mu.begin(), mu.end(), 0)) return 0;

  // reverse reading order: rows top to bottom, each right to left
  std::vector<std::pair<int, int>> cells;
  for (int r = 0; r < rows; ++r)
    for (int c = nu[r] - 1; c >= lam(r); --c) cells.emplace_back(r, c);
  std::vector<std::vector<int>> fill(rows);
  for (int r = 0; r < rows; ++r) fill[r].assign(nu[r], 0);
  std::vector<int> used(mu.size(), 0);

  std::int64_t count = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == cells.size()) {
      ++count;
      return;
    }
    const auto [r, c] = cells[k];
    for (int v = 1; v <= static_cast<int>(mu.size()); ++v) {
      if (used[v - 1] >= mu[v - 1]) continue;
      // lattice condition on the prefix of the reading word
      if (v > 1 && used[v - 1] + 1 > used[v - 2]) continue;
      // row weakly increasing: the cell to the right (already filled) must be >= v
      if (c + 1 < nu[r] && fill[r][c + 1] < v) continue;
      // column strictly increasing: cell above (filled earlier if skew) must be < v
      if (r > 0 && c >= lam(r - 1) && c < nu[r - 1] && fill[r - 1][c] >= v) continue;
      fill[r][c] = v;
      ++used[v - 1];
      rec(k + 1);
      --used[v - 1];
      fill[r][c] = 0;
    }
  };
  rec(0);
  return count;
}

/// Random state f(g) = <lambda(g) v, v> = sum_x v(g^-1 x) conj(v(x)) for a
/// random unit vector v on S_n; positive definite with f(e) = 1.
inline stablerep::StateFunction random_state(int n, std::mt19937_64& rng, int support = -1) {
  const auto& group = stablerep::SymmetricGroup::of(n);
  std::normal_distribution<double> gauss;
  std::vector<Complex> v(group.order());
  std::uniform_int_distribution<std::size_t> pick(0, group.order() - 1);
  if (support < 0) {
    for (auto& x : v) x = {gauss(rng), gauss(rng)};
  } else {
    for (int i = 0; i < support; ++i) v[pick(rng)] = {gauss(rng), gauss(rng)};
  }
  double norm = 0.0;
  for (const auto& x : v) norm += std::norm(x);
  for (auto& x : v) x /= std::sqrt(norm);
  stablerep::StateFunction f(n);
  for (std::size_t g = 0; g < group.order(); ++g) {
    const Permutation ginv = group.element(g).inverse();
    Complex s{};
    for (std::size_t x = 0; x < group.order(); ++x) s += v[group.index_of(ginv * group.element(x))] * std::conj(v[x]);
    f.at(g) = s;
  }
  return f;
}

/// Random hermitian function: f(g^-1) = conj(f(g)).
inline stablerep::StateFunction random_hermitian(int n, std::mt19937_64& rng) {
  const auto& group = stablerep::SymmetricGroup::of(n);
  std::normal_distribution<double> gauss;
  stablerep::StateFunction f(n);
  for (std::size_t g = 0; g < group.order(); ++g) {
    const std::size_t gi = group.inverse_index(g);
    if (gi < g) continue;
    if (gi == g) {
      f.at(g) = gauss(rng);
    } else {
      f.at(g) = {gauss(rng), gauss(rng)};
      f.at(gi) = std::conj(f.at(g));
    }
  }
  return f;
}

}  // namespace oracle
