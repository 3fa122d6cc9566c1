#pragma once

// Irreducible characters and orthogonal matrix models of the finite
// symmetric groups.

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "stablerep/perm.hpp"

namespace stablerep {

/// Unnormalized irreducible character chi_lambda evaluated on the class of
/// S_|lambda| with cycle type c (fixed points implicit). Computed exactly by
/// rim-hook removal. Throws std::invalid_argument if c moves more than
/// |lambda| points.
std::int64_t mn_character(const Partition& lambda, const CycleType& c);

/// chi_lambda(c) / dim(lambda); equals 1 at the identity.
double normalized_character(const Partition& lambda, const CycleType& c);

inline constexpr int kDefaultCharacterTableBound = 8;

/// Character table of S_n: rows indexed by partitions_of(n) (irreps), columns
/// by partitions_of(n) read as cycle types (classes).
struct CharacterTable {
  int n = 0;
  std::vector<Partition> irreps;
  std::vector<CycleType> classes;
  std::vector<std::uint64_t> class_sizes;
  std::vector<std::vector<std::int64_t>> values;  // values[irrep][class]

  std::size_t class_index(const CycleType& c) const;
};

/// Throws std::invalid_argument if n exceeds `bound`.
CharacterTable character_table(int n, int bound = kDefaultCharacterTableBound);

/// Young's orthogonal form of the irreducible representation T_lambda:
/// real orthogonal, involutive matrices for the adjacent transpositions
/// (i, i+1), indexed by standard Young tableaux.
class IrrepMatrices {
 public:
  /// Wraps generator matrices, e.g. reloaded from a cache file. Throws if the
  /// count or sizes disagree with lambda.
  IrrepMatrices(Partition lambda, std::vector<Eigen::MatrixXd> generators);

  const Partition& shape() const { return shape_; }
  int level() const { return shape_.weight(); }
  std::size_t dimension() const { return dim_; }

  /// Matrix of (i, i+1), 1 <= i < level().
  const Eigen::MatrixXd& generator(int i) const { return generators_[i - 1]; }
  const std::vector<Eigen::MatrixXd>& generators() const { return generators_; }

  /// m <- m * rho(s_i), exploiting that each generator column has at most
  /// two nonzero entries.
  void right_multiply(Eigen::MatrixXd& m, int i) const;

 private:
  struct SparseGenerator {
    std::vector<double> diag;
    std::vector<int> partner;  // -1 when the column has no off-diagonal entry
    std::vector<double> off;
  };

  Partition shape_;
  std::size_t dim_;
  std::vector<Eigen::MatrixXd> generators_;
  std::vector<SparseGenerator> sparse_;
};

/// Standard Young tableaux of shape lambda, each stored as row and column of
/// the entries 1..n (0-based), in a fixed deterministic order.
struct StandardTableau {
  std::vector<int> row;
  std::vector<int> col;
};
std::vector<StandardTableau> standard_tableaux(const Partition& lambda);

/// Young's orthogonal form: for tableau T and r = content(i+1) - content(i),
/// rho(s_i) T = T / r + sqrt(1 - 1/r^2) s_i T.
IrrepMatrices yor_matrices(const Partition& lambda);

/// rho_lambda(s) for level(s) <= level(); a product of generator matrices
/// along the coset factorization of s.
Eigen::MatrixXd irrep_matrix(const IrrepMatrices& m, const Permutation& s);

/// Visits rho_lambda(g) for every g in S_n in SymmetricGroup index order.
template <class Visit>
void for_each_irrep_matrix(const IrrepMatrices& m, Visit&& visit) {
  const auto d = static_cast<Eigen::Index>(m.dimension());
  SymmetricGroup::walk_right(
      m.level(), Eigen::MatrixXd(Eigen::MatrixXd::Identity(d, d)),
      [&m](Eigen::MatrixXd& value, int i) { m.right_multiply(value, i); }, visit);
}

}  // namespace stablerep
