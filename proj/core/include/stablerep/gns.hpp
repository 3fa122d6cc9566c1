#pragma once

// Finite-dimensional operator algebra side: GNS triples of states on S_k,
// commutants, support projections, the standard form (M, H, J, xi) and the
// biregular representation of S_k x S_k it carries. Also characters induced
// from S_n x S_{m-n}.
//
// Conventions: inner products are linear in the first argument; operator
// algebras are stored as lists of D x D matrices orthonormal for
// <A, B> = tr(B* A).

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "stablerep/characters.hpp"
#include "stablerep/fourier.hpp"
#include "stablerep/perm.hpp"

namespace stablerep {

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using OperatorBasis = std::vector<CMatrix>;

class NotPositiveError : public std::invalid_argument {
 public:
  NotPositiveError(const std::string& what, double eigenvalue) : std::invalid_argument(what), eigenvalue_(eigenvalue) {}
  double eigenvalue() const { return eigenvalue_; }

 private:
  double eigenvalue_;
};

struct GnsTriple {
  int level = 0;
  std::vector<CMatrix> pi;  // pi[index] for SymmetricGroup::of(level).element(index)
  CVector xi;

  int dimension() const { return static_cast<int>(xi.size()); }
  const CMatrix& operator()(const Permutation& g) const { return pi[SymmetricGroup::of(level).index_of(g)]; }
  /// pi(s_i) for the adjacent transpositions s_i, i = 1..level-1.
  std::vector<CMatrix> generators() const;
};

inline constexpr int kMaxGnsLevel = 5;

/// Carrier = column space of G[g,h] = f(g^-1 h). Throws NotPositiveError if G
/// has an eigenvalue below -tol, std::invalid_argument if f(e) != 1 or the
/// level exceeds kMaxGnsLevel.
GnsTriple gns(const StateFunction& f, double tol = 1e-9);

/// Orthonormal basis of span(mats) (vectorized, trace inner product).
OperatorBasis span_basis(const std::vector<CMatrix>& mats, double tol = 1e-9);

/// Orthonormal basis of {X : X A = A X and X A* = A* X for all A in gens}.
/// Requires at least one generator (for the dimension).
OperatorBasis commutant(const std::vector<CMatrix>& gens, double tol = 1e-9);

OperatorBasis double_commutant(const std::vector<CMatrix>& gens, double tol = 1e-9);

/// Z(N) for N = gens'' : the commutant of gens together with a basis of gens'.
OperatorBasis center(const std::vector<CMatrix>& gens, double tol = 1e-9);

/// Operator-norm distance between the orthogonal projections onto the two
/// spans (1 when the dimensions differ). Bases need not be orthonormal.
double subspace_distance(const OperatorBasis& a, const OperatorBasis& b, double tol = 1e-9);

/// Trace-preserving conditional expectation onto M: orthogonal projection in
/// the trace inner product. Requires an orthonormal basis.
CMatrix project_onto(const OperatorBasis& m, const CMatrix& x);

/// Smallest projection E in M with psi(I - E) = 0 for psi(x) = tr(density x):
/// the range projection of project_onto(M, density). Throws NotPositiveError
/// if psi is not positive on M.
CMatrix support_projection(const CMatrix& density, const OperatorBasis& m, double tol = 1e-9);

/// (1 - eps) E_M(xi xi*) + eps I / D: a faithful density close to the state
/// of the GNS triple.
CMatrix faithful_density(const GnsTriple& t, const OperatorBasis& m, double eps = 1e-3);

/// Standard form of M with respect to phi(x) = tr(density x).
///
/// The carrier is M itself with <a, b> = phi(b* a), written in coordinates
/// that are orthonormal for this inner product. J is antilinear and stored as
/// J w = L conj(w); its realification on [Re w; Im w] is `j_real`.
struct StandardForm {
  OperatorBasis algebra;  // basis of M (acting on the original space)
  CMatrix density;        // E_M of the faithful density
  CMatrix gram_half;      // Gamma^(1/2), Gamma_ji = tr(density b_j* b_i)
  CMatrix gram_inv_half;  // Gamma^(-1/2)
  CVector xi;             // vector of the identity of M
  CMatrix L;
  Eigen::MatrixXd j_real;

  int dimension() const { return static_cast<int>(xi.size()); }

  /// Left action of x in M on the carrier.
  CMatrix represent(const CMatrix& x) const;
  /// J X J^-1 for a linear operator X on the carrier.
  CMatrix conjugate_by_j(const CMatrix& x) const;
  CVector apply_j(const CVector& w) const { return L * w.conjugate(); }
  /// Images of the basis of M on the carrier (a basis of M~).
  OperatorBasis represented_algebra() const;
};

/// Throws NotPositiveError unless E_M(density) is strictly positive.
StandardForm standard_form(const OperatorBasis& m, const CMatrix& density, double tol = 1e-9);

struct StandardFormCheck {
  double j_squared = 0.0;        // ||J^2 - I||
  double j_isometry = 0.0;       // ||J^T J - I|| on the realification
  double j_fixes_xi = 0.0;       // ||J xi - xi||
  double commutant_distance = 0.0;  // subspace distance J M~ J vs M~'
};

StandardFormCheck check_standard_form(const StandardForm& sf, double tol = 1e-9);

/// Pi((g, h)) = pi~(g) J pi~(h) J^-1 with pi~ = sf.represent o pi.
class BiregularRep {
 public:
  BiregularRep(const StandardForm& sf, const GnsTriple& pi);

  int level() const { return level_; }
  const CMatrix& left(std::size_t g) const { return left_[g]; }
  const CMatrix& right(std::size_t h) const { return right_[h]; }
  CMatrix operator()(std::size_t g, std::size_t h) const { return left_[g] * right_[h]; }
  CMatrix operator()(const Permutation& g, const Permutation& h) const;
  /// Pi((g, g)): implements Ad g on pi~(S_k).
  CMatrix a_pi(const Permutation& g) const { return (*this)(g, g); }
  /// pi~(x) xi~ for every x, in group index order.
  const std::vector<CVector>& orbit() const { return orbit_; }

 private:
  int level_;
  std::vector<CMatrix> left_, right_;
  std::vector<CVector> orbit_;
};

/// The whole chain for a state f on S_k: GNS triple, M = pi(S_k)'',
/// faithful density, standard form, and biregular representation.
struct CanonicalConstruction {
  GnsTriple gns;
  OperatorBasis algebra;
  StandardForm standard;
  BiregularRep biregular;
};

CanonicalConstruction canonical_construction(const StateFunction& f, double eps = 1e-3, double tol = 1e-9);

/// Residuals of the structural identities (all should be ~0).
struct ConstructionReport {
  int level = 0;
  int gns_dimension = 0;
  int algebra_dimension = 0;
  double reproduction = 0.0;   // max_g |<pi(g) xi, xi> - f(g)|
  double unitarity = 0.0;      // max_g ||pi(g)* pi(g) - I||
  StandardFormCheck standard;
  double homomorphism = 0.0;   // max ||Pi(g1 g2, h1 h2) - Pi(g1,h1) Pi(g2,h2)||
  double left_right_commute = 0.0;
  double implements_ad = 0.0;  // max ||a_pi(g) pi~(x) a_pi(g)* - pi~(g x g^-1)||
  double center_distance = 0.0;  // Z(Pi(S_k x S_k)'') vs Z(M~)
  bool left_quasi_equivalent = false;  // Pi restricted to S_k x e vs pi
  std::size_t pairs_checked = 0;

  double worst() const;
};

/// Full sweep over pairs when `sample_pairs` is 0 or at least |S_k|^2;
/// otherwise that many random pairs (seeded).
ConstructionReport verify_construction(const StateFunction& f, const CanonicalConstruction& c,
                                       std::size_t sample_pairs = 0, std::uint64_t seed = 1,
                                       double tol = 1e-9);

/// Multiplicity of each irreducible T_lambda in a representation of S_k given
/// on every element (group index order). Exact rounding of the character
/// inner product; throws if it is not within 1e-6 of an integer.
std::map<Partition, std::int64_t> irrep_content(const std::vector<CMatrix>& rep, int level);

/// Quasi-equivalence at finite level: same set of irreducible constituents.
bool quasi_equivalent(const std::map<Partition, std::int64_t>& a, const std::map<Partition, std::int64_t>& b);

/// Class function of S_m (values in CharacterTable class order) induced from
/// chi_lambda x chi_mu on S_n x S_{m-n}. Requires |lambda| + |mu| = m <= 8.
std::vector<std::int64_t> induced_character(const Partition& lambda, const Partition& mu);

/// <Ind chi, chi_nu> for every nu |- m with nonzero multiplicity.
std::map<Partition, std::int64_t> induced_multiplicities(const Partition& lambda, const Partition& mu);

}  // namespace stablerep
