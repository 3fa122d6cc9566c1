#pragma once

// Functions on S_n, their Fourier blocks over the irreducible
// representations, the norm of C*(S_n)*, and positive-definiteness tests.

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "stablerep/irrep_cache.hpp"
#include "stablerep/perm.hpp"

namespace stablerep {

using Complex = std::complex<double>;

/// A complex-valued function on S_level, stored densely in
/// SymmetricGroup index order.
class StateFunction {
 public:
  explicit StateFunction(int level);

  static StateFunction tabulate(int level, const std::function<Complex(const Permutation&)>& f);
  static StateFunction delta_identity(int level);

  int level() const { return level_; }
  std::size_t size() const { return values_.size(); }

  /// Throws std::out_of_range if s is not in S_level.
  Complex operator()(const Permutation& s) const;
  void set(const Permutation& s, Complex v);

  Complex at(std::size_t index) const { return values_[index]; }
  Complex& at(std::size_t index) { return values_[index]; }
  std::span<const Complex> values() const { return values_; }

  /// Literal restriction of the value table to S_n, n <= level.
  StateFunction restricted(int n) const;

  /// f(g^-1) == conj(f(g)) within tol for every g.
  bool is_hermitian(double tol = 1e-12) const;

  /// max_g |f(g) - h(g)|; levels must agree.
  double max_abs_difference(const StateFunction& h) const;

  StateFunction& operator+=(const StateFunction& h);
  StateFunction& operator-=(const StateFunction& h);
  StateFunction& operator*=(Complex c);
  friend StateFunction operator+(StateFunction a, const StateFunction& b) { return a += b; }
  friend StateFunction operator-(StateFunction a, const StateFunction& b) { return a -= b; }
  friend StateFunction operator*(Complex c, StateFunction a) { return a *= c; }

 private:
  int level_;
  std::vector<Complex> values_;
};

/// One complex d_lambda x d_lambda matrix per lambda |- level, in
/// partitions_of(level) order.
struct FourierBlocks {
  int level = 0;
  std::vector<Partition> shapes;
  std::vector<Eigen::MatrixXcd> blocks;

  const Eigen::MatrixXcd& block(const Partition& lambda) const;
};

/// block(lambda) = sum_g f(g) rho_lambda(g). Blocks are independent and are
/// computed on up to `jobs` threads.
FourierBlocks fourier(const StateFunction& f, int jobs = 1, IrrepCache& cache = IrrepCache::global());

/// The function a with fourier(a) == blocks:
/// a(g) = (1/n!) sum_lambda d_lambda tr(rho_lambda(g^-1) blocks(lambda)).
StateFunction inverse_fourier(const FourierBlocks& blocks, IrrepCache& cache = IrrepCache::global());

/// sum_g f(g) a(g).
Complex pairing(const StateFunction& f, const StateFunction& a);

/// Norm of f as a functional on C*(S_n):
/// sum_lambda (d_lambda / n!) * trace_norm(sum_g f(g) rho_lambda(g^-1)).
double dual_norm(const StateFunction& f, int jobs = 1, IrrepCache& cache = IrrepCache::global());

/// Sum of singular values.
double trace_norm(const Eigen::MatrixXcd& m);

inline constexpr double kPsdTolerance = 1e-9;

struct PsdCertificate {
  bool positive = false;
  double min_eigenvalue = 0.0;
  Partition witness;  // block attaining min_eigenvalue
};

/// Positive definiteness via the Fourier blocks: every block of a hermitian
/// f is hermitian, and f is positive definite iff all of them are positive
/// semidefinite (minimal eigenvalue >= -tol). Throws std::invalid_argument for
/// non-hermitian input.
PsdCertificate is_positive_definite(const StateFunction& f, double tol = kPsdTolerance,
                                    IrrepCache& cache = IrrepCache::global());

/// dual_norm of (f - h) restricted to S_n. Throws if n exceeds either level.
double restricted_distance(const StateFunction& f, const StateFunction& h, int n,
                           IrrepCache& cache = IrrepCache::global());

}  // namespace stablerep
