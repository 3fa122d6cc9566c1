#include "stablerep/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include "stablerep/characters.hpp"

namespace stablerep {

StateFunction::StateFunction(int level) : level_(level), values_(SymmetricGroup::of(level).order(), Complex{}) {}

StateFunction StateFunction::tabulate(int level, const std::function<Complex(const Permutation&)>& f) {
  StateFunction out(level);
  const auto& group = SymmetricGroup::of(level);
  for (std::size_t i = 0; i < group.order(); ++i) out.values_[i] = f(group.element(i));
  return out;
}

StateFunction StateFunction::delta_identity(int level) {
  StateFunction out(level);
  out.values_[0] = 1.0;
  return out;
}

Complex StateFunction::operator()(const Permutation& s) const {
  return values_[SymmetricGroup::of(level_).index_of(s)];
}

void StateFunction::set(const Permutation& s, Complex v) { values_[SymmetricGroup::of(level_).index_of(s)] = v; }

StateFunction StateFunction::restricted(int n) const {
  if (n < 0 || n > level_)
    throw std::invalid_argument("restricted: level " + std::to_string(n) + " exceeds " + std::to_string(level_));
  const auto& big = SymmetricGroup::of(level_);
  const auto& small = SymmetricGroup::of(n);
  StateFunction out(n);
  for (std::size_t i = 0; i < small.order(); ++i) out.values_[i] = values_[big.index_of(small.element(i))];
  return out;
}

bool StateFunction::is_hermitian(double tol) const {
  const auto& group = SymmetricGroup::of(level_);
  for (std::size_t i = 0; i < values_.size(); ++i)
    if (std::abs(values_[group.inverse_index(i)] - std::conj(values_[i])) > tol) return false;
  return true;
}

double StateFunction::max_abs_difference(const StateFunction& h) const {
  if (h.level_ != level_) throw std::invalid_argument("max_abs_difference: level mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < values_.size(); ++i) m = std::max(m, std::abs(values_[i] - h.values_[i]));
  return m;
}

StateFunction& StateFunction::operator+=(const StateFunction& h) {
  if (h.level_ != level_) throw std::invalid_argument("StateFunction: level mismatch");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += h.values_[i];
  return *this;
}

StateFunction& StateFunction::operator-=(const StateFunction& h) {
  if (h.level_ != level_) throw std::invalid_argument("StateFunction: level mismatch");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= h.values_[i];
  return *this;
}

StateFunction& StateFunction::operator*=(Complex c) {
  for (auto& v : values_) v *= c;
  return *this;
}

const Eigen::MatrixXcd& FourierBlocks::block(const Partition& lambda) const {
  auto it = std::find(shapes.begin(), shapes.end(), lambda);
  if (it == shapes.end()) throw std::invalid_argument("no Fourier block for " + lambda.to_string());
  return blocks[static_cast<std::size_t>(it - shapes.begin())];
}

namespace {

Eigen::MatrixXcd fourier_block(const StateFunction& f, const IrrepMatrices& m) {
  const auto d = static_cast<Eigen::Index>(m.dimension());
  Eigen::MatrixXd re = Eigen::MatrixXd::Zero(d, d);
  Eigen::MatrixXd im = Eigen::MatrixXd::Zero(d, d);
  const auto values = f.values();
  for_each_irrep_matrix(m, [&](std::size_t index, const Eigen::MatrixXd& rho) {
    const Complex v = values[index];
    if (v.real() != 0.0) re.noalias() += v.real() * rho;
    if (v.imag() != 0.0) im.noalias() += v.imag() * rho;
  });
  Eigen::MatrixXcd out(d, d);
  out.real() = re;
  out.imag() = im;
  return out;
}

}  // namespace

FourierBlocks fourier(const StateFunction& f, int jobs, IrrepCache& cache) {
  FourierBlocks out;
  out.level = f.level();
  out.shapes = partitions_of(f.level());
  out.blocks.resize(out.shapes.size());
  std::vector<const IrrepMatrices*> tables;
  for (const auto& lambda : out.shapes) tables.push_back(&cache.get(lambda));

  const std::size_t count = out.shapes.size();
  const auto workers = static_cast<std::size_t>(std::clamp(jobs, 1, static_cast<int>(count)));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) out.blocks[i] = fourier_block(f, *tables[i]);
    return out;
  }
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < count; i += workers) out.blocks[i] = fourier_block(f, *tables[i]);
    });
  for (auto& t : pool) t.join();
  return out;
}

StateFunction inverse_fourier(const FourierBlocks& blocks, IrrepCache& cache) {
  StateFunction out(blocks.level);
  const double order = static_cast<double>(factorial(blocks.level));
  for (std::size_t b = 0; b < blocks.shapes.size(); ++b) {
    const IrrepMatrices& m = cache.get(blocks.shapes[b]);
    const Eigen::MatrixXcd& a = blocks.blocks[b];
    const double weight = static_cast<double>(m.dimension()) / order;
    // tr(rho(g^-1) A) = tr(rho(g)^T A) = sum_ij rho(g)_ij A_ij
    for_each_irrep_matrix(m, [&](std::size_t index, const Eigen::MatrixXd& rho) {
      const Complex t{(rho.array() * a.real().array()).sum(), (rho.array() * a.imag().array()).sum()};
      out.at(index) += weight * t;
    });
  }
  return out;
}

Complex pairing(const StateFunction& f, const StateFunction& a) {
  if (f.level() != a.level()) throw std::invalid_argument("pairing: level mismatch");
  Complex s{};
  for (std::size_t i = 0; i < f.size(); ++i) s += f.at(i) * a.at(i);
  return s;
}

double trace_norm(const Eigen::MatrixXcd& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  return svd.singularValues().sum();
}

double dual_norm(const StateFunction& f, int jobs, IrrepCache& cache) {
  // sum_g f(g) rho(g^-1) is the transpose of the Fourier block; transposition
  // preserves singular values.
  const FourierBlocks blocks = fourier(f, jobs, cache);
  const double order = static_cast<double>(factorial(f.level()));
  double total = 0.0;
  for (std::size_t i = 0; i < blocks.shapes.size(); ++i)
    total += static_cast<double>(blocks.blocks[i].rows()) / order * trace_norm(blocks.blocks[i]);
  return total;
}

PsdCertificate is_positive_definite(const StateFunction& f, double tol, IrrepCache& cache) {
  double scale = 1.0;
  for (const auto& v : f.values()) scale = std::max(scale, std::abs(v));
  if (!f.is_hermitian(1e-12 * scale))
    throw std::invalid_argument("is_positive_definite: function is not hermitian (f(g^-1) != conj f(g))");
  const FourierBlocks blocks = fourier(f, 1, cache);
  PsdCertificate cert;
  cert.min_eigenvalue = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < blocks.shapes.size(); ++i) {
    const Eigen::MatrixXcd h = 0.5 * (blocks.blocks[i] + blocks.blocks[i].adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(h, Eigen::EigenvaluesOnly);
    const double lo = eig.eigenvalues().minCoeff();
    if (lo < cert.min_eigenvalue) {
      cert.min_eigenvalue = lo;
      cert.witness = blocks.shapes[i];
    }
  }
  cert.positive = cert.min_eigenvalue >= -tol;
  return cert;
}

double restricted_distance(const StateFunction& f, const StateFunction& h, int n, IrrepCache& cache) {
  if (n < 0 || n > f.level() || n > h.level())
    throw std::invalid_argument("restricted_distance: level " + std::to_string(n) + " exceeds the function levels");
  return dual_norm(f.restricted(n) - h.restricted(n), 1, cache);
}

}  // namespace stablerep
