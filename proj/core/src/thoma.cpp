#include "stablerep/thoma.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include <Eigen/Dense>

namespace stablerep {

ThomaParams ThomaParams::make(std::vector<double> alpha, std::vector<double> beta) {
  auto clean = [](std::vector<double>& v, const char* name) {
    for (double x : v) {
      if (!std::isfinite(x) || x < 0.0 || x > 1.0)
        throw std::invalid_argument(std::string("Thoma parameter ") + name + " entries must lie in [0, 1]");
    }
    v.erase(std::remove(v.begin(), v.end(), 0.0), v.end());
    std::sort(v.begin(), v.end(), std::greater<>());
  };
  clean(alpha, "alpha");
  clean(beta, "beta");
  ThomaParams p;
  p.alpha_ = std::move(alpha);
  p.beta_ = std::move(beta);
  if (p.total() > 1.0 + kSumSlack)
    throw std::invalid_argument("Thoma parameters sum to " + std::to_string(p.total()) + " > 1");
  return p;
}

double ThomaParams::total() const {
  return std::accumulate(alpha_.begin(), alpha_.end(), 0.0) + std::accumulate(beta_.begin(), beta_.end(), 0.0);
}

double ThomaParams::cycle_value(int k) const {
  double a = 0.0, b = 0.0;
  for (double x : alpha_) a += std::pow(x, k);
  for (double x : beta_) b += std::pow(x, k);
  return (k % 2 == 0) ? a - b : a + b;
}

std::string ThomaParams::to_string() const {
  std::ostringstream os;
  os.precision(17);
  os << "alpha=(";
  for (std::size_t i = 0; i < alpha_.size(); ++i) os << (i ? "," : "") << alpha_[i];
  os << ") beta=(";
  for (std::size_t i = 0; i < beta_.size(); ++i) os << (i ? "," : "") << beta_[i];
  os << ')';
  return os.str();
}

double thoma_character(const ThomaParams& p, const CycleType& c) {
  double v = 1.0;
  for (int k : c.lengths) v *= p.cycle_value(k);
  return v;
}

std::string to_string(FactorType t) { return t == FactorType::TypeIIInfinity ? "II_infinity" : "II_1"; }

FactorType type_classify(const ThomaParams& p, double tol) {
  const double s = p.total();
  if (s > 1.0 + tol) throw std::invalid_argument("type_classify: parameter sum exceeds 1");
  return std::abs(s - 1.0) <= tol ? FactorType::TypeIIInfinity : FactorType::TypeII1;
}

double recovery_residual(const std::map<int, double>& values, const ThomaParams& p) {
  double s = 0.0;
  for (const auto& [k, v] : values) {
    const double r = p.cycle_value(k) - v;
    s += r * r;
  }
  return std::sqrt(s);
}

namespace {

// Euclidean projection onto {x >= 0, sum x <= 1}.
void project_capped_simplex(Eigen::VectorXd& x) {
  x = x.cwiseMax(0.0);
  if (x.sum() <= 1.0) return;
  std::vector<double> u(x.data(), x.data() + x.size());
  std::sort(u.begin(), u.end(), std::greater<>());
  double cum = 0.0, theta = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    cum += u[i];
    const double t = (cum - 1.0) / static_cast<double>(i + 1);
    if (u[i] - t > 0.0) theta = t;
  }
  x = (x.array() - theta).cwiseMax(0.0).matrix();
}

class PowerSumModel {
 public:
  PowerSumModel(const std::map<int, double>& values, int r, int s) : r_(r), s_(s) {
    for (const auto& [k, v] : values) {
      ks_.push_back(k);
      targets_.push_back(v);
    }
  }

  Eigen::VectorXd residuals(const Eigen::VectorXd& x) const {
    Eigen::VectorXd out(static_cast<Eigen::Index>(ks_.size()));
    for (std::size_t i = 0; i < ks_.size(); ++i) {
      const int k = ks_[i];
      double a = 0.0, b = 0.0;
      for (int j = 0; j < r_; ++j) a += std::pow(x[j], k);
      for (int j = 0; j < s_; ++j) b += std::pow(x[r_ + j], k);
      out[static_cast<Eigen::Index>(i)] = (k % 2 == 0 ? a - b : a + b) - targets_[i];
    }
    return out;
  }

  Eigen::MatrixXd jacobian(const Eigen::VectorXd& x) const {
    Eigen::MatrixXd jac(static_cast<Eigen::Index>(ks_.size()), r_ + s_);
    for (std::size_t i = 0; i < ks_.size(); ++i) {
      const int k = ks_[i];
      const double beta_sign = k % 2 == 0 ? -1.0 : 1.0;
      for (int j = 0; j < r_; ++j) jac(static_cast<Eigen::Index>(i), j) = k * std::pow(x[j], k - 1);
      for (int j = 0; j < s_; ++j)
        jac(static_cast<Eigen::Index>(i), r_ + j) = beta_sign * k * std::pow(x[r_ + j], k - 1);
    }
    return jac;
  }

  int dims() const { return r_ + s_; }

 private:
  int r_, s_;
  std::vector<int> ks_;
  std::vector<double> targets_;
};

// Projected Levenberg-Marquardt; returns the final point (feasible).
Eigen::VectorXd fit(const PowerSumModel& model, Eigen::VectorXd x, int max_iterations) {
  project_capped_simplex(x);
  Eigen::VectorXd r = model.residuals(x);
  double cost = r.squaredNorm();
  double mu = 1e-3;
  int stalls = 0;
  for (int it = 0; it < max_iterations && cost > 1e-34; ++it) {
    const Eigen::MatrixXd jac = model.jacobian(x);
    const Eigen::MatrixXd jtj = jac.transpose() * jac;
    const Eigen::VectorXd grad = jac.transpose() * r;
    Eigen::MatrixXd damped = jtj;
    damped.diagonal().array() += mu * (1.0 + jtj.diagonal().array());
    Eigen::VectorXd trial = x - damped.ldlt().solve(grad);
    project_capped_simplex(trial);
    const Eigen::VectorXd rt = model.residuals(trial);
    const double trial_cost = rt.squaredNorm();
    if (trial_cost < cost) {
      const double moved = (trial - x).norm();
      x = trial;
      r = rt;
      cost = trial_cost;
      mu = std::max(mu * 0.3, 1e-15);
      stalls = moved < 1e-17 ? stalls + 1 : 0;
      if (stalls > 5) break;
    } else {
      mu *= 4.0;
      if (mu > 1e14) break;
    }
  }
  return x;
}

std::vector<Eigen::VectorXd> starts(int r, int s, std::uint64_t seed, int random_starts) {
  std::vector<Eigen::VectorXd> out;
  const int m = r + s;
  if (m == 0) {
    out.emplace_back(0);
    return out;
  }
  auto block = [](Eigen::VectorXd& x, int offset, int len, double mass) {
    double norm = 0.0;
    for (int i = 0; i < len; ++i) norm += std::pow(0.5, i);
    for (int i = 0; i < len; ++i) x[offset + i] = mass * std::pow(0.5, i) / norm;
  };
  for (double mass : {0.99, 0.6, 0.25}) {
    // all-alpha, all-beta, mixed
    for (double alpha_share : {0.85, 0.15, 0.5}) {
      Eigen::VectorXd x(m);
      const double a_mass = s == 0 ? mass : (r == 0 ? 0.0 : mass * alpha_share);
      block(x, 0, r, a_mass);
      block(x, r, s, mass - a_mass);
      out.push_back(std::move(x));
    }
  }
  std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(1 + 16 * r + s)));
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < random_starts; ++i) {
    Eigen::VectorXd x(m);
    for (int j = 0; j < m; ++j) x[j] = unit(rng);
    x *= (0.05 + 0.95 * unit(rng)) / x.sum();
    out.push_back(std::move(x));
  }
  return out;
}

}  // namespace

RecoveryResult recover_params(const std::map<int, double>& values, const RecoveryOptions& options) {
  if (options.alpha_bound < 0 || options.beta_bound < 0)
    throw std::invalid_argument("recover_params: support bounds must be nonnegative");
  if (values.empty() || values.begin()->first != 2)
    throw std::invalid_argument("recover_params: cycle values must start at k = 2");
  int expected = 2;
  for (const auto& [k, v] : values) {
    if (k != expected++) throw std::invalid_argument("recover_params: cycle values must cover k = 2..K contiguously");
    if (!std::isfinite(v)) throw std::invalid_argument("recover_params: non-finite cycle value");
  }
  const int top = values.rbegin()->first;
  if (top < options.alpha_bound + options.beta_bound + 1)
    throw std::invalid_argument("recover_params: K = " + std::to_string(top) + " is below r + s + 1 = " +
                                std::to_string(options.alpha_bound + options.beta_bound + 1));

  std::vector<std::pair<int, int>> models;
  for (int total = 0; total <= options.alpha_bound + options.beta_bound; ++total)
    for (int s = 0; s <= std::min(total, options.beta_bound); ++s)
      if (total - s <= options.alpha_bound) models.emplace_back(total - s, s);

  RecoveryResult best;
  best.residual = std::numeric_limits<double>::infinity();
  for (const auto& [r, s] : models) {
    const PowerSumModel model(values, r, s);
    RecoveryResult model_best;
    model_best.residual = std::numeric_limits<double>::infinity();
    for (const auto& x0 : starts(r, s, options.seed, options.random_starts)) {
      const Eigen::VectorXd x = fit(model, x0, options.max_iterations);
      std::vector<double> alpha(x.data(), x.data() + r), beta(x.data() + r, x.data() + r + s);
      // rounding in the projection may leave the total a few ulps above 1
      const double total = x.sum();
      if (total > 1.0) {
        for (auto& a : alpha) a /= total;
        for (auto& b : beta) b /= total;
      }
      const ThomaParams p = ThomaParams::make(std::move(alpha), std::move(beta));
      const double res = recovery_residual(values, p);
      if (res < model_best.residual) {
        model_best.params = p;
        model_best.residual = res;
        model_best.alpha_support = r;
        model_best.beta_support = s;
      }
    }
    if (model_best.residual < best.residual) best = model_best;
    if (model_best.residual <= options.accept_residual) {
      best = model_best;
      break;
    }
  }
  best.accepted = best.residual <= options.accept_residual;
  return best;
}

}  // namespace stablerep
