// End-to-end acceptance run: one PASS/FAIL line per criterion, nonzero exit
// if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <random>
#include <sstream>
#include <string>

#include "battery.hpp"
#include "oracles.hpp"
#include "stablerep/characters.hpp"
#include "stablerep/fourier.hpp"
#include "stablerep/gns.hpp"
#include "stablerep/stability.hpp"
#include "stablerep/stable_states.hpp"
#include "stablerep/thoma.hpp"

using namespace stablerep;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

StateFunction normalized_character_state(const Partition& lambda) {
  return StateFunction::tabulate(lambda.weight(), [&](const Permutation& g) -> Complex {
    return normalized_character(lambda, cycle_type(g));
  });
}

// Criterion 1: dual-norm calibration.
void dual_norm_calibration(Outcome& o) {
  const auto t0 = Clock::now();
  double worst = 0.0;
  int count = 0;
  for (int n = 0; n <= 6; ++n) {
    worst = std::max(worst, std::abs(dual_norm(StateFunction::delta_identity(n)) - 1.0));
    ++count;
    for (const auto& lambda : partitions_of(n)) {
      const double d = dual_norm(normalized_character_state(lambda));
      o.require(std::abs(d - 1.0) <= 1e-9, "chi_" + lambda.to_string() + " has dual norm " + std::to_string(d));
      worst = std::max(worst, std::abs(d - 1.0));
      ++count;
    }
  }
  const double elapsed = seconds_since(t0);
  o.require(worst <= 1e-9, "dual norm deviation");
  o.require(elapsed < 60.0, "runtime");
  o.detail << count << " states, max |norm - 1| = " << worst << ", " << elapsed << " s";
}

// Criterion 2: characters against explicit orthogonal matrices and exact
// row orthogonality.
void character_oracle(Outcome& o) {
  double worst = 0.0, orthogonality = 0.0;
  std::size_t elements = 0;
  for (int n = 1; n <= 5; ++n) {
    const auto& group = SymmetricGroup::of(n);
    for (const auto& lambda : partitions_of(n)) {
      const IrrepMatrices m = yor_matrices(lambda);
      for_each_irrep_matrix(m, [&](std::size_t i, const Eigen::MatrixXd& rho) {
        const auto d = rho.rows();
        orthogonality = std::max(orthogonality, (rho.transpose() * rho - Eigen::MatrixXd::Identity(d, d)).norm());
        const double exact = static_cast<double>(mn_character(lambda, cycle_type(group.element(i))));
        worst = std::max(worst, std::abs(rho.trace() - exact));
        ++elements;
      });
    }
  }
  o.require(worst <= 1e-8, "trace mismatch");
  o.require(orthogonality <= 1e-8, "matrices not orthogonal");

  for (int n = 0; n <= 6; ++n) {
    const CharacterTable t = character_table(n);
    const auto order = static_cast<std::int64_t>(factorial(n));
    for (std::size_t a = 0; a < t.irreps.size(); ++a)
      for (std::size_t b = 0; b < t.irreps.size(); ++b) {
        std::int64_t s = 0;
        for (std::size_t c = 0; c < t.classes.size(); ++c)
          s += static_cast<std::int64_t>(t.class_sizes[c]) * t.values[a][c] * t.values[b][c];
        o.require(s == (a == b ? order : 0), "row orthogonality in S_" + std::to_string(n));
      }
  }
  o.detail << elements << " matrices, max |trace - chi| = " << worst << ", exact orthogonality through S_6";
}

// Criterion 3: Fourier-block PSD test against the Gram matrix.
void psd_equivalence(Outcome& o) {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> unit;
  int agree = 0, positives = 0;
  for (int trial = 0; trial < 100; ++trial) {
    StateFunction f = oracle::random_state(4, rng, 3);
    f += Complex(0.3 * unit(rng)) * oracle::random_hermitian(4, rng);
    const bool gram = oracle::gram_min_eigenvalue(f) >= -kPsdTolerance;
    const bool ours = is_positive_definite(f).positive;
    agree += gram == ours;
    positives += ours;
  }
  o.require(agree == 100, "disagreement");
  o.detail << agree << "/100 agree (" << positives << " positive, " << 100 - positives << " not)";
}

bool preserves_head(const Permutation& s, int n) {
  for (Point x : s.support())
    if (x <= n && s(x) > n) return false;
  return true;
}

// Criterion 4: the canonical battery.
void canonical_battery(Outcome& o) {
  const auto specs = battery::specs();
  bool has_full = false, has_partial = false;
  std::size_t checks = 0;
  for (const auto& spec : specs) {
    const double total = spec.params.total();
    has_full = has_full || std::abs(total - 1.0) < 1e-12;
    has_partial = has_partial || total < 1.0 - 1e-12;
    const std::string name = std::to_string(spec.n) + spec.lambda.to_string() + spec.params.to_string();
    o.require(spec.n <= 3 && spec.params.alpha().size() <= 2 && spec.params.beta().size() <= 2, "battery bounds");
    o.require(is_positive_definite(StateView::of(spec).tabulate(6)).positive, "not positive definite: " + name);

    std::vector<Permutation> gens;
    for (int i = 1; i < 8; ++i)
      if (i != spec.n) gens.push_back(Permutation::transposition(i, i + 1));
    for (const auto& s : SymmetricGroup::of(7).elements()) {
      const double v = evaluate(spec, s);
      if (!preserves_head(s, spec.n)) {
        o.require(v == 0.0, "nonzero off the Young subgroup: " + name + " at " + s.to_string());
        ++checks;
      }
      for (const auto& t : gens) {
        o.require(evaluate(spec, conjugate(t, s)) == v, "not partially central: " + name);
        ++checks;
      }
    }
  }
  o.require(specs.size() >= 10, "battery too small");
  o.require(has_full && has_partial, "battery must mix sum = 1 and sum < 1");
  o.detail << specs.size() << " specs, PSD on S_6, " << checks << " exact vanishing/centrality checks on S_7";
}

// Criterion 5: shift sequences and asymptotic characters.
void asymptotic_reproduction(Outcome& o) {
  std::size_t sequences = 0, traces = 0, exact_stops = 0;
  for (const auto& g : SymmetricGroup::of(4).elements()) {
    const ShiftSequence seq = shift_sequence(g, g.level(), 8);
    for (int m = g.level(); m <= 8; ++m) {
      for (Point x : seq.shifted(m).support()) o.require(x > m, "shifted element touches the head");
      if (m < 8)
        for (Point x : (seq.sigma(m + 1) * seq.sigma(m).inverse()).support()) o.require(x > m, "step touches the head");
      ++sequences;
    }
  }
  for (const auto& spec : battery::specs()) {
    const StateView state = StateView::of(spec);
    for (const auto& g : SymmetricGroup::of(4).elements()) {
      const AsymptoticTrace t = asymptotic_character(state, g, 9);
      const double expected = thoma_character(spec.params, cycle_type(g));
      for (const auto& [m, v] : t.values)
        if (m >= spec.n) o.require(v == Complex(expected), "value differs from the Thoma character");
      o.require(t.stabilized_at.has_value(), "trace did not stabilize");
      const int bound = std::max(spec.n, g.level());
      if (t.stabilized_at) {
        o.require(*t.stabilized_at <= bound, "stabilized late");
        if (!g.is_identity() && expected != 0.0) {
          o.require(*t.stabilized_at == bound, "stabilized before the depth");
          ++exact_stops;
        }
      }
      ++traces;
    }
  }
  o.detail << sequences << " sequence steps, " << traces << " traces exact from m = n, " << exact_stops
           << " stop exactly at max(n, level g)";
}

// Criterion 6: classification round trip and injectivity.
void classification_round_trip(Outcome& o) {
  const auto specs = battery::specs();
  std::vector<ClassInvariant> recovered;
  double worst = 0.0;
  for (const auto& spec : specs) {
    const std::string name = spec.params.to_string();
    try {
      const Classification c = classify(StateView::of(spec));
      o.require(c.invariant.n == spec.n && c.invariant.lambda == spec.lambda, "depth/lambda mismatch: " + name);
      const auto& a = spec.params.alpha();
      const auto& b = spec.params.beta();
      o.require(c.invariant.alpha.size() == a.size() && c.invariant.beta.size() == b.size(),
                "support mismatch: " + name);
      for (std::size_t i = 0; i < std::min(a.size(), c.invariant.alpha.size()); ++i)
        worst = std::max(worst, std::abs(a[i] - c.invariant.alpha[i]));
      for (std::size_t i = 0; i < std::min(b.size(), c.invariant.beta.size()); ++i)
        worst = std::max(worst, std::abs(b[i] - c.invariant.beta[i]));
      recovered.push_back(c.invariant);
    } catch (const std::exception& e) {
      o.require(false, "classify threw for " + name + ": " + e.what());
      recovered.push_back(ClassInvariant::of(spec));
    }
  }
  o.require(worst <= 1e-6, "parameters off");
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < specs.size(); ++i)
    for (std::size_t j = 0; j < specs.size(); ++j) {
      if (i == j) continue;
      o.require(!quasi_equivalent(recovered[i], recovered[j]), "distinct specs identified");
      ++pairs;
    }
  o.detail << specs.size() << " specs recovered, max parameter error " << worst << ", " << pairs
           << " distinct pairs separated";
}

// Criterion 7: the II_1 / II_infinity rule on a parameter grid.
void type_rule(Outcome& o) {
  struct Case {
    std::vector<double> alpha, beta;
    bool infinite;
  };
  const std::vector<Case> grid{
      {{1.0}, {}, true},           {{}, {1.0}, true},          {{0.5, 0.5}, {}, true},
      {{0.5}, {0.5}, true},        {{}, {0.5, 0.5}, true},     {{0.6, 0.3}, {0.1}, true},
      {{0.25, 0.25}, {0.25, 0.25}, true},
      {{0.4, 0.3}, {0.2, 0.1}, true},
      {{0.7}, {0.3 - 1e-10}, true},  // within tolerance of 1
      {{0.5, 0.25, 0.125}, {0.125}, true},
      {{}, {}, false},             {{0.5}, {}, false},         {{}, {0.9}, false},
      {{0.3, 0.3}, {0.3}, false},  {{0.7}, {0.3 - 1e-8}, false},
      {{0.1}, {0.1}, false},       {{0.45, 0.45}, {}, false},  {{0.2, 0.2}, {0.2, 0.2}, false},
      {{0.999}, {}, false},        {{0.5, 0.3}, {0.1, 0.05}, false},
  };
  int correct = 0;
  for (const auto& c : grid) {
    const bool got = type_classify(ThomaParams::make(c.alpha, c.beta)) == FactorType::TypeIIInfinity;
    correct += got == c.infinite;
  }
  o.require(correct == static_cast<int>(grid.size()), "misclassified");
  o.detail << correct << "/" << grid.size() << " cases";
}

// Criterion 8: stability profiles.
void stability_profiles(Outcome& o) {
  std::size_t points = 0;
  for (const auto& spec : battery::specs()) {
    const StabilityProfile p = stability_profile(StateView::of(spec).tabulate(6), 4, 4);
    for (const auto& pt : p.points) {
      if (pt.m >= spec.n) o.require(pt.defect == 0.0, "defect beyond the depth");
      if (pt.m == spec.n - 1) o.require(pt.defect > 0.0, "no defect just below the depth");
      ++points;
    }
  }
  const std::vector<ThomaParams> thoma{ThomaParams::make({1.0}, {}), ThomaParams::make({}, {1.0}),
                                       ThomaParams::make({}, {}), ThomaParams::make({0.5, 0.5}, {}),
                                       ThomaParams::make({0.4}, {0.3, 0.2})};
  for (const auto& t : thoma) {
    const StabilityProfile p = stability_profile(StateView::of(t).tabulate(6), 4, 4);
    for (const auto& pt : p.points) o.require(pt.defect == 0.0, "Thoma profile not zero");
    points += p.points.size();
  }
  o.detail << points << " profile points (K = 4, m = 0..4, states on S_6)";
}

// Criterion 9: standard form, biregular representation and the tracial
// formula.
void standard_form_suite(Outcome& o) {
  const auto t0 = Clock::now();
  std::vector<StateFunction> states{StateFunction::delta_identity(3)};
  for (const auto& spec : battery::specs()) states.push_back(StateView::of(spec).tabulate(3));
  double worst = 0.0;
  std::size_t pairs = 0;
  for (const auto& f : states) {
    const CanonicalConstruction c = canonical_construction(f);
    const StandardFormCheck chk = check_standard_form(c.standard);
    worst = std::max({worst, chk.j_squared, chk.j_isometry, chk.j_fixes_xi, chk.commutant_distance});
    const ConstructionReport r = verify_construction(f, c);
    o.require(r.pairs_checked == 36u * 36u, "incomplete sweep");
    o.require(r.left_quasi_equivalent, "left action not quasi-equivalent to the GNS representation");
    worst = std::max(worst, r.worst());
    pairs += r.pairs_checked;
  }

  // tracial case: Pi(g, h) v_x = v_{g x h^-1}
  {
    const CanonicalConstruction c = canonical_construction(StateFunction::delta_identity(3));
    const auto& g = SymmetricGroup::of(3);
    const auto& orbit = c.biregular.orbit();
    for (std::size_t a = 0; a < g.order(); ++a)
      for (std::size_t b = 0; b < g.order(); ++b)
        for (std::size_t x = 0; x < g.order(); ++x) {
          const std::size_t y = g.index_of(g.element(a) * g.element(x) * g.element(b).inverse());
          worst = std::max(worst, (c.biregular(a, b) * orbit[x] - orbit[y]).norm());
        }
  }

  // spot checks at k = 4
  std::size_t spots = 0;
  for (const auto& spec : {CanonicalStateSpec::make(2, Partition({1, 1}), ThomaParams::make({0.5}, {0.3})),
                           CanonicalStateSpec::make(3, Partition({2, 1}), ThomaParams::make({0.6, 0.4}, {}))}) {
    const StateFunction f = StateView::of(spec).tabulate(4);
    const CanonicalConstruction c = canonical_construction(f);
    const StandardFormCheck chk = check_standard_form(c.standard);
    worst = std::max({worst, chk.j_squared, chk.j_isometry, chk.j_fixes_xi, chk.commutant_distance});
    const ConstructionReport r = verify_construction(f, c, 300, 11);
    o.require(r.left_quasi_equivalent, "k = 4 quasi-equivalence");
    worst = std::max(worst, r.worst());
    spots += r.pairs_checked;
  }
  const double elapsed = seconds_since(t0);
  o.require(worst < 1e-8, "residual " + std::to_string(worst));
  o.require(elapsed < 300.0, "runtime");
  o.detail << states.size() << " states at k = 3 (" << pairs << " pair products), " << spots
           << " sampled pairs at k = 4, max residual " << worst << ", " << elapsed << " s";
}

// Criterion 10: induction multiplicities against Littlewood-Richardson.
void induction(Outcome& o) {
  std::size_t compared = 0;
  for (int m = 1; m <= 6; ++m)
    for (int n = 0; n <= m; ++n)
      for (const auto& lambda : partitions_of(n))
        for (const auto& mu : partitions_of(m - n)) {
          const auto got = induced_multiplicities(lambda, mu);
          for (const auto& nu : partitions_of(m)) {
            const std::int64_t ours = got.count(nu) ? got.at(nu) : 0;
            o.require(ours == oracle::lr_coefficient(lambda.parts(), mu.parts(), nu.parts()),
                      lambda.to_string() + " x " + mu.to_string() + " -> " + nu.to_string());
            ++compared;
          }
        }
  o.detail << compared << " multiplicities equal to Littlewood-Richardson coefficients";
}

std::map<int, double> cycle_values(const ThomaParams& p) {
  std::map<int, double> v;
  for (int k = 2; k <= 8; ++k) v[k] = p.cycle_value(k);
  return v;
}

double grid_minimum(const std::map<int, double>& values, int r, int s, int steps) {
  double best = std::numeric_limits<double>::infinity();
  auto eval = [&](std::vector<double> a, std::vector<double> b) {
    double total = 0.0;
    for (double x : a) total += x;
    for (double x : b) total += x;
    if (total > 1.0 + 1e-12) return;
    best = std::min(best, recovery_residual(values, ThomaParams::make(a, b)));
  };
  for (int i = 0; i <= steps; ++i) {
    const double x = static_cast<double>(i) / steps;
    if (r + s == 1) {
      if (r == 1) eval({x}, {});
      else eval({}, {x});
      continue;
    }
    for (int j = 0; j <= steps; ++j) {
      const double y = static_cast<double>(j) / steps;
      if (r == 2) eval({x, y}, {});
      else if (s == 2) eval({}, {x, y});
      else eval({x}, {y});
    }
  }
  return best;
}

// Criterion 11: plant-and-recover, and a grid-search global optimum check.
void parameter_recovery(Outcome& o) {
  RecoveryOptions opt;
  opt.alpha_bound = 3;
  opt.beta_bound = 3;
  const std::vector<ThomaParams> planted{
      ThomaParams::make({0.6, 0.4}, {}),           ThomaParams::make({0.5}, {0.5}),
      ThomaParams::make({0.45, 0.3, 0.1}, {}),     ThomaParams::make({}, {0.5, 0.3, 0.15}),
      ThomaParams::make({0.4, 0.2}, {0.25}),       ThomaParams::make({0.35}, {0.3, 0.2}),
      ThomaParams::make({0.3, 0.2, 0.1}, {0.25, 0.1}), ThomaParams::make({0.5, 0.2}, {0.15, 0.1, 0.05}),
      ThomaParams::make({0.3, 0.3, 0.3}, {0.1}),   ThomaParams::make({0.2}, {0.2, 0.2, 0.2})};
  double worst_param = 0.0, worst_residual = 0.0;
  for (const auto& p : planted) {
    const RecoveryResult r = recover_params(cycle_values(p), opt);
    o.require(r.accepted, "not accepted: " + p.to_string());
    worst_residual = std::max(worst_residual, r.residual);
    const bool same_support = r.params.alpha().size() == p.alpha().size() && r.params.beta().size() == p.beta().size();
    o.require(same_support, "support mismatch: " + p.to_string());
    if (!same_support) continue;
    for (std::size_t i = 0; i < p.alpha().size(); ++i)
      worst_param = std::max(worst_param, std::abs(r.params.alpha()[i] - p.alpha()[i]));
    for (std::size_t i = 0; i < p.beta().size(); ++i)
      worst_param = std::max(worst_param, std::abs(r.params.beta()[i] - p.beta()[i]));
  }
  o.require(worst_param <= 1e-6, "parameters off");
  o.require(worst_residual < 1e-10, "residual too large");

  // global optimum for supports <= 2 against a 1/200 grid, on planted and
  // perturbed values
  std::size_t grid_checks = 0;
  std::vector<std::map<int, double>> targets{cycle_values(ThomaParams::make({0.55, 0.25}, {})),
                                             cycle_values(ThomaParams::make({0.3}, {0.45}))};
  auto noisy = cycle_values(ThomaParams::make({0.55, 0.25}, {0.15}));
  noisy[3] += 0.01;
  targets.push_back(noisy);
  for (const auto& v : targets)
    for (auto [ra, rb] : std::vector<std::pair<int, int>>{{1, 1}, {2, 0}, {0, 2}}) {
      const RecoveryResult r = recover_params(v, RecoveryOptions{ra, rb});
      std::vector<std::pair<int, int>> models;
      for (int a = 0; a <= ra; ++a)
        for (int b = 0; b <= rb; ++b)
          if (a + b > 0) models.emplace_back(a, b);
      for (auto [a, b] : models) {
        o.require(r.residual <= grid_minimum(v, a, b, 200) + 1e-12, "grid point beats the optimizer");
        ++grid_checks;
      }
    }
  o.detail << planted.size() << " planted parameter sets, max error " << worst_param << ", max residual "
           << worst_residual << "; " << grid_checks << " grid comparisons";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"dual-norm calibration", dual_norm_calibration},
      {"character oracle", character_oracle},
      {"PSD equivalence", psd_equivalence},
      {"canonical battery", canonical_battery},
      {"asymptotic characters", asymptotic_reproduction},
      {"classification round trip", classification_round_trip},
      {"type rule", type_rule},
      {"stability profile", stability_profiles},
      {"standard form suite", standard_form_suite},
      {"induction", induction},
      {"parameter recovery", parameter_recovery},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    failures += !o.pass;
    std::printf("%s  %2zu %-28s %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.str().c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
