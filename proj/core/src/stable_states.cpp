#include "stablerep/stable_states.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <sstream>

#include "stablerep/characters.hpp"

namespace stablerep {

CanonicalStateSpec CanonicalStateSpec::make(int n, Partition lambda, ThomaParams params) {
  if (n < 0) throw std::invalid_argument("canonical state: n must be nonnegative");
  if (lambda.weight() != n)
    throw std::invalid_argument("canonical state: lambda " + lambda.to_string() + " is not a partition of " +
                                std::to_string(n));
  return CanonicalStateSpec{n, std::move(lambda), std::move(params)};
}

double evaluate(const CanonicalStateSpec& spec, const Permutation& s) {
  const auto parts = split_product(s, spec.n);
  if (!parts) return 0.0;
  const double head = parts->first.is_identity() ? 1.0 : normalized_character(spec.lambda, cycle_type(parts->first));
  return head * thoma_character(spec.params, cycle_type(parts->second));
}

Complex StateView::operator()(const Permutation& s) const {
  if (s.level() > max_level_)
    throw std::out_of_range("state is defined up to level " + std::to_string(max_level_) + ", asked for " +
                            s.to_string());
  return fn_(s);
}

StateFunction StateView::tabulate(int level) const {
  if (level > max_level_)
    throw std::out_of_range("cannot tabulate level " + std::to_string(level) + " of a state defined up to level " +
                            std::to_string(max_level_));
  return StateFunction::tabulate(level, fn_);
}

StateView StateView::of(const CanonicalStateSpec& spec) {
  // normalized chi_lambda on every class of S_n, computed once
  auto head = std::make_shared<std::map<CycleType, double>>();
  for (const auto& p : partitions_of(spec.n)) {
    const CycleType c = as_cycle_type(p);
    head->emplace(c, normalized_character(spec.lambda, c));
  }
  return StateView([spec, head](const Permutation& s) -> Complex {
    const auto parts = split_product(s, spec.n);
    if (!parts) return 0.0;
    return head->at(cycle_type(parts->first)) * thoma_character(spec.params, cycle_type(parts->second));
  });
}

StateView StateView::of(const ThomaParams& params) {
  return StateView([params](const Permutation& s) -> Complex { return thoma_character(params, cycle_type(s)); });
}

StateView StateView::of(StateFunction table) {
  const int level = table.level();
  auto shared = std::make_shared<const StateFunction>(std::move(table));
  return StateView([shared](const Permutation& s) { return (*shared)(s); }, level);
}

ShiftSequence shift_sequence(const Permutation& g, int first, int last) {
  if (first < g.level())
    throw std::invalid_argument("shift_sequence: first level " + std::to_string(first) + " is below level(g) = " +
                                std::to_string(g.level()));
  if (last < first) throw std::invalid_argument("shift_sequence: empty range");
  const std::vector<Point> supp = g.support();
  const int r = static_cast<int>(supp.size());

  ShiftSequence seq;
  seq.base = g;
  seq.first = first;
  std::vector<std::vector<Point>> swaps;
  for (int i = 0; i < r; ++i) swaps.push_back({supp[i], first + 1 + i});
  Permutation sigma = Permutation::from_cycles(swaps);
  seq.sigmas.push_back(sigma);
  for (int m = first; m < last; ++m) {
    std::vector<Point> rot(static_cast<std::size_t>(r) + 1);
    for (int i = 0; i <= r; ++i) rot[i] = m + 1 + i;
    sigma = Permutation::cycle(rot) * sigma;
    seq.sigmas.push_back(sigma);
  }
  return seq;
}

AsymptoticTrace asymptotic_character(const StateView& state, const Permutation& g, int last, double tol) {
  const int first = g.level();
  if (last <= first)
    throw std::invalid_argument("asymptotic_character: need last > level(g) = " + std::to_string(first));
  const ShiftSequence seq = shift_sequence(g, first, last);
  AsymptoticTrace trace;
  trace.g = g;
  for (int m = first; m <= last; ++m) trace.values.emplace_back(m, state(seq.shifted(m)));
  std::size_t i = trace.values.size() - 1;
  while (i > 0 && std::abs(trace.values[i - 1].second - trace.values[i].second) <= tol) --i;
  if (i + 1 < trace.values.size()) trace.stabilized_at = trace.values[i].first;
  return trace;
}

Partition recover_lambda(const StateView& state, int n, double threshold) {
  const CharacterTable table = character_table(n, SymmetricGroup::kMaxLevel);
  const auto& group = SymmetricGroup::of(n);
  // class sums of the state
  std::vector<Complex> class_sum(table.classes.size(), Complex{});
  for (const auto& g : group.elements()) class_sum[table.class_index(cycle_type(g))] += state(g);

  std::vector<Partition> surviving;
  std::ostringstream detail;
  for (std::size_t mu = 0; mu < table.irreps.size(); ++mu) {
    Complex s{};
    for (std::size_t c = 0; c < table.classes.size(); ++c) s += class_sum[c] * static_cast<double>(table.values[mu][c]);
    if (std::abs(s) > threshold) {
      surviving.push_back(table.irreps[mu]);
      detail << ' ' << table.irreps[mu].to_string();
    }
  }
  if (surviving.size() != 1)
    throw ClassificationError("recover_lambda: expected exactly one irreducible component at level " +
                              std::to_string(n) + ", found " + std::to_string(surviving.size()) + ":" + detail.str());
  return surviving.front();
}

namespace {

bool preserves_head(const Permutation& s, int n) {
  for (const auto& [src, tgt] : s.moved())
    if ((src <= n) != (tgt <= n)) return false;
  return true;
}

}  // namespace

std::optional<int> central_depth(const StateFunction& f, const DepthOptions& options) {
  const int K = f.level();
  const auto& group = SymmetricGroup::of(K);
  const std::size_t order = group.order();

  // conj[i][idx] = index of s_i s s_i for the adjacent transposition s_i
  std::vector<std::vector<std::size_t>> conj(static_cast<std::size_t>(std::max(K, 1)));
  auto conj_table = [&](int i) -> const std::vector<std::size_t>& {
    auto& table = conj[static_cast<std::size_t>(i)];
    if (table.empty()) {
      const Permutation t = Permutation::transposition(i, i + 1);
      table.resize(order);
      for (std::size_t idx = 0; idx < order; ++idx) table[idx] = group.index_of(conjugate(t, group.element(idx)));
    }
    return table;
  };

  for (int n = 0; n <= K; ++n) {
    bool ok = true;
    for (std::size_t idx = 0; ok && idx < order; ++idx)
      if (!preserves_head(group.element(idx), n) && std::abs(f.at(idx)) >= options.vanish_tol) ok = false;
    for (int i = 1; ok && i < K; ++i) {
      if (i == n) continue;  // (n, n+1) crosses the cut
      const auto& table = conj_table(i);
      for (std::size_t idx = 0; ok && idx < order; ++idx)
        if (std::abs(f.at(table[idx]) - f.at(idx)) >= options.vanish_tol) ok = false;
    }
    if (ok) return n;
  }
  return std::nullopt;
}

std::optional<int> central_depth(const StateView& state, int level, const DepthOptions& options) {
  return central_depth(state.tabulate(level), options);
}

ClassInvariant ClassInvariant::of(const CanonicalStateSpec& spec) {
  return ClassInvariant{spec.n, spec.lambda, spec.params.alpha(), spec.params.beta()};
}

CanonicalStateSpec ClassInvariant::to_spec() const {
  return CanonicalStateSpec::make(n, lambda, ThomaParams::make(alpha, beta));
}

bool quasi_equivalent(const ClassInvariant& a, const ClassInvariant& b, double tol) {
  if (a.n != b.n || a.lambda != b.lambda) return false;
  auto normalize = [tol](std::vector<double> v) {
    v.erase(std::remove_if(v.begin(), v.end(), [tol](double x) { return x <= tol; }), v.end());
    std::sort(v.begin(), v.end(), std::greater<>());
    return v;
  };
  auto same = [&](const std::vector<double>& x, const std::vector<double>& y) {
    const auto u = normalize(x), v = normalize(y);
    if (u.size() != v.size()) return false;
    for (std::size_t i = 0; i < u.size(); ++i)
      if (std::abs(u[i] - v[i]) > tol) return false;
    return true;
  };
  return same(a.alpha, b.alpha) && same(a.beta, b.beta);
}

Classification classify(const StateView& state, const ClassifyOptions& options) {
  Classification out;
  const auto depth = central_depth(state, options.depth_level, options.depth);
  if (!depth)
    throw ClassificationError("classify: central depth exceeds the truncation level " +
                              std::to_string(options.depth_level));
  out.invariant.n = *depth;
  out.invariant.lambda = recover_lambda(state, *depth, options.lambda_threshold);

  for (int k = 2; k <= options.max_cycle; ++k) {
    std::vector<Point> pts(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) pts[i] = i + 1;
    const Permutation g = Permutation::cycle(pts);
    const AsymptoticTrace trace =
        asymptotic_character(state, g, std::max(*depth, k) + 1, options.stabilization_tol);
    if (!trace.stabilized_at)
      throw ClassificationError("classify: values on shifted " + std::to_string(k) + "-cycles do not stabilize");
    if (std::abs(trace.limit().imag()) > options.stabilization_tol)
      throw ClassificationError("classify: asymptotic value on " + std::to_string(k) + "-cycles is not real");
    out.cycle_values[k] = trace.limit().real();
    out.stabilized_at[k] = *trace.stabilized_at;
  }

  out.recovery = recover_params(out.cycle_values, options.recovery);
  if (!out.recovery.accepted) {
    std::ostringstream msg;
    msg << "classify: Thoma parameter fit rejected, residual " << out.recovery.residual << " > "
        << options.recovery.accept_residual;
    throw ClassificationError(msg.str());
  }
  out.invariant.alpha = out.recovery.params.alpha();
  out.invariant.beta = out.recovery.params.beta();
  return out;
}

}  // namespace stablerep
