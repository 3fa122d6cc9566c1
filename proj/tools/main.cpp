// stablerep: batch interface to the library. Every report is deterministic
// JSON (or CSV/text where noted) and records the irrep cache hash.
//
// Exit status: 0 success, 1 certificate failure, 2 malformed input,
// 3 infeasible job (size guards).

#include <climits>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "io.hpp"
#include "stablerep/characters.hpp"
#include "stablerep/fourier.hpp"
#include "stablerep/gns.hpp"
#include "stablerep/irrep_cache.hpp"
#include "stablerep/stability.hpp"
#include "stablerep/stable_states.hpp"
#include "stablerep/thoma.hpp"

using namespace stablerep;
using namespace stablerep::cli;

namespace {

constexpr int kLevelCap = 8;

struct Options {
  // shared
  std::optional<int> level;
  std::optional<double> tol;
  std::string support_bounds;
  std::string cache_dir;
  std::uint64_t seed = 0;
  std::string format = "json";
  bool exhaustive = false;
  int jobs = 1;
  bool allow_large = false;
  std::string output;
  // inputs
  std::string state_path, spec_path, params_path, values_path;
  std::vector<std::string> spec_paths;
  std::string perm, lambda, mu;
  std::optional<int> n, max_m, table_level;
  int last = 8;
  std::size_t sample_pairs = 0;
};

struct Report {
  Json json = Json::object();
  std::string text;
  std::string csv;
  int status = 0;
};

class Job {
 public:
  explicit Job(const Options& o) : o_(o) {}

  int cap() const { return o_.allow_large ? INT_MAX : kLevelCap; }

  void check_level(int k, const std::string& what) const {
    if (k < 0) throw InputError(what + " must be nonnegative");
    if (k > cap())
      throw InfeasibleError(what + " = " + std::to_string(k) + " exceeds the cap " + std::to_string(kLevelCap) +
                            " (see --allow-large-level)");
  }

  double tol(double fallback) const {
    const double t = o_.tol.value_or(fallback);
    if (!(t > 0.0)) throw InputError("--tol must be positive");
    return t;
  }

  int require_level(const char* flag = "--level") const {
    if (!o_.level) throw InputError(std::string(flag) + " is required");
    check_level(*o_.level, "--level");
    return *o_.level;
  }

  int source_count() const {
    return !o_.state_path.empty() + !o_.spec_path.empty() + !o_.params_path.empty();
  }

  void require_one_source() const {
    if (source_count() != 1) throw InputError("give exactly one of --state, --spec, --params");
  }

  StateView view() const {
    require_one_source();
    if (!o_.spec_path.empty()) return StateView::of(parse_spec(read_json_file(o_.spec_path), o_.spec_path));
    if (!o_.params_path.empty()) return StateView::of(parse_params(read_json_file(o_.params_path), o_.params_path));
    return StateView::of(parse_state(read_json_file(o_.state_path), o_.state_path, cap()));
  }

  /// Value table on S_level: a state file at its own level (restricted when
  /// `level` is lower), or a spec/params tabulated at `level`.
  StateFunction table(std::optional<int> level) const {
    require_one_source();
    if (!o_.state_path.empty()) {
      StateFunction f = parse_state(read_json_file(o_.state_path), o_.state_path, cap());
      if (!level || *level == f.level()) return f;
      if (*level > f.level())
        throw InputError("--level " + std::to_string(*level) + " exceeds the state level " + std::to_string(f.level()));
      return f.restricted(*level);
    }
    if (!level) throw InputError("--level is required with --spec/--params");
    check_level(*level, "--level");
    return view().tabulate(*level);
  }

  Permutation perm() const {
    if (o_.perm.empty()) throw InputError("--perm is required");
    return parse_permutation(parse_json_text(o_.perm, "--perm"), "--perm");
  }

  Partition partition(const std::string& text, const std::string& flag) const {
    if (text.empty()) throw InputError(flag + " is required");
    return parse_partition(parse_json_text(text, flag), flag);
  }

  RecoveryOptions recovery() const {
    RecoveryOptions r;
    r.seed = o_.seed;
    if (!o_.support_bounds.empty()) {
      int a = -1, b = -1;
      char tail = 0;
      if (std::sscanf(o_.support_bounds.c_str(), "%d,%d%c", &a, &b, &tail) != 2 || a < 0 || b < 0)
        throw InputError("--support-bounds expects r,s with r, s >= 0");
      r.alpha_bound = a;
      r.beta_bound = b;
    }
    return r;
  }

  ClassifyOptions classify_options() const {
    ClassifyOptions c;
    c.recovery = recovery();
    if (o_.level) {
      check_level(*o_.level, "--level");
      c.depth_level = *o_.level;
    }
    return c;
  }

  Report eval_state() const {
    Report r;
    if (!o_.perm.empty()) {
      const Permutation g = perm();
      r.json["perm"] = to_json(g);
      r.json["value"] = to_json(view()(g));
      return r;
    }
    r.json = state_to_json(table(o_.level));
    return r;
  }

  Report char_finite() const {
    Report r;
    const Partition lambda = partition(o_.lambda, "--lambda");
    check_level(lambda.weight(), "|lambda|");
    r.json["lambda"] = to_json(lambda);
    r.json["dimension"] = hook_dimension(lambda);
    if (!o_.perm.empty()) {
      const Permutation g = perm();
      if (g.level() > lambda.weight())
        throw InputError("--perm " + g.to_string() + " is outside S_" + std::to_string(lambda.weight()));
      r.json["perm"] = to_json(g);
      r.json["value"] = mn_character(lambda, cycle_type(g));
      return r;
    }
    const CharacterTable t = character_table(lambda.weight(), cap());
    const auto row = static_cast<std::size_t>(std::find(t.irreps.begin(), t.irreps.end(), lambda) - t.irreps.begin());
    Json classes = Json::array();
    for (std::size_t c = 0; c < t.classes.size(); ++c)
      classes.push_back(
          Json{{"cycle_type", to_json(t.classes[c])}, {"class_size", t.class_sizes[c]}, {"value", t.values[row][c]}});
    r.json["classes"] = std::move(classes);
    return r;
  }

  Report char_thoma() const {
    Report r;
    if (o_.params_path.empty()) throw InputError("--params is required");
    const ThomaParams p = parse_params(read_json_file(o_.params_path), o_.params_path);
    r.json["params"] = to_json(p);
    r.json["type"] = to_string(type_classify(p, tol(1e-9)));
    if (!o_.perm.empty()) {
      const Permutation g = perm();
      r.json["perm"] = to_json(g);
      r.json["value"] = thoma_character(p, cycle_type(g));
      return r;
    }
    const int k = require_level();
    Json classes = Json::array();
    for (const auto& part : partitions_of(k)) {
      const CycleType c = as_cycle_type(part);
      classes.push_back(Json{{"cycle_type", to_json(c)}, {"value", thoma_character(p, c)}});
    }
    r.json["level"] = k;
    r.json["classes"] = std::move(classes);
    return r;
  }

  Report dual_norm_report() const {
    Report r;
    const StateFunction f = table(o_.level);
    r.json["level"] = f.level();
    r.json["dual_norm"] = dual_norm(f, o_.jobs);
    return r;
  }

  Report psd_check() const {
    Report r;
    const StateFunction f = table(o_.level);
    const double t = tol(kPsdTolerance);
    r.json["level"] = f.level();
    r.json["tolerance"] = t;
    if (!f.is_hermitian()) {
      r.json["positive"] = false;
      r.json["reason"] = "not hermitian";
      r.text = "positive definite: false, not hermitian";
      r.status = 1;
      return r;
    }
    const PsdCertificate cert = is_positive_definite(f, t);
    r.json["positive"] = cert.positive;
    r.json["min_eigenvalue"] = cert.min_eigenvalue;
    r.json["witness"] = to_json(cert.witness);
    r.text = std::string("positive definite: ") + (cert.positive ? "true" : "false") + ", min eigenvalue " +
             Json(cert.min_eigenvalue).dump();
    r.status = cert.positive ? 0 : 1;
    return r;
  }

  Report asymptotic_char() const {
    Report r;
    const Permutation g = perm();
    const AsymptoticTrace t = asymptotic_character(view(), g, o_.last, tol(1e-12));
    r.json["perm"] = to_json(g);
    Json values = Json::array();
    for (const auto& [m, v] : t.values) values.push_back(Json{{"m", m}, {"value", to_json(v)}});
    r.json["values"] = std::move(values);
    r.json["stabilized_at"] = t.stabilized_at ? Json(*t.stabilized_at) : Json(nullptr);
    r.json["limit"] = to_json(t.limit());
    return r;
  }

  Report recover() const {
    Report r;
    if (o_.values_path.empty()) throw InputError("--values is required");
    const auto values = parse_values(read_json_file(o_.values_path), o_.values_path);
    const RecoveryResult res = recover_params(values, recovery());
    r.json["params"] = to_json(res.params);
    r.json["residual"] = res.residual;
    r.json["accepted"] = res.accepted;
    r.json["alpha_support"] = res.alpha_support;
    r.json["beta_support"] = res.beta_support;
    r.status = res.accepted ? 0 : 1;
    return r;
  }

  static Json classification_json(const Classification& c) {
    Json values = Json::object();
    for (const auto& [k, v] : c.cycle_values) values[std::to_string(k)] = v;
    Json stab = Json::object();
    for (const auto& [k, m] : c.stabilized_at) stab[std::to_string(k)] = m;
    return Json{{"invariant", to_json(c.invariant)},
                {"type", to_string(type_classify(ThomaParams::make(c.invariant.alpha, c.invariant.beta)))},
                {"residual", c.recovery.residual},
                {"cycle_values", std::move(values)},
                {"stabilized_at", std::move(stab)}};
  }

  Report classify_report() const {
    Report r;
    try {
      r.json = classification_json(classify(view(), classify_options()));
    } catch (const ClassificationError& e) {
      r.json["error"] = e.what();
      r.status = 1;
    }
    return r;
  }

  Report quasi_equivalent_report() const {
    Report r;
    if (o_.spec_paths.size() != 2) throw InputError("quasi-equivalent takes --spec twice");
    std::vector<ClassInvariant> inv;
    Json items = Json::array();
    for (const auto& path : o_.spec_paths) {
      const CanonicalStateSpec spec = parse_spec(read_json_file(path), path);
      try {
        const Classification c = classify(StateView::of(spec), classify_options());
        inv.push_back(c.invariant);
        items.push_back(to_json(c.invariant));
      } catch (const ClassificationError& e) {
        r.json["error"] = path + ": " + e.what();
        r.status = 1;
        return r;
      }
    }
    r.json["invariants"] = std::move(items);
    r.json["quasi_equivalent"] = quasi_equivalent(inv[0], inv[1], tol(1e-6));
    return r;
  }

  ProbeOptions probes() const {
    ProbeOptions p;
    p.exhaustive = o_.exhaustive;
    return p;
  }

  Report stability_profile_report() const {
    Report r;
    const int k = o_.level.value_or(4);
    check_level(k, "--level");
    const int m = o_.max_m.value_or(k);
    if (m < 0) throw InputError("--max-m must be nonnegative");
    std::optional<int> top = o_.table_level;
    if (o_.state_path.empty() && !top) top = std::max(k, m + 2);
    if (top) check_level(*top, "--table-level");
    const StateFunction f = table(top);
    const StabilityProfile p = stability_profile(f, k, m, probes());
    Json points = Json::array();
    r.csv = "m,defect,witness\n";
    for (const auto& pt : p.points) {
      points.push_back(Json{{"m", pt.m}, {"defect", pt.defect}, {"witness", to_json(pt.witness)}});
      r.csv += std::to_string(pt.m) + "," + Json(pt.defect).dump() + "," + pt.witness.to_string() + "\n";
    }
    r.json["level"] = k;
    r.json["table_level"] = f.level();
    r.json["exhaustive"] = o_.exhaustive;
    r.json["points"] = std::move(points);
    return r;
  }

  Report centrality_defect_report() const {
    Report r;
    if (!o_.n) throw InputError("--n is required");
    const int k = require_level();
    std::optional<int> top = o_.table_level;
    if (o_.state_path.empty() && !top) top = k;
    if (top) check_level(*top, "--table-level");
    const StateFunction f = table(top);
    r.json["n"] = *o_.n;
    r.json["level"] = k;
    r.json["exhaustive"] = o_.exhaustive;
    r.json["defect"] = centrality_defect(f, *o_.n, k, probes());
    return r;
  }

  Report gns_verify() const {
    Report r;
    const int k = o_.level.value_or(3);
    check_level(k, "--level");
    if (k > kMaxGnsLevel)
      throw InfeasibleError("gns-verify supports levels up to " + std::to_string(kMaxGnsLevel));
    const double threshold = tol(1e-8);
    const StateFunction f = table(k);
    try {
      const CanonicalConstruction c = canonical_construction(f);
      const ConstructionReport rep = verify_construction(f, c, o_.sample_pairs, o_.seed == 0 ? 1 : o_.seed);
      r.json["level"] = rep.level;
      r.json["gns_dimension"] = rep.gns_dimension;
      r.json["algebra_dimension"] = rep.algebra_dimension;
      r.json["pairs_checked"] = rep.pairs_checked;
      r.json["residuals"] = Json{{"reproduction", rep.reproduction},
                                 {"unitarity", rep.unitarity},
                                 {"j_squared", rep.standard.j_squared},
                                 {"j_isometry", rep.standard.j_isometry},
                                 {"j_fixes_xi", rep.standard.j_fixes_xi},
                                 {"commutant", rep.standard.commutant_distance},
                                 {"homomorphism", rep.homomorphism},
                                 {"left_right_commute", rep.left_right_commute},
                                 {"implements_ad", rep.implements_ad},
                                 {"center", rep.center_distance}};
      r.json["left_quasi_equivalent"] = rep.left_quasi_equivalent;
      const bool pass = rep.worst() <= threshold && rep.left_quasi_equivalent;
      r.json["threshold"] = threshold;
      r.json["pass"] = pass;
      r.status = pass ? 0 : 1;
    } catch (const NotPositiveError& e) {
      r.json["error"] = e.what();
      r.json["eigenvalue"] = e.eigenvalue();
      r.json["pass"] = false;
      r.status = 1;
    }
    return r;
  }

  Report induce_char() const {
    Report r;
    const Partition lambda = partition(o_.lambda, "--lambda");
    const Partition mu = partition(o_.mu, "--mu");
    const int m = lambda.weight() + mu.weight();
    if (m > kLevelCap) throw InfeasibleError("induction needs |lambda| + |mu| <= " + std::to_string(kLevelCap));
    const std::vector<std::int64_t> chi = induced_character(lambda, mu);
    const CharacterTable t = character_table(m);
    Json classes = Json::array();
    for (std::size_t c = 0; c < t.classes.size(); ++c)
      classes.push_back(Json{{"cycle_type", to_json(t.classes[c])}, {"value", chi[c]}});
    Json mult = Json::array();
    for (const auto& [nu, k] : induced_multiplicities(lambda, mu))
      mult.push_back(Json{{"nu", to_json(nu)}, {"multiplicity", k}});
    r.json["lambda"] = to_json(lambda);
    r.json["mu"] = to_json(mu);
    r.json["m"] = m;
    r.json["character"] = std::move(classes);
    r.json["multiplicities"] = std::move(mult);
    return r;
  }

 private:
  const Options& o_;
};

void emit(const Options& o, const std::string& command, Report& r) {
  std::string body;
  if (o.format == "json") {
    Json out = Json{{"command", command}};
    out.update(r.json);
    out["cache_hash"] = hex64(IrrepCache::global().hash());
    body = out.dump(2) + "\n";
  } else if (o.format == "csv") {
    if (r.csv.empty()) throw InputError("--format csv is only available for stability-profile");
    body = r.csv;
  } else {
    if (r.text.empty()) throw InputError("--format text is only available for psd-check");
    body = r.text + "\n";
  }
  if (o.output.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream out(o.output, std::ios::binary);
  if (!out) throw InputError(o.output + ": cannot write");
  out << body;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stable states of the infinite symmetric group at finite truncation"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;

  app.add_option("--level", o.level, "Truncation level K");
  app.add_option("--tol", o.tol, "Tolerance (command specific default)");
  app.add_option("--support-bounds", o.support_bounds, "Maximal alpha,beta support sizes for recovery (r,s)");
  app.add_option("--cache-dir", o.cache_dir, "Directory for persisted irrep matrices");
  app.add_option("--seed", o.seed, "Seed for randomized steps");
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_flag("--exhaustive-sweep", o.exhaustive, "Probe every subgroup element instead of generators");
  app.add_option("--jobs", o.jobs, "Worker threads for Fourier transforms")->check(CLI::PositiveNumber);
  app.add_flag("--allow-large-level", o.allow_large, "Lift the level cap of 8");
  app.add_option("-o,--output", o.output, "Write the report to a file instead of stdout");

  auto add_source = [&](CLI::App* sub) {
    sub->add_option("--state", o.state_path, "State file");
    sub->add_option("--spec", o.spec_path, "Canonical state spec file");
    sub->add_option("--params", o.params_path, "Thoma parameter file");
  };

  std::map<std::string, Report (Job::*)() const> handlers;
  auto command = [&](const std::string& name, const std::string& help, Report (Job::*fn)() const) {
    handlers[name] = fn;
    return app.add_subcommand(name, help);
  };

  auto* eval = command("eval-state", "Value table (or one value) of a state", &Job::eval_state);
  add_source(eval);
  eval->add_option("--perm", o.perm, "Single permutation, e.g. [[1,2]]");

  auto* cf = command("char-finite", "Irreducible character of S_n", &Job::char_finite);
  cf->add_option("--lambda", o.lambda, "Partition, e.g. [2,1]");
  cf->add_option("--perm", o.perm, "Single permutation");

  auto* ct = command("char-thoma", "Thoma character on the classes of S_K", &Job::char_thoma);
  ct->add_option("--params", o.params_path, "Thoma parameter file");
  ct->add_option("--perm", o.perm, "Single permutation");

  auto* dn = command("dual-norm", "Dual norm on C*(S_K)", &Job::dual_norm_report);
  add_source(dn);

  auto* psd = command("psd-check", "Positive definiteness via Fourier blocks", &Job::psd_check);
  add_source(psd);

  auto* asym = command("asymptotic-char", "Values along the shift sequence", &Job::asymptotic_char);
  add_source(asym);
  asym->add_option("--perm", o.perm, "Permutation g");
  asym->add_option("--last", o.last, "Last index m of the sequence");

  auto* rec = command("recover-params", "Fit Thoma parameters to cycle values", &Job::recover);
  rec->add_option("--values", o.values_path, "Cycle value file");

  auto* cls = command("classify", "Quasi-equivalence invariant of a state", &Job::classify_report);
  add_source(cls);

  auto* qe = command("quasi-equivalent", "Compare two canonical specs", &Job::quasi_equivalent_report);
  qe->add_option("--spec", o.spec_paths, "Spec file (twice)")->expected(1, 2);

  auto* sp = command("stability-profile", "Defect of the Ad-orbit map per m", &Job::stability_profile_report);
  add_source(sp);
  sp->add_option("--max-m", o.max_m, "Largest m (default K)");
  sp->add_option("--table-level", o.table_level, "Level at which spec/params are tabulated");

  auto* cd = command("centrality-defect", "Partial centrality defect at depth n", &Job::centrality_defect_report);
  add_source(cd);
  cd->add_option("--n", o.n, "Depth n");
  cd->add_option("--table-level", o.table_level, "Level at which spec/params are tabulated");

  auto* gv = command("gns-verify", "GNS, standard form and biregular checks", &Job::gns_verify);
  add_source(gv);
  gv->add_option("--sample-pairs", o.sample_pairs, "Random pair samples (0 = full sweep)");

  auto* ic = command("induce-char", "Character induced from S_n x S_{m-n}", &Job::induce_char);
  ic->add_option("--lambda", o.lambda, "Partition for S_n");
  ic->add_option("--mu", o.mu, "Partition for S_{m-n}");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  const std::string name = app.get_subcommands().front()->get_name();
  try {
    if (!o.cache_dir.empty()) IrrepCache::global().set_directory(std::filesystem::path(o.cache_dir));
    const Job job(o);
    Report r = (job.*handlers.at(name))();
    emit(o, name, r);
    return r.status;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InfeasibleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
