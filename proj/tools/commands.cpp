#include "commands.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "superholonomy/errors.hpp"
#include "superholonomy/graded_phase.hpp"
#include "superholonomy/moduli.hpp"
#include "superholonomy/osp_group.hpp"
#include "superholonomy/random.hpp"
#include "superholonomy/sectors.hpp"
#include "superholonomy/superlie.hpp"

namespace superholonomy::cli {

namespace {

std::string num(double x) { return Json(x).dump(); }

void validate(const RunConfig& cfg) {
  if (cfg.m < 1 || cfg.n < 1) throw UsageError("--m and --n must be at least 1");
  if (cfg.m + 2 * cfg.n > 8) throw UsageError("m + 2n must not exceed 8");
  if (cfg.N < 0 || cfg.N > kMaxGenerators) throw UsageError("--N must lie in 0..16");
  if (!(cfg.tol > 0.0)) throw UsageError("--tol must be positive");
  if (cfg.samples < 0) throw UsageError("--samples must be non-negative");
}

std::string group_name(int m, int n) {
  return "osp(" + std::to_string(m) + "|" + std::to_string(2 * n) + ")";
}

SuperAlgebra algebra_for(const RunConfig& cfg) {
  return cfg.m == 1 && cfg.n == 1 ? alg_build_osp12() : alg_build_osp(cfg.m, cfg.n);
}

struct Direction {
  std::string name;
  Eigen::VectorXd c;
};

std::vector<Direction> abelian_directions(const SuperAlgebra& alg) {
  std::vector<Direction> out;
  if (alg.rep_m() == 1 && alg.rep_n() == 2 && alg.osp12_fit()) {
    const auto s = osp12_sigma();
    const std::pair<const char*, Eigen::Matrix2d> dirs[] = {
        {"sigma_0", s[0]}, {"sigma_1", s[1]}, {"sigma_plus", sigma_plus()}};
    for (const auto& [name, sigma] : dirs) {
      Eigen::MatrixXd x = Eigen::MatrixXd::Zero(3, 3);
      x.bottomRightCorner(2, 2) = sigma;
      out.push_back({name, alg_real_coefficients(alg, x)});
    }
    return out;
  }
  for (int i : alg.even_indices()) {
    Eigen::VectorXd c = Eigen::VectorXd::Zero(alg.dim());
    c(i) = 1.0;
    out.push_back({alg.label(i), c});
  }
  return out;
}

void flatten(const Json& j, const std::string& prefix, std::ostream& os) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), os);
    }
  } else if (j.is_array() && !j.empty() && j.front().is_object()) {
    for (size_t i = 0; i < j.size(); ++i) os << prefix << "[" << i << "]=" << j[i].dump() << "\n";
  } else {
    os << prefix << "=" << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

}  // namespace

CommandResult cmd_jacobi(const RunConfig& cfg) {
  validate(cfg);
  const SuperAlgebra alg = alg_build_osp(cfg.m, cfg.n);
  const JacobiReport rep = alg_check_jacobi(alg, cfg.tol);
  CommandResult r;
  r.json = {{"command", "jacobi"},
            {"group", group_name(cfg.m, cfg.n)},
            {"dim_even", alg.even_indices().size()},
            {"dim_odd", alg.odd_indices().size()},
            {"tol", cfg.tol},
            {"jacobi", to_json(rep)}};
  r.exit_code = rep.pass ? kPass : kFail;
  r.summary = "jacobi " + group_name(cfg.m, cfg.n) + " residual=" + num(rep.max_residual) +
              (rep.pass ? " PASS" : " FAIL");
  return r;
}

CommandResult cmd_membership(const RunConfig& cfg) {
  validate(cfg);
  const SuperAlgebra alg = alg_build_osp(cfg.m, cfg.n);
  const int samples = cfg.samples > 0 ? cfg.samples : 1000;
  double worst_product = 0.0, worst_inverse = 0.0, worst_conj = 0.0;
  for (int i = 0; i < samples; ++i) {
    Rng rng(sample_seed(cfg.seed, i));
    const SuperMatrix x = sample_member(alg, cfg.N, rng);
    const SuperMatrix y = sample_member(alg, cfg.N, rng);
    const SuperMatrix xinv = sm_inverse(x);
    worst_product = std::max(worst_product, grp_membership_residual(x * y));
    worst_inverse = std::max(worst_inverse, grp_membership_residual(xinv));
    worst_conj = std::max(worst_conj, grp_membership_residual(x * y * xinv));
  }
  const double worst = std::max({worst_product, worst_inverse, worst_conj});
  CommandResult r;
  r.exit_code = worst <= cfg.tol ? kPass : kFail;
  r.json = {{"command", "membership"},
            {"group", group_name(cfg.m, cfg.n)},
            {"N", cfg.N},
            {"samples", samples},
            {"seed", cfg.seed},
            {"tol", cfg.tol},
            {"max_residual", {{"product", worst_product}, {"inverse", worst_inverse},
                              {"conjugation", worst_conj}}},
            {"pass", r.exit_code == kPass}};
  r.summary = "membership " + group_name(cfg.m, cfg.n) + " samples=" + std::to_string(samples) +
              " max_residual=" + num(worst) + (r.exit_code == kPass ? " PASS" : " FAIL");
  return r;
}

CommandResult cmd_sectors(const RunConfig& cfg) {
  validate(cfg);
  CommandResult r;
  if (cfg.m == 2 && cfg.n == 1) {
    const Osp22Report rep = mod_osp22_partial_report();
    const bool pass = rep.max_det_error <= cfg.tol && rep.so2_moduli == 4 &&
                      rep.so2_bruteforce_moduli == 4;
    r.json = to_json(rep);
    r.json["pass"] = pass;
    r.exit_code = pass ? kPass : kFail;
    r.summary = "partial osp(2|2): det formula max_error=" + num(rep.max_det_error) +
                " so2xso2 moduli=" + std::to_string(rep.so2_moduli) + (pass ? " PASS" : " FAIL");
    return r;
  }
  if (cfg.m != 1 || cfg.n != 1) {
    throw UsageError("sectors are classified for osp(1|2) only (osp(2|2) gives a partial report)");
  }
  const SectorReport rep = mod_enumerate_sectors_osp12(cfg.N);
  bool counts_ok = rep.bosonic_sectors == 36 && rep.fermionic_sectors == 4;
  bool moduli_ok = true, closed_form_ok = true, reps_ok = true, gauge_ok = true;
  for (const auto& s : rep.sectors) {
    if (s.fermionic && s.moduli != 2) moduli_ok = false;
    if (s.closed_form_moduli >= 0 && s.closed_form_moduli != s.moduli) closed_form_ok = false;
    const HolonomyPair& p = s.representative;
    if (!grp_is_member(p.U1, cfg.tol) || !grp_is_member(p.U2, cfg.tol) ||
        commutator_residual(p.U1, p.U2) > cfg.tol) {
      reps_ok = false;
    }
    bool fixed = false;
    try {
      const auto g = mod_gauge_fix_pair(p.U1, p.U2);
      fixed = g.first.chi().max_abs() <= cfg.tol && g.second.chi().max_abs() <= cfg.tol;
    } catch (const SingularAhatError&) {
      fixed = false;
    }
    if (fixed == s.fermionic) gauge_ok = false;
  }
  const bool pass = counts_ok && moduli_ok && closed_form_ok && reps_ok && gauge_ok;
  r.json = to_json(rep);
  r.json["checks"] = {{"counts", counts_ok},
                      {"fermionic_moduli", moduli_ok},
                      {"closed_form_agrees", closed_form_ok},
                      {"representatives", reps_ok},
                      {"gauge_fixing", gauge_ok}};
  r.json["pass"] = pass;
  r.exit_code = pass ? kPass : kFail;
  r.summary = "bosonic=" + std::to_string(rep.bosonic_sectors) +
              " fermionic=" + std::to_string(rep.fermionic_sectors) + (pass ? " PASS" : " FAIL");
  return r;
}

CommandResult cmd_moduli(const RunConfig& cfg) {
  validate(cfg);
  const int samples = cfg.samples > 0 ? cfg.samples : 50;
  int agree = 0;
  Json list = Json::array();
  for (int i = 0; i < samples; ++i) {
    Rng rng(sample_seed(cfg.seed, i));
    const BodyPair bp = random_commuting_body_pair(cfg.m, cfg.n, rng);
    const Ahat ah = mod_ahat(bp.a0, bp.A0);
    int closed = -1;
    try {
      closed = mod_fermionic_moduli_count(bp.a0, bp.b0, bp.A0, bp.B0);
    } catch (const HypothesisError&) {
      closed = -1;
    }
    const BruteForceCount bf = mod_fermionic_moduli_bruteforce(bp.a0, bp.b0, bp.A0, bp.B0);
    const bool ok = closed == bf.moduli();
    agree += ok ? 1 : 0;
    list.push_back({{"kind", bp.kind}, {"rank", ah.rank}, {"closed_form", closed},
                    {"bruteforce", bf.moduli()}, {"solution_dim", bf.solution_dim},
                    {"orbit_dim", bf.orbit_dim}, {"agree", ok}});
  }
  CommandResult r;
  r.exit_code = agree == samples ? kPass : kFail;
  r.json = {{"command", "moduli"}, {"group", group_name(cfg.m, cfg.n)}, {"samples", samples},
            {"seed", cfg.seed}, {"agree", agree}, {"pairs", list},
            {"pass", r.exit_code == kPass}};
  r.summary = "moduli " + group_name(cfg.m, cfg.n) + ": " + std::to_string(agree) + "/" +
              std::to_string(samples) + " agree" + (r.exit_code == kPass ? " PASS" : " FAIL");
  return r;
}

CommandResult cmd_closure(const RunConfig& cfg) {
  validate(cfg);
  SuperAlgebra alg = algebra_for(cfg);
  if (cfg.tamper) {
    const int a = alg.even_indices()[0], b = alg.odd_indices()[0];
    int k = alg.odd_indices()[0];
    for (int c : alg.odd_indices())
      if (alg.f(a, b, c) != 0.0) k = c;
    alg = alg.with_perturbed_constant(a, b, k, 0.1);
  }
  const ClosureReport rep = sp_check_closure(alg, cfg.tol);
  Json dirs = Json::array();
  std::ostringstream lines;
  for (const auto& d : abelian_directions(alg)) {
    const EfmReport e = sp_efm(alg, d.c);
    Json j = to_json(e);
    j["direction"] = d.name;
    dirs.push_back(j);
    lines << "\n  " << d.name << " det=" << num(e.det + 0.0) << " rank=" << e.rank
          << " moduli=" << e.moduli;
  }
  CommandResult r;
  r.exit_code = rep.pass ? kPass : kFail;
  r.json = {{"command", "closure"}, {"group", group_name(cfg.m, cfg.n)}, {"tol", cfg.tol},
            {"tampered", cfg.tamper}, {"closure", to_json(rep, alg)}, {"sectors", dirs}, {"pass", rep.pass}};
  r.summary = "closure " + group_name(cfg.m, cfg.n) + " residual=" + num(rep.max_residual) +
              " lambda=" + num(rep.lambda) + (rep.pass ? " PASS" : " FAIL") + lines.str();
  return r;
}

CommandResult cmd_report(const RunConfig& cfg) {
  validate(cfg);
  RunConfig osp12 = cfg;
  osp12.m = 1;
  osp12.n = 1;
  const std::pair<const char*, CommandResult> parts[] = {
      {"jacobi", cmd_jacobi(cfg)},       {"membership", cmd_membership(cfg)},
      {"sectors", cmd_sectors(osp12)},   {"moduli", cmd_moduli(cfg)},
      {"closure", cmd_closure(cfg)}};
  CommandResult r;
  r.json = Json::object();
  r.json["command"] = "report";
  for (const auto& [name, part] : parts) {
    r.json[name] = part.json;
    r.summary += (r.summary.empty() ? "" : "\n") + part.summary;
    if (part.exit_code != kPass) r.exit_code = kFail;
  }
  r.json["pass"] = r.exit_code == kPass;
  return r;
}

CommandResult dispatch(const RunConfig& cfg) {
  if (cfg.command == "jacobi") return cmd_jacobi(cfg);
  if (cfg.command == "membership") return cmd_membership(cfg);
  if (cfg.command == "sectors") return cmd_sectors(cfg);
  if (cfg.command == "moduli") return cmd_moduli(cfg);
  if (cfg.command == "closure") return cmd_closure(cfg);
  if (cfg.command == "report") return cmd_report(cfg);
  throw UsageError("unknown command '" + cfg.command + "'");
}

std::string render(const CommandResult& r, const std::string& format) {
  if (format == "json") return r.json.dump(2) + "\n";
  std::ostringstream os;
  os << r.summary << "\n";
  flatten(r.json, "", os);
  return os.str();
}

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Grassmann supermatrices, OSp(m|2n) holonomies and graded phase-space checks"};
  RunConfig cfg;
  app.add_option("command", cfg.command, "jacobi | membership | sectors | moduli | closure | report")
      ->required()
      ->check(CLI::IsMember({"jacobi", "membership", "sectors", "moduli", "closure", "report"}));
  app.add_option("--m", cfg.m, "even block size m");
  app.add_option("--n", cfg.n, "odd block is 2n");
  app.add_option("--N", cfg.N, "number of Grassmann generators");
  app.add_option("--tol", cfg.tol, "tolerance");
  app.add_option("--samples", cfg.samples, "random samples (0 = command default)");
  auto* seed_opt = app.add_option("--seed", cfg.seed, "seed for randomized sweeps");
  app.add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", cfg.out, "write the report to this file");
  app.add_flag("--tamper", cfg.tamper, "perturb a structure constant (closure check must fail)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kPass;
    }
    err << e.what() << "\n";
    return kUsage;
  }
  if (seed_opt->count() == 0) {
    if (const char* env = std::getenv("SUPERHOLONOMY_SEED"); env && *env) {
      try {
        size_t used = 0;
        cfg.seed = std::stoull(env, &used);
        if (used != std::string(env).size()) throw std::invalid_argument("trailing characters");
      } catch (const std::exception&) {
        err << "SUPERHOLONOMY_SEED must be an unsigned integer\n";
        return kUsage;
      }
    }
  }

  CommandResult result;
  try {
    result = dispatch(cfg);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kFail;
  }
  const std::string text = render(result, cfg.format);
  if (cfg.out.empty()) {
    out << text;
  } else {
    std::ofstream f(cfg.out);
    if (!f) {
      err << "cannot open " << cfg.out << "\n";
      return kUsage;
    }
    f << text;
    out << result.summary << "\n";
  }
  return result.exit_code;
}

}  // namespace superholonomy::cli
