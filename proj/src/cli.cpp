#include "colnum/cli.hpp"

#include <openssl/evp.h>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "colnum/acceptance.hpp"
#include "colnum/bounds.hpp"
#include "colnum/casecheck.hpp"
#include "colnum/io.hpp"
#include "colnum/lp.hpp"
#include "colnum/model.hpp"
#include "colnum/numtheory.hpp"
#include "colnum/oracle.hpp"
#include "colnum/reduction.hpp"

namespace colnum::cli {

using io::json;

std::string sha256_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr);
  char buf[1 << 16];
  while (in.read(buf, sizeof buf) || in.gcount() > 0) EVP_DigestUpdate(ctx, buf, static_cast<size_t>(in.gcount()));
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_DigestFinal_ex(ctx, md, &len);
  EVP_MD_CTX_free(ctx);
  std::ostringstream hex;
  for (unsigned i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return hex.str();
}

namespace {

struct Context {
  std::ostream& out;
  std::ostream& err;
  std::vector<std::string> artifacts;
  std::map<std::string, std::string> params;

  // Writes text to path, or to out when path is empty or "-".
  void emit(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
      out << text;
      return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << text;
    f.close();
    artifacts.push_back(path);
  }
};

Rational rational_arg(const std::string& s) { return parse_rational(s); }

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  return json::parse(in);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Column-number bounds for generic Delta-modular matrices with two rows", "colnum"};
  app.require_subcommand(1);
  std::string manifest;
  unsigned jobs = 1;
  bool timing = false;
  app.add_option("--manifest", manifest, "Write a run manifest with checksums of emitted files");
  app.add_option("--jobs", jobs, "Thread budget")->check(CLI::PositiveNumber);
  app.add_flag("--timing", timing, "Record wall-clock times in data files");

  // numtheory check-lemma21
  auto* numtheory = app.add_subcommand("numtheory", "Totient sums");
  numtheory->require_subcommand(1);
  auto* window_cmd = numtheory->add_subcommand("check-lemma21", "Two-sided totient-sum windows for each x");
  std::string l_eps = "0.001", l_out;
  std::int64_t l_from = 1880, l_to = 5000;
  window_cmd->add_option("--eps", l_eps);
  window_cmd->add_option("--from", l_from);
  window_cmd->add_option("--to", l_to);
  window_cmd->add_option("--out", l_out, "CSV path (default stdout)");

  auto* fam = app.add_subcommand("family", "Extremal families F1, F2, F3");
  std::string f_kind, f_emit = "summary", f_out;
  std::int64_t f_delta = 0;
  fam->add_option("--kind", f_kind)->required()->check(CLI::IsMember({"F1", "F2", "F3"}));
  fam->add_option("--delta", f_delta)->required();
  fam->add_option("--emit", f_emit)->check(CLI::IsMember({"columns", "summary"}));
  fam->add_option("--out", f_out);

  auto* red = app.add_subcommand("reduce", "Reduce a generic column set to a typed matrix");
  std::string r_in, r_out;
  std::int64_t r_delta = 0;
  red->add_option("--input", r_in)->required();
  red->add_option("--delta", r_delta)->required();
  red->add_option("--output", r_out);

  auto* zm = app.add_subcommand("zm", "Exact value of the LP or of its approximate dual");
  std::int64_t z_m = 0;
  std::string z_mode = "exact", z_eps = "1.85", z_emit;
  zm->add_option("--m", z_m)->required()->check(CLI::PositiveNumber);
  zm->add_option("--mode", z_mode)->check(CLI::IsMember({"exact", "approx"}));
  zm->add_option("--eps-num", z_eps, "eps = eps-num / m");
  zm->add_option("--emit", z_emit, "Write the dual certificate as JSON");

  auto* sw = app.add_subcommand("sweep", "Certify z_m <= w over a range of m");
  std::int64_t s_from = 4, s_to = 500;
  std::string s_w = "0.999", s_out;
  sw->add_option("--from", s_from);
  sw->add_option("--to", s_to);
  sw->add_option("--w", s_w);
  sw->add_option("--out", s_out);

  auto* an = app.add_subcommand("analytic", "Three-rectangle dual certificate");
  std::int64_t a_m = 3257;
  std::string a_c = "4.96", a_emit;
  an->add_option("--m", a_m);
  an->add_option("--c", a_c, "C = c / m^2");
  an->add_option("--emit", a_emit);

  auto* th = app.add_subcommand("threshold", "Final threshold inequality in Delta");
  std::int64_t t_delta = 0;
  std::string t_w = "0.999";
  th->add_option("--delta", t_delta)->required();
  th->add_option("--w", t_w);

  auto* cl = app.add_subcommand("claims", "Residue-system checks for types 2 and 3");
  std::string c_which, c_out;
  int c_d = 4;
  std::vector<std::string> c_relax;
  cl->add_option("--which", c_which)->required()->check(CLI::IsMember({"type2", "type3"}));
  cl->add_option("--d", c_d)->check(CLI::IsMember({3, 4}));
  cl->add_option("--relax", c_relax, "delta2 | a2 | b2")->check(CLI::IsMember({"delta2", "a2", "b2"}));
  cl->add_option("--out", c_out);

  auto* orc = app.add_subcommand("oracle", "Exhaustive search over typed matrices");
  std::int64_t o_delta = 0, o_m = 0, o_window = 0;
  bool o_large = false, o_no_norm = false;
  std::string o_emit;
  orc->add_option("--delta", o_delta)->required();
  orc->add_option("--m-max", o_m);
  orc->add_option("--window", o_window);
  orc->add_flag("--allow-large", o_large);
  orc->add_flag("--no-normalize", o_no_norm);
  orc->add_option("--emit", o_emit);

  auto* va = app.add_subcommand("verify-all", "Run the acceptance suite");
  bool v_quick = false;
  va->add_flag("--quick", v_quick, "Skip the extended sweep to m = 3257");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  Context ctx{out, err, {}, {}};
  for (const auto& a : args) ctx.params["argv"] += (ctx.params["argv"].empty() ? "" : " ") + a;
  auto start = std::chrono::steady_clock::now();
  int code = kOk;
  std::string command;

  try {
    if (*numtheory) {
      command = "numtheory check-lemma21";
      if (l_from < 1 || l_to < l_from) throw std::invalid_argument("need 1 <= from <= to");
      auto rows = nt::window_scan(l_from, l_to, rational_arg(l_eps));
      std::ostringstream csv;
      io::write_window_csv(csv, rows);
      ctx.emit(l_out, csv.str());
      for (const auto& r : rows)
        if (!r.pass()) code = kVerificationFailed;
    } else if (*fam) {
      command = "family";
      TypedMatrix M = family(parse_family(f_kind), f_delta);
      if (f_emit == "columns") {
        ctx.emit(f_out, io::to_json(enumerate_columns(M)).dump() + "\n");
      } else {
        ColumnSet cols = enumerate_columns(M);
        json j{{"kind", f_kind},
               {"delta", f_delta},
               {"matrix", io::to_json(M)},
               {"column_count", column_count(M)},
               {"delta_endpoints", delta_endpoints(M)},
               {"generic", is_generic(cols)}};
        ctx.emit(f_out, j.dump(2) + "\n");
      }
    } else if (*red) {
      command = "reduce";
      ColumnSet A = io::column_set_from_json(read_json_file(r_in));
      try {
        TypedMatrix M = reduce(A, r_delta);
        json j = io::to_json(M);
        ctx.emit(r_out, j.dump() + "\n");
      } catch (const PreconditionError& e) {
        err << "precondition violated: " << e.what() << "\n";
        code = kVerificationFailed;
      }
    } else if (*zm) {
      command = "zm";
      lp::DualCertificate cert;
      Rational value;
      if (z_mode == "exact") {
        if (z_m <= 40) {
          lp::RationalLP dual = lp::build_dual(z_m);
          lp::LpSolution sol = lp::solve(dual);
          value = sol.value;
          cert = lp::certificate_from_dual(z_m, dual, sol);
        } else {
          value = lp::z_value(z_m);
        }
      } else {
        Rational eps = rational_arg(z_eps) / Rational(z_m);
        lp::ApproxDualResult r = lp::solve_approx_dual(z_m, eps);
        if (r.status != lp::Status::Optimal) {
          err << "approximate dual is " << lp::status_name(r.status) << "\n";
          return kVerificationFailed;
        }
        value = r.value;
        cert = r.certificate;
      }
      out << to_string(value) << "\n" << "~" << to_decimal(value) << " (approximate)\n";
      if (!z_emit.empty()) {
        if (cert.m == 0) throw std::invalid_argument("--emit in exact mode needs m <= 40");
        ctx.emit(z_emit, io::to_json(cert).dump() + "\n");
      }
    } else if (*sw) {
      command = "sweep";
      if (s_from < 4 || s_to < s_from) throw std::invalid_argument("need 4 <= from <= to");
      bounds::SweepReport rep = bounds::sweep(s_from, s_to, rational_arg(s_w), {}, jobs);
      std::ostringstream csv;
      io::write_sweep_csv(csv, rep, timing);
      if (s_out.empty()) {
        out << csv.str();
      } else {
        ctx.emit(s_out, csv.str());
      }
      err << (rep.passed() ? "certified" : "FAILED") << " m in [" << s_from << ", " << s_to << "], " << rep.solves
          << " LP solves";
      if (!rep.passed()) {
        err << ", failures at";
        for (auto m : rep.failures) err << " " << m;
      }
      err << "\n";
      if (!rep.passed()) code = kVerificationFailed;
    } else if (*an) {
      command = "analytic";
      Rational C = rational_arg(a_c) / Rational(a_m * a_m);
      bounds::AnalyticReport rep = bounds::analyze_certificate(a_m, C);
      out << (rep.feasible() ? "feasible" : "infeasible") << "\n"
          << "objective " << to_string(rep.objective) << "\n"
          << "~" << to_decimal(rep.objective) << " (approximate)\n";
      if (!a_emit.empty()) ctx.emit(a_emit, io::to_json(bounds::analytic_certificate(a_m, C)).dump() + "\n");
      if (!rep.feasible()) code = kVerificationFailed;
    } else if (*th) {
      command = "threshold";
      bool ok = bounds::verify_threshold(t_delta, rational_arg(t_w));
      out << (ok ? "true" : "false") << "\n";
      if (!ok) code = kVerificationFailed;
    } else if (*cl) {
      command = "claims";
      casecheck::Report rep;
      bool relax_delta = false, relax_a2 = false, relax_b2 = false;
      for (const auto& r : c_relax) {
        relax_delta |= r == "delta2";
        relax_a2 |= r == "a2";
        relax_b2 |= r == "b2";
      }
      if (c_which == "type2") {
        if (relax_delta || relax_a2) throw std::invalid_argument("type2 can only relax b2");
        rep = casecheck::check_type2({.b2_odd = !relax_b2});
      } else {
        rep = casecheck::check_type3(c_d, {.admit_delta_2 = relax_delta, .a2_odd = !relax_a2, .b2_odd = !relax_b2});
      }
      ctx.emit(c_out, io::to_json(rep).dump(2) + "\n");
      if (c_relax.empty() && rep.solutions_found > 0) code = kVerificationFailed;
    } else if (*orc) {
      command = "oracle";
      oracle::SearchConfig cfg{.delta = o_delta,
                               .m_max = o_m,
                               .window = o_window,
                               .normalize_a1 = !o_no_norm,
                               .allow_large = o_large,
                               .jobs = jobs};
      oracle::SearchResult r = oracle::best_typed_matrix(cfg);
      json j{{"delta", o_delta},
             {"count", r.count},
             {"witness", io::to_json(r.witness)},
             {"nodes_explored", r.nodes_explored},
             {"note", "maximum over typed matrices M(a,b) only; not asserted to equal g(Delta,2)"}};
      out << j.dump(2) << "\n";
      if (!o_emit.empty()) ctx.emit(o_emit, io::to_json(r.witness).dump() + "\n");
    } else if (*va) {
      command = "verify-all";
      acceptance::Options opt{.jobs = jobs, .extended_sweep = !v_quick};
      auto results = acceptance::run_all(opt, [&](const acceptance::Outcome& o) { err << acceptance::format(o) << "\n"; });
      json crit = json::array();
      bool all = true;
      for (const auto& o : results) {
        crit.push_back({{"id", o.id}, {"name", o.name}, {"passed", o.passed}, {"detail", o.detail}});
        all = all && o.passed;
      }
      out << json{{"verdict", all ? "pass" : "fail"}, {"criteria", crit}}.dump(2) << "\n";
      if (!all) code = kVerificationFailed;
    }
  } catch (const GuardError& e) {
    err << "internal guard tripped: " << e.what() << "\n";
    return kGuard;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kGuard;
  }

  if (!manifest.empty()) {
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    json arts = json::array();
    for (const auto& p : ctx.artifacts) arts.push_back({{"path", p}, {"sha256", sha256_file(p)}});
    json j{{"command", command}, {"parameters", ctx.params}, {"artifacts", arts}, {"wall_ms", ms}, {"exit_code", code}};
    std::ofstream f(manifest);
    f << j.dump(2) << "\n";
  }
  return code;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace colnum::cli
