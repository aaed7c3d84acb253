#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "zlocus/classic.hpp"
#include "zlocus/limitset.hpp"
#include "zlocus/report.hpp"
#include "zlocus/seqcore.hpp"
#include "zlocus/theorems.hpp"

using namespace zlocus;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPrecondition = 2;
constexpr int kExitNotConverged = 3;
constexpr int kExitViolation = 4;

/// Relative coefficient tolerance for the closed-form cross-check with irrational roots.
constexpr double kClosedFormTolerance = 1e-10;
/// Slack for annulus --check.
constexpr double kAnnulusSlack = 1e-8;

struct Options {
  std::string quad;
  std::optional<int> m;
  std::string ms;
  std::optional<int> m_max;
  std::string format;  ///< empty: command default
  std::string out;
  SolverConfig solver;
  bool check = false;
  bool explore = false;
  bool midpoint = false;
  bool is_signed = false;
  std::string n_list;
  std::string coeffs;
};

std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    parts.push_back(text.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return parts;
}

std::vector<int> parse_int_list(const std::string& text, const char* flag) {
  std::vector<int> out;
  for (const auto& part : split(text)) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != part.size())
      throw Error(ErrorCode::InvalidArgument, std::string(flag) + ": '" + part + "' is not an integer");
    out.push_back(value);
  }
  return out;
}

QuadraticGF<Rational> parse_quad(const std::string& text) {
  if (text.empty()) throw Error(ErrorCode::InvalidArgument, "--quad a,b,c is required");
  const auto parts = split(text);
  if (parts.size() != 3) throw Error(ErrorCode::InvalidArgument, "--quad needs exactly three values a,b,c");
  return {parse_rational(parts[0]), parse_rational(parts[1]), parse_rational(parts[2])};
}

/// Resolves --m / --ms / --m-max. --m-max N means `first`..N.
std::vector<int> resolve_ladder(const Options& o, int first) {
  const int given = (o.m ? 1 : 0) + (o.ms.empty() ? 0 : 1) + (o.m_max ? 1 : 0);
  if (given != 1) throw Error(ErrorCode::InvalidArgument, "give exactly one of --m, --ms, --m-max");
  std::vector<int> ladder;
  if (o.m) ladder = {*o.m};
  else if (!o.ms.empty()) ladder = parse_int_list(o.ms, "--ms");
  else
    for (int k = first; k <= *o.m_max; ++k) ladder.push_back(k);
  if (ladder.empty()) throw Error(ErrorCode::InvalidArgument, "empty m ladder");
  for (int k : ladder)
    if (k < 0) throw Error(ErrorCode::InvalidArgument, "m must be >= 0");
  return ladder;
}

void require_format(const Options& o, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (o.format == f) return;
  throw Error(ErrorCode::InvalidArgument, "format '" + o.format + "' is not available for this command");
}

unsigned thread_budget() {
  unsigned threads = std::max(1U, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("ZLOCUS_THREADS")) {
    const int cap = std::atoi(env);
    if (cap > 0) threads = std::min(threads, static_cast<unsigned>(cap));
  }
  return threads;
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    std::cout.flush();
    return;
  }
  std::ofstream file(o.out, std::ios::binary);
  if (!file) throw Error(ErrorCode::InvalidArgument, "cannot open " + o.out);
  file << text;
  if (!text.empty() && text.back() != '\n') file << '\n';
}

std::string int_list_json(const std::vector<int>& xs) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
  return out + "]";
}

bool all_converged(const std::vector<LabelledRoots>& sets) {
  for (const auto& s : sets)
    if (!s.roots.empty() && !s.roots.converged) return false;
  return true;
}

int not_converged_exit() {
  std::cerr << "error: SolverNotConverged: root solve did not converge\n";
  return kExitNotConverged;
}

std::string roots_output(const Options& o, const std::vector<LabelledRoots>& sets, double radius,
                         const std::string& title_prefix) {
  if (o.format == "csv") return roots_csv(sets);
  if (o.format == "json") return roots_json(sets);
  std::vector<SvgPanel> panels;
  for (const auto& s : sets) panels.push_back({title_prefix + std::to_string(s.m), s, radius});
  return render_svg(panels);
}

int cmd_expand(const Options& o) {
  require_format(o, {"json"});
  const auto q = parse_quad(o.quad);
  Options listing = o;
  if (listing.m) listing.m_max = std::exchange(listing.m, std::nullopt);
  const auto ladder = resolve_ladder(listing, 0);
  const int top = *std::max_element(ladder.begin(), ladder.end());
  const auto seq = expand_recurrence(q, top);

  if (o.check) {
    if (is_zero(q.a) || is_zero(q.c) || is_zero(discriminant(q))) {
      std::cerr << "note: closed form needs a != 0, c != 0 and distinct roots; cross-check skipped\n";
    } else if (rational_roots(q)) {
      const auto closed = expand_closed_form_exact(q, top);
      for (int m : ladder)
        if (!(closed[m] == seq[m]))
          throw Error(ErrorCode::OracleMismatch, "closed form differs from recurrence at m = " + std::to_string(m));
    } else {
      const auto closed = expand_closed_form(to_double(q), top);
      for (int m : ladder)
        if (relative_coeff_distance(closed[m], seq[m]) > kClosedFormTolerance)
          throw Error(ErrorCode::OracleMismatch, "closed form differs from recurrence at m = " + std::to_string(m));
    }
  }

  std::vector<Polynomial<Rational>> picked;
  for (int m : ladder) picked.push_back(seq[m]);
  emit(o, "{\"m\":" + int_list_json(ladder) + ",\"coefficients\":" + coefficients_json(picked) + "}");
  return kExitOk;
}

std::string poly_json(const Polynomial<Rational>& p) {
  const std::string list = coefficients_json(std::vector<Polynomial<Rational>>{p});
  return list.substr(1, list.size() - 2);
}

std::vector<LabelledRoots> label(const std::vector<int>& ladder, std::vector<RootSet> sets) {
  std::vector<LabelledRoots> out;
  for (std::size_t i = 0; i < ladder.size(); ++i) out.push_back({ladder[i], std::move(sets[i])});
  return out;
}

int cmd_roots(const Options& o) {
  require_format(o, {"csv", "json", "svg"});
  const auto q = parse_quad(o.quad);
  const auto ladder = resolve_ladder(o, 1);
  const auto sets = label(ladder, solve_sequence(q, ladder, o.solver, thread_budget()));
  const double radius = (is_zero(q.a) || is_zero(q.c)) ? 0.0 : predicted_radius(q);
  emit(o, roots_output(o, sets, radius, "m = "));
  return all_converged(sets) ? kExitOk : not_converged_exit();
}

int cmd_verify(const Options& o) {
  require_format(o, {"json"});
  const auto q = parse_quad(o.quad);
  const auto ladder = resolve_ladder(o, 1);
  const int top = *std::max_element(ladder.begin(), ladder.end());
  const unsigned threads = thread_budget();
  const auto wanted = [&](int m) { return std::find(ladder.begin(), ladder.end(), m) != ladder.end(); };

  if (o.midpoint) {
    MidpointReport report = midpoint_exclusion(q, top, o.solver, threads);
    emit(o, midpoint_json(report));
    return kExitOk;
  }
  if (o.explore) {
    std::vector<ExplorationEntry> entries;
    for (auto& e : explore_disk(q, top, o.solver, threads))
      if (wanted(e.m)) entries.push_back(e);
    emit(o, exploration_json(entries));
    return kExitOk;
  }
  const TheoremCase c = classify_case(q);
  if (c != TheoremCase::InsideClosedDisk && c != TheoremCase::OutsideClosedDisk)
    throw Error(ErrorCode::WrongCase, "no proven disk statement for case " + std::string(to_string(c)) +
                                          "; use --explore for root moduli");
  std::vector<DiskVerdict> verdicts;
  bool ok = true;
  for (auto& v : verify_disk(q, top, o.solver, threads))
    if (wanted(v.m)) {
      ok = ok && v.satisfied;
      verdicts.push_back(v);
    }
  emit(o, verdicts_json(verdicts));
  if (!ok) {
    std::cerr << "error: disk statement violated\n";
    return kExitViolation;
  }
  return kExitOk;
}

int cmd_limit(const Options& o) {
  require_format(o, {"csv", "json", "svg"});
  const auto q = parse_quad(o.quad);
  const auto ladder = resolve_ladder(o, 1);
  const unsigned threads = thread_budget();
  if (o.format == "json") {
    const LimitReport report = convergence_report(q, ladder, o.solver, threads);
    emit(o, limit_report_json(report));
    if (!report.consistent) {
      std::cerr << "error: classifier and Hausdorff metric disagree\n";
      return kExitViolation;
    }
    return kExitOk;
  }
  const double radius = limit_circle(q);
  const auto sets = label(ladder, solve_sequence(q, ladder, o.solver, threads));
  emit(o, roots_output(o, sets, radius, "m = "));
  return all_converged(sets) ? kExitOk : not_converged_exit();
}

int cmd_szego(const Options& o) {
  require_format(o, {"csv", "json", "svg"});
  if (o.n_list.empty()) throw Error(ErrorCode::InvalidArgument, "--n is required");
  const auto ns = parse_int_list(o.n_list, "--n");
  std::vector<LabelledRoots> sets;
  bool inside = true;
  for (int n : ns) {
    SzegoDemo demo = szego_demo(n, o.solver);
    for (const auto& z : demo.roots.roots)
      inside = inside && std::abs(z) >= demo.annulus.r_min - kAnnulusSlack &&
               std::abs(z) <= demo.annulus.r_max + kAnnulusSlack;
    sets.push_back({n, std::move(demo.roots)});
  }
  emit(o, roots_output(o, sets, 1.0, "N = "));
  if (!all_converged(sets)) return not_converged_exit();
  if (!inside) {
    std::cerr << "error: root outside the Kakeya annulus\n";
    return kExitViolation;
  }
  return kExitOk;
}

int cmd_chebyshev(const Options& o) {
  require_format(o, {"json"});
  const auto ladder = resolve_ladder(o, 0);
  const auto seq = chebyshev_u(*std::max_element(ladder.begin(), ladder.end()));
  std::vector<Polynomial<Rational>> picked;
  for (int m : ladder) picked.push_back(seq.polys[m]);
  emit(o, "{\"m\":" + int_list_json(ladder) + ",\"coefficients\":" + coefficients_json(picked) + "}");
  return kExitOk;
}

int cmd_fibonacci(const Options& o) {
  require_format(o, {"json"});
  const auto ladder = resolve_ladder(o, 0);
  const auto fib = fibonacci(*std::max_element(ladder.begin(), ladder.end()));
  std::string out = "[";
  for (std::size_t i = 0; i < ladder.size(); ++i) out += (i ? "," : "") + fib[ladder[i]].str();
  emit(o, out + "]");
  return kExitOk;
}

int cmd_gm(const Options& o) {
  require_format(o, {"json"});
  const auto ladder = resolve_ladder(o, 0);
  const auto seq = gm_sequence(*std::max_element(ladder.begin(), ladder.end()));
  std::string out = "[";
  bool ok = true;
  for (std::size_t i = 0; i < ladder.size(); ++i) {
    const int m = ladder[i];
    const GmZeroCheck check = gm_zero_check(m, o.solver);
    ok = ok && check.ok;
    std::string zeros = "[";
    for (std::size_t k = 0; k < check.formula.size(); ++k) zeros += (k ? "," : "") + format_double(check.formula[k]);
    out += std::string(i ? "," : "") + "{\"m\":" + std::to_string(m) + ",\"coefficients\":" + poly_json(seq.polys[m]) +
           ",\"zeros\":" + zeros + "],\"max_deviation\":" + format_double(check.max_deviation) + "}";
  }
  emit(o, out + "]");
  if (!ok) {
    std::cerr << "error: OracleMismatch: trigonometric zeros differ from computed roots\n";
    return kExitViolation;
  }
  return kExitOk;
}

int cmd_jm(const Options& o) {
  require_format(o, {"json"});
  const auto ladder = resolve_ladder(o, 0);
  const int top = *std::max_element(ladder.begin(), ladder.end());
  const auto seq = jm_sequence(top);
  const auto bounds = jm_zero_bound_check(top, o.solver);
  std::string out = "[";
  bool ok = true;
  for (std::size_t i = 0; i < ladder.size(); ++i) {
    const int m = ladder[i];
    ok = ok && bounds[m];
    out += std::string(i ? "," : "") + "{\"m\":" + std::to_string(m) + ",\"coefficients\":" + poly_json(seq.polys[m]) +
           ",\"below_bound\":" + (bounds[m] ? "true" : "false") + "}";
  }
  emit(o, out + "]");
  if (!ok) {
    std::cerr << "error: a zero of J_m is not real or not below -4/27\n";
    return kExitViolation;
  }
  return kExitOk;
}

int cmd_annulus(const Options& o) {
  require_format(o, {"json"});
  if (o.coeffs.empty()) throw Error(ErrorCode::InvalidArgument, "--coeffs is required");
  const auto parts = split(o.coeffs);
  auto p = Polynomial<Complex>::zero(static_cast<Eigen::Index>(parts.size()));
  for (std::size_t k = 0; k < parts.size(); ++k) p[static_cast<Eigen::Index>(k)] = to_double(parse_rational(parts[k]));
  const Annulus annulus = o.is_signed ? kakeya_signed(p) : kakeya_annulus(p);
  emit(o, annulus_json(annulus));
  if (o.check) {
    const RootSet rs = find_roots(p, o.solver);
    if (!rs.converged) return not_converged_exit();
    for (const auto& z : rs.roots)
      if (std::abs(z) < annulus.r_min - kAnnulusSlack || std::abs(z) > annulus.r_max + kAnnulusSlack) {
        std::cerr << "error: root outside the annulus\n";
        return kExitViolation;
      }
  }
  return kExitOk;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::SolverNotConverged: return kExitNotConverged;
    case ErrorCode::OracleMismatch: return kExitViolation;
    default: return kExitPrecondition;
  }
}

void add_ladder(CLI::App* cmd, Options& o) {
  cmd->add_option("--m", o.m, "single index m");
  cmd->add_option("--ms", o.ms, "comma-separated list of m");
  cmd->add_option("--m-max", o.m_max, "all m up to this value");
}

void add_solver(CLI::App* cmd, Options& o) {
  cmd->add_option("--tol", o.solver.tol, "relative step tolerance")->capture_default_str();
  cmd->add_option("--max-iter", o.solver.max_iter, "iterations per attempt")->capture_default_str();
  cmd->add_option("--seed", o.solver.seed, "initialization seed")->capture_default_str();
}

void add_output(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "csv, json or svg");
  cmd->add_option("--out", o.out, "output file (stdout when omitted)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Zeros of polynomial sequences from rational generating functions"};
  app.require_subcommand(1);
  Options o;

  auto* expand = app.add_subcommand("expand", "coefficients of P_m for 1/((at^2+bt+c)(1-tz))");
  expand->add_option("--quad", o.quad, "a,b,c")->required();
  add_ladder(expand, o);
  add_output(expand, o);
  expand->add_flag("--check", o.check, "cross-check against the closed form");

  auto* roots = app.add_subcommand("roots", "zeros of P_m");
  roots->add_option("--quad", o.quad, "a,b,c")->required();
  add_ladder(roots, o);
  add_output(roots, o);
  add_solver(roots, o);

  auto* verify = app.add_subcommand("verify", "disk verdicts for P_1..P_M");
  verify->add_option("--quad", o.quad, "a,b,c")->required();
  add_ladder(verify, o);
  add_output(verify, o);
  add_solver(verify, o);
  verify->add_flag("--explore", o.explore, "report moduli without pass/fail");
  verify->add_flag("--midpoint", o.midpoint, "midpoint exclusion threshold");

  auto* limit = app.add_subcommand("limit", "convergence of zero sets to the limit circle");
  limit->add_option("--quad", o.quad, "a,b,c")->required();
  add_ladder(limit, o);
  add_output(limit, o);
  add_solver(limit, o);

  auto* classic = app.add_subcommand("classic", "classical sequences");
  classic->require_subcommand(1);
  auto* szego = classic->add_subcommand("szego", "zeros of Taylor sections of e^z");
  szego->add_option("--n", o.n_list, "comma-separated degrees")->required();
  add_output(szego, o);
  add_solver(szego, o);
  auto* cheb = classic->add_subcommand("chebyshev", "Chebyshev polynomials U_m");
  add_ladder(cheb, o);
  add_output(cheb, o);
  auto* fib = classic->add_subcommand("fibonacci", "Fibonacci numbers");
  add_ladder(fib, o);
  add_output(fib, o);
  auto* gm = classic->add_subcommand("gm", "G_m from 1/(1+t+zt^2) with trigonometric zeros");
  add_ladder(gm, o);
  add_output(gm, o);
  add_solver(gm, o);
  auto* jm = classic->add_subcommand("jm", "J_m from 1/(1+t+zt^3) with the -4/27 bound");
  add_ladder(jm, o);
  add_output(jm, o);
  add_solver(jm, o);

  auto* annulus = app.add_subcommand("annulus", "Enestrom-Kakeya annulus");
  annulus->add_option("--coeffs", o.coeffs, "c0,c1,...,cn lowest degree first")->required();
  annulus->add_flag("--signed", o.is_signed, "allow all-negative or alternating coefficients");
  annulus->add_flag("--check", o.check, "solve and confirm every root lies in the annulus");
  add_output(annulus, o);
  add_solver(annulus, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitPrecondition;
  }

  if (o.format.empty()) o.format = (*roots || *szego) ? "csv" : "json";

  try {
    o.solver.validate();
    if (*expand) return cmd_expand(o);
    if (*roots) return cmd_roots(o);
    if (*verify) return cmd_verify(o);
    if (*limit) return cmd_limit(o);
    if (*szego) return cmd_szego(o);
    if (*cheb) return cmd_chebyshev(o);
    if (*fib) return cmd_fibonacci(o);
    if (*gm) return cmd_gm(o);
    if (*jm) return cmd_jm(o);
    if (*annulus) return cmd_annulus(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  }
  return kExitPrecondition;
}
