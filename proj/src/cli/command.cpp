#include "grot/cli/command.hpp"

#include <sstream>

#include "CLI11.hpp"
#include "grot/cli/parser.hpp"
#include "grot/cli/report.hpp"
#include "grot/cli/scenario.hpp"
#include "grot/cli/suites.hpp"
#include "grot/decomposition.hpp"
#include "grot/error.hpp"
#include "grot/hopf.hpp"
#include "grot/order.hpp"
#include "grot/transfer.hpp"

namespace grot::cli {

namespace {

const Multisegment& single_key(const VirtualRep& x, const std::string& name) {
  if (x.size() != 1 || x.terms().begin()->second != 1)
    throw DomainError(name + ": expected a single term Std(...) or Irr(...)");
  return x.terms().begin()->first;
}

VirtualRep require_basis(const VirtualRep& x, Basis basis, const std::string& command) {
  if (x.basis() != basis)
    throw DomainError(command + " expects " + (basis == Basis::Standard ? "Std(...)" : "Irr(...)") +
                      " terms");
  return x;
}

std::string certificate_line(const CertificateStep& step, const AlgebraContext& ctx) {
  return format(step.first, ctx) + " + " + format(step.second, ctx) + " -> " + format(step.result, ctx);
}

std::vector<std::string> certificate_lines(const OrderCertificate& cert, const AlgebraContext& ctx) {
  std::vector<std::string> out;
  for (const auto& step : cert.chain) out.push_back(certificate_line(step, ctx));
  return out;
}

CheckLine single_check(std::string property, bool passed, std::string counterexample = {}) {
  return CheckLine{std::move(property), 1, passed, passed ? std::string() : std::move(counterexample)};
}

Report fait_report() {
  const auto ce = make_counterexample();
  const auto& ctx = ce.ctx;
  const TransferContext tc(ctx);
  Report r;
  r.command = "fait";
  r.scenario = scenario_to_json(ctx);
  r.inputs = {{"a", format(standard(ce.a), ctx)},
              {"b", format(standard(ce.b), ctx)},
              {"sigma1", format(standard(ce.sigma1), ctx)},
              {"sigma2", format(standard(ce.sigma2), ctx)}};

  std::vector<CheckLine> checks;
  const auto image_a = jl(tc, standard(ce.a));
  checks.push_back(single_check("jl(Std(a)) = Std(sigma1)", image_a == standard(ce.sigma1), format(image_a, ctx)));
  const auto image_b = jl(tc, standard(ce.b));
  checks.push_back(single_check("jl(Std(b)) = Std(sigma2)", image_b == standard(ce.sigma2), format(image_b, ctx)));

  const auto below = leq(ce.sigma2, ce.sigma1);
  const bool replays = below.holds && replay(*below.certificate, ce.sigma1, ce.sigma2);
  checks.push_back(single_check("sigma2 <= sigma1 with a replayable certificate", replays,
                                below.holds ? "certificate does not replay" : "not comparable"));
  if (below.certificate) r.certificate = certificate_lines(*below.certificate, ctx);

  checks.push_back(single_check("b <= a fails", !leq(ce.b, ce.a).holds, "b <= a holds"));
  const auto ops = elementary_ops(ce.a);
  checks.push_back(single_check("a admits exactly 1 elementary operation", ops.size() == 1,
                                std::to_string(ops.size()) + " operations"));
  const auto back = lj(tc, standard(ce.sigma1));
  checks.push_back(single_check("lj(Std(sigma1)) = Std(a)", back == standard(ce.a), format(back, ctx)));

  r.checks = std::move(checks);
  r.result = r.passed() ? "pass" : "fail";
  return r;
}

}  // namespace

CommandOutput run_command(const std::vector<std::string>& argv) {
  CLI::App app{"Symbolic engine for the Grothendieck groups of GL_n(F) and GL_r(D).\n"
               "Expressions: Std(rho[0..5],rho[1..8]) on the F side, Std(rho'{0;3}) on the D side;\n"
               "put '--' before an expression that starts with '-'.",
               "grot"};
  std::string scenario_path;
  bool json = false;
  app.add_option("--scenario", scenario_path, "Scenario JSON file (default: d=2, rho p=1 s=2)");
  app.add_flag("--json", json, "Print the report as JSON");
  app.require_subcommand(1);

  std::string a, b, suite;
  std::uint64_t seed = 1;
  int max_degree = 0;

  auto unary = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help)->fallthrough();
    sub->add_option("A", a, "Expression")->required();
    return sub;
  };
  auto* order_cmd = app.add_subcommand("order", "Zelevinsky order on keys: is A <= B?")->fallthrough();
  order_cmd->add_option("A", a, "Single-key expression")->required();
  order_cmd->add_option("B", b, "Single-key expression")->required();
  auto* mul_cmd = app.add_subcommand("mul", "Product A*B (parabolic induction)")->fallthrough();
  mul_cmd->add_option("A", a, "Expression")->required();
  mul_cmd->add_option("B", b, "Expression")->required();
  auto* comul_cmd = unary("comul", "Comultiplication of a Std(...) expression");
  auto* dual_cmd = unary("dual", "Aubert involution, degree by degree");
  auto* jl_cmd = unary("jl", "Transfer from the D side to the F side");
  auto* lj_cmd = unary("lj", "Transfer from the F side to the D side");
  auto* decompose_cmd = unary("decompose", "Std(...) expression in the irreducible basis");
  auto* express_cmd = unary("express", "Irr(...) expression in the standard basis");
  auto* check_cmd = app.add_subcommand("check", "Run a property suite")->fallthrough();
  check_cmd->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
  check_cmd->add_option("--seed", seed, "Seed for sampled suites");
  check_cmd->add_option("--max-degree", max_degree, "Degree bound (suite default when absent)")
      ->check(CLI::PositiveNumber);
  auto* fait_cmd = app.add_subcommand("fait", "The order counterexample, end to end")->fallthrough();

  std::ostringstream out, err;
  std::vector<const char*> raw;
  raw.reserve(argv.size());
  for (const auto& s : argv) raw.push_back(s.c_str());
  if (raw.empty()) raw.push_back("grot");
  try {
    app.parse(static_cast<int>(raw.size()), raw.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return {code == 0 ? kOk : kUsageError, out.str(), err.str()};
  }

  try {
    Report r;
    if (fait_cmd->parsed()) {
      r = fait_report();
    } else {
      const AlgebraContext ctx = scenario_path.empty() ? default_scenario() : load_scenario(scenario_path);
      const TransferContext tc(ctx);
      const SegmentSupportProvider prov;
      r.scenario = scenario_to_json(ctx);
      auto parse = [&](const std::string& text, Side side, Basis basis = Basis::Standard) {
        return parse_expr(text, ctx, {side, basis});
      };
      auto standard_form = [&](const VirtualRep& x) {
        return x.basis() == Basis::Standard ? x : to_standard_basis(x, prov);
      };

      if (order_cmd->parsed()) {
        r.command = "order";
        const auto x = parse(a, Side::F);
        const auto y = parse(b, x.side());
        r.inputs = {{"A", format(x, ctx)}, {"B", format(y, ctx)}};
        const auto res = leq(single_key(x, "A"), single_key(y, "B"));
        r.result = res.holds ? "true" : "false";
        if (res.certificate) r.certificate = certificate_lines(*res.certificate, ctx);
      } else if (mul_cmd->parsed()) {
        r.command = "mul";
        const auto x = parse(a, Side::F);
        const auto y = parse(b, x.side(), x.basis());
        r.inputs = {{"A", format(x, ctx)}, {"B", format(y, ctx)}};
        r.result = format(mul(require_basis(x, Basis::Standard, "mul"), require_basis(y, Basis::Standard, "mul")), ctx);
      } else if (comul_cmd->parsed()) {
        r.command = "comul";
        const auto x = parse(a, Side::F);
        r.inputs = {{"A", format(x, ctx)}};
        r.result = format(comult(require_basis(x, Basis::Standard, "comul")), ctx);
      } else if (dual_cmd->parsed()) {
        r.command = "dual";
        const auto x = parse(a, Side::F);
        r.inputs = {{"A", format(x, ctx)}};
        auto y = aubert_graded(standard_form(x));
        if (x.basis() == Basis::Irreducible) y = to_irreducible_basis(y, prov);
        r.result = format(y, ctx);
      } else if (jl_cmd->parsed()) {
        r.command = "jl";
        const auto x = parse(a, Side::D);
        r.inputs = {{"A", format(x, ctx)}};
        r.result = format(jl(tc, standard_form(x)), ctx);
      } else if (lj_cmd->parsed()) {
        r.command = "lj";
        const auto x = parse(a, Side::F);
        r.inputs = {{"A", format(x, ctx)}};
        r.result = format(lj(tc, standard_form(x)), ctx);
      } else if (decompose_cmd->parsed()) {
        r.command = "decompose";
        const auto x = parse(a, Side::F);
        r.inputs = {{"A", format(x, ctx)}};
        r.result = format(to_irreducible_basis(require_basis(x, Basis::Standard, "decompose"), prov), ctx);
      } else if (express_cmd->parsed()) {
        r.command = "express";
        const auto x = parse(a, Side::F, Basis::Irreducible);
        r.inputs = {{"A", format(x, ctx)}};
        r.result = format(to_standard_basis(require_basis(x, Basis::Irreducible, "express"), prov), ctx);
      } else if (check_cmd->parsed()) {
        r.command = "check";
        SuiteOptions opts;
        opts.seed = seed;
        if (max_degree > 0) opts.max_degree = max_degree;
        const int bound = opts.max_degree.value_or(default_max_degree(suite));
        r.inputs = {{"suite", suite}, {"seed", std::to_string(seed)}, {"max-degree", std::to_string(bound)}};
        r.checks = run_suite(suite, ctx, opts);
        r.result = r.passed() ? "pass" : "fail";
      }
    }
    out << (json ? render_json(r) : render_text(r));
    return {r.passed() ? kOk : kCheckFailed, out.str(), err.str()};
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return {kUsageError, out.str(), err.str()};
  }
}

}  // namespace grot::cli
