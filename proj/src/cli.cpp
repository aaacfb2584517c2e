#include "ccsym/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <ostream>

#include "ccsym/checks.hpp"
#include "ccsym/expr.hpp"

namespace ccsym {

namespace {

using Json = nlohmann::ordered_json;

Json element_to_json(const RingElement& x) {
  const Ring& ring = *x.ring();
  switch (ring.kind()) {
    case RingKind::prime_field:
    case RingKind::mod_prime_power:
      return std::get<std::int64_t>(x.payload());
    case RingKind::rationals:
      return std::get<Rational>(x.payload()).get_str();
    case RingKind::truncated: {
      Json arr = Json::array();
      for (const auto& c : std::get<RingElement::Coeffs>(x.payload())) arr.push_back(element_to_json(c));
      return arr;
    }
  }
  return nullptr;
}

Json series_to_json(const LaurentSeries& f) {
  Json coeffs = Json::object();
  for (const auto& [e, c] : f.coeffs()) coeffs[std::to_string(e)] = element_to_json(c);
  Json j;
  j["coeffs"] = std::move(coeffs);
  if (auto b = f.truncation_bound())
    j["truncatedAt"] = *b;
  else
    j["truncatedAt"] = nullptr;
  return j;
}

struct Command {
  std::string verb;
  std::string suite;
  std::string ring_spec;
  std::string f_expr, g_expr;
  std::string phi_expr, tau_expr;
  long pos_bound = -1;
  long prec = 8;
  int trials = 100;
  std::uint64_t seed = 1;
  bool json = false;
};

void emit_json(std::ostream& out, const Command& c, Json result,
               const std::string& witness = {}) {
  Json j;
  j["ring"] = c.ring_spec;
  j["command"] = c.verb + (c.suite.empty() ? "" : " " + c.suite);
  j["result"] = std::move(result);
  if (!witness.empty()) j["witness"] = witness;
  out << j.dump() << "\n";
}

void print_suite(std::ostream& out, const SuiteResult& r) {
  out << r.name << " over " << r.ring << ": " << (r.trials - r.failures) << "/" << r.trials
      << " pass\n";
  for (const auto& line : r.failure_lines) out << "  FAIL " << line << "\n";
}

int run_checks(Command& c, const RingPtr& ring, std::ostream& out) {
  c.verb = "check";
  std::vector<SuiteResult> results;
  auto want = [&](const std::string& name) { return c.suite == name || c.suite == "all"; };

  if (want("steinberg")) results.push_back(check_steinberg(ring, c.trials, c.seed));
  if (want("bimult")) results.push_back(check_bimult(ring, c.trials, c.seed));
  if (want("antisym")) results.push_back(check_antisym(ring, c.trials, c.seed));
  if (want("tame")) {
    if (c.suite == "tame" || ring->is_field())
      results.push_back(check_tame(ring, c.trials, c.seed));
  }
  if (want("residue")) {
    if (c.suite == "residue" || ring->is_q_algebra())
      results.push_back(check_residue(ring, c.trials, c.seed));
  }
  if (want("adjunction")) {
    std::string phi = c.phi_expr.empty() ? "t^2*(1-t)" : c.phi_expr;
    results.push_back(check_adjunction(ring, parse_series(phi, ring), c.trials, c.seed));
  }
  if (want("reparam")) {
    std::string tau = c.tau_expr.empty() ? "t*(1+t)" : c.tau_expr;
    results.push_back(check_reparam(ring, parse_series(tau, ring), c.trials, c.seed));
  }
  if (want("cocycle")) {
    results.push_back(check_cocycle(ring, PairingHandle::cc(), c.trials, c.seed));
    results.push_back(check_cocycle(ring, PairingHandle::commutator(), c.trials, c.seed));
  }
  if (want("characterization")) results.push_back(check_characterization(ring, c.trials, c.seed));

  if (results.empty()) fail(errc::parse_error, "unknown check suite: " + c.suite);

  int failures = 0;
  std::string witness;
  for (const auto& r : results) {
    failures += r.failures;
    if (witness.empty() && !r.failure_lines.empty()) witness = r.failure_lines.front();
  }
  if (c.json) {
    Json suites = Json::array();
    for (const auto& r : results)
      suites.push_back({{"name", r.name}, {"trials", r.trials}, {"failures", r.failures}});
    Json result;
    result["suites"] = std::move(suites);
    result["failures"] = failures;
    emit_json(out, c, result, witness);
  } else {
    for (const auto& r : results) print_suite(out, r);
  }
  return failures == 0 ? 0 : 1;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Command c;

  CLI::App app{"Exact Contou-Carrere symbol calculator over artinian local rings"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--ring", c.ring_spec, "coefficient ring, e.g. F7, Z/9, Q, Q[e]/e^2")
        ->required();
    sub->add_flag("--json", c.json, "emit a single JSON object");
  };

  CLI::App* symbol = app.add_subcommand("symbol", "Contou-Carrere symbol <f, g>");
  add_common(symbol);
  symbol->add_option("--f", c.f_expr)->required();
  symbol->add_option("--g", c.g_expr)->required();

  CLI::App* witt = app.add_subcommand("witt", "Witt parameter decomposition of f");
  add_common(witt);
  witt->add_option("--f", c.f_expr)->required();
  witt->add_option("--pos-bound", c.pos_bound, "positive parameters up to this index");

  CLI::App* winding = app.add_subcommand("winding", "winding number of f");
  add_common(winding);
  winding->add_option("--f", c.f_expr)->required();

  CLI::App* norm = app.add_subcommand("norm", "norm of f along phi");
  add_common(norm);
  norm->add_option("--f", c.f_expr)->required();
  norm->add_option("--phi", c.phi_expr)->required();
  norm->add_option("--prec", c.prec, "output precision (default 8)");

  CLI::App* residue = app.add_subcommand("residue-symbol", "exp-residue formula for <f, g>");
  add_common(residue);
  residue->add_option("--f", c.f_expr)->required();
  residue->add_option("--g", c.g_expr)->required();

  CLI::App* check = app.add_subcommand("check", "seeded verification suites");
  add_common(check);
  check->add_option("suite", c.suite,
                    "steinberg|bimult|antisym|tame|residue|adjunction|reparam|cocycle|"
                    "characterization|all")
      ->required();
  check->add_option("--trials", c.trials);
  check->add_option("--seed", c.seed);
  check->add_option("--phi", c.phi_expr, "adjunction reparameterization");
  check->add_option("--tau", c.tau_expr, "reparameterization with winding number 1");

  std::vector<char*> argv;
  std::string prog = "ccsym";
  argv.push_back(prog.data());
  std::vector<std::string> owned = args;
  for (auto& a : owned) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    RingPtr ring = parse_ring_spec(c.ring_spec);
    if (symbol->parsed()) {
      c.verb = "symbol";
      SymbolValue v = cc_symbol(parse_series(c.f_expr, ring), parse_series(c.g_expr, ring));
      if (c.json)
        emit_json(out, c, element_to_json(v.value));
      else
        out << v.str() << "\n";
      return 0;
    }
    if (witt->parsed()) {
      c.verb = "witt";
      LaurentSeries f = parse_series(c.f_expr, ring);
      long K = c.pos_bound >= 0 ? c.pos_bound : std::max<long>(4, required_pos_bound(f, f));
      WittDecomposition d = witt_decompose(f, K);
      if (c.json) {
        Json neg = Json::object();
        for (const auto& [i, a] : d.neg) neg[std::to_string(i)] = element_to_json(a);
        Json pos = Json::array();
        for (long i = 1; i <= d.pos_bound; ++i) {
          auto it = d.pos.find(i);
          pos.push_back(element_to_json(it == d.pos.end() ? ring->zero() : it->second));
        }
        Json result;
        result["w"] = d.w;
        result["a0"] = element_to_json(d.a0);
        result["neg"] = std::move(neg);
        result["pos"] = std::move(pos);
        result["posBound"] = d.pos_bound;
        emit_json(out, c, result);
      } else {
        out << "w = " << d.w << "\n";
        out << "a0 = " << d.a0.str() << "\n";
        out << "neg = {";
        bool first = true;
        for (const auto& [i, a] : d.neg) {
          out << (first ? "" : ", ") << i << ": " << a.str();
          first = false;
        }
        out << "}\n";
        out << "pos = [";
        for (long i = 1; i <= d.pos_bound; ++i) {
          auto it = d.pos.find(i);
          out << (i > 1 ? ", " : "") << (it == d.pos.end() ? ring->zero() : it->second).str();
        }
        out << "]\n";
      }
      return 0;
    }
    if (winding->parsed()) {
      c.verb = "winding";
      long w = parse_series(c.f_expr, ring).winding_number();
      if (c.json)
        emit_json(out, c, w);
      else
        out << w << "\n";
      return 0;
    }
    if (norm->parsed()) {
      c.verb = "norm";
      NormContext ctx(parse_series(c.phi_expr, ring));
      LaurentSeries n = norm_map(ctx, parse_series(c.f_expr, ring), c.prec);
      if (c.json)
        emit_json(out, c, series_to_json(n));
      else
        out << n.str() << "\n";
      return 0;
    }
    if (residue->parsed()) {
      c.verb = "residue-symbol";
      SymbolValue v = residue_symbol(parse_series(c.f_expr, ring), parse_series(c.g_expr, ring));
      if (c.json)
        emit_json(out, c, element_to_json(v.value));
      else
        out << v.str() << "\n";
      return 0;
    }
    if (check->parsed()) {
      c.verb = "check";
      return run_checks(c, ring, out);
    }
    err << "no command\n";
    return 2;
  } catch (const Error& e) {
    if (c.json) {
      Json j;
      j["ring"] = c.ring_spec;
      j["command"] = c.verb;
      j["error"] = e.what();
      out << j.dump() << "\n";
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace ccsym
