// ringdef — derive, verify and print positive-existential definability
// certificates over computable commutative rings.

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>

#include "ringdef/constructions.hpp"
#include "ringdef/formula_text.hpp"
#include "ringdef/json_io.hpp"
#include "ringdef/verify.hpp"

namespace {

using namespace ringdef;

constexpr int kExitPass = 0;
constexpr int kExitFalsified = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUndecided = 3;

std::vector<Elem> parse_gens(const RingSpec& ring, const std::string& text) {
  std::vector<Elem> out;
  size_t start = 0;
  while (start <= text.size()) {
    size_t semi = text.find(';', start);
    out.push_back(ring.decode(std::string_view(text).substr(
        start, semi == std::string::npos ? std::string::npos : semi - start)));
    if (semi == std::string::npos) break;
    start = semi + 1;
  }
  return out;
}

// "a..b" (integer range), "height<=h", or ';'-separated encodings
std::vector<Elem> parse_elements(const RingSpec& ring, const std::string& text) {
  if (text.rfind("height<=", 0) == 0) {
    std::uint64_t h = std::stoull(text.substr(8));
    return ring.enumerate(h);
  }
  size_t dots = text.find("..");
  if (dots != std::string::npos && ring.kind() == RingKind::Int) {
    BigInt lo(text.substr(0, dots));
    BigInt hi(text.substr(dots + 2));
    std::vector<Elem> out;
    for (BigInt v = lo; v <= hi; ++v) out.push_back(Elem(v));
    return out;
  }
  return parse_gens(ring, text);
}

Certificate auto_cert(const RingSpec& ring);

Certificate auto_quotient_cert(const RingSpec& ring, const Ideal& I) {
  auto [Q, pi] = quotient(ring, I);
  (void)pi;
  return auto_cert(Q);
}

Certificate auto_cert(const RingSpec& ring) {
  if (ring.kind() == RingKind::Int) return cert_int_classic();
  try {
    return cert_field(ring);
  } catch (const Error&) {
  }
  if (ring.finite()) return cert_finite(ring);
  fail(ErrorCode::BadArgument,
       "no automatic certificate for " + ring.to_string() +
           "; derive one explicitly and pass it as a file");
}

Certificate load_cert(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::BadArgument, "cannot open " + path);
  Json j = Json::parse(in);
  return certificate_from_json(j);
}

void emit(const Json& j, const std::string& json_path) {
  std::string text = j.dump(2);
  if (json_path.empty()) {
    std::cout << text << "\n";
  } else {
    std::ofstream out(json_path);
    out << text << "\n";
  }
}

struct CommonOpts {
  std::string budget_text;
  std::uint64_t nodes = 50'000'000;
  std::string json_path;
  std::uint64_t seed = 0;
  bool timings = false;

  SearchBudget budget(std::vector<std::uint64_t> default_heights = {2, 4, 8, 16, 32,
                                                                    64}) const {
    SearchBudget b = budget_text.empty()
                         ? SearchBudget::heights(std::move(default_heights))
                         : SearchBudget::parse(budget_text);
    b.node_limit = nodes;
    return b;
  }
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--budget", o.budget_text, "height schedule, e.g. 2,4,8");
  cmd->add_option("--nodes", o.nodes, "node limit per evaluation");
  cmd->add_option("--json", o.json_path, "write JSON output to this file");
  cmd->add_option("--seed", o.seed, "random seed (differential tests)");
  cmd->add_flag("--timings", o.timings, "include wallclock in reports");
}

int report_exit(const Report& rep, bool undecided_matters = false) {
  if (!rep.pass) return kExitFalsified;
  if (undecided_matters && rep.unknown_count > 0) return kExitUndecided;
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"positive-existential definability certificates over rings"};
  app.require_subcommand(1);

  // ---- derive ----------------------------------------------------------
  auto* derive = app.add_subcommand("derive", "derive a certificate");
  std::string path, ring_text, ideal_text, ideal2_text, mode = "quotients";
  std::string term_text, vars_text;
  std::uint64_t search_height = 16;
  CommonOpts dopts;
  derive->add_option("path", path,
                     "construction: int-classic | finite | field | ideal-membership | "
                     "quotient-lift | weil | two-ideals | polyring | doubling | "
                     "product | filtration | regular | one-poly")
      ->required();
  derive->add_option("--ring", ring_text, "ring spec, e.g. zmod:12");
  derive->add_option("--ideal", ideal_text, "ideal generators, ';'-separated encodings");
  derive->add_option("--ideal2", ideal2_text, "second ideal (two-ideals)");
  derive->add_option("--mode", mode, "regular mode: quotients | base");
  derive->add_option("--term", term_text, "polynomial term s-expression (one-poly)");
  derive->add_option("--vars", vars_text, "comma-separated term variables (one-poly)");
  derive->add_option("--search-height", search_height,
                     "search bound for the doubling quadratic");
  add_common(derive, dopts);

  // ---- verify ----------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "verify a certificate file");
  std::string cert_path, elements_text;
  bool exhaustive = false;
  CommonOpts vopts;
  verify->add_option("certificate", cert_path, "certificate JSON file")->required();
  verify->add_flag("--exhaustive", exhaustive, "exhaustive truth-set comparison");
  verify->add_option("--elements", elements_text,
                     "elements: 'a..b', 'height<=h', or ';'-separated encodings");
  add_common(verify, vopts);

  // ---- eval ------------------------------------------------------------
  auto* eval = app.add_subcommand("eval", "evaluate a formula");
  std::string eval_ring, formula_text, assign_text;
  CommonOpts eopts;
  eval->add_option("--ring", eval_ring, "ring spec")->required();
  eval->add_option("--formula", formula_text, "formula s-expression")->required();
  eval->add_option("--assign", assign_text, "assignment var=enc;var=enc");
  add_common(eval, eopts);

  // ---- phi-demo --------------------------------------------------------
  auto* phi = app.add_subcommand("phi-demo", "infinitesimal Hasse principle probe");
  std::string poly_text;
  std::string p_text = "7";
  unsigned Q = 12;
  CommonOpts popts;
  phi->add_option("--poly", poly_text, "univariate integer polynomial, e.g. X^2-8")
      ->required();
  phi->add_option("--p", p_text, "prime");
  phi->add_option("--Q", Q, "maximal exponent");
  add_common(phi, popts);

  // ---- closedness-demo -------------------------------------------------
  auto* closed = app.add_subcommand("closedness-demo",
                                    "p-adic non-closedness of a certified set");
  std::string closed_cert;
  std::string cp_text = "7";
  unsigned cQ = 6;
  CommonOpts copts;
  closed->add_option("certificate", closed_cert, "certificate JSON file")->required();
  closed->add_option("--p", cp_text, "prime");
  closed->add_option("--Q", cQ, "maximal exponent");
  add_common(closed, copts);

  // ---- diff ------------------------------------------------------------
  auto* diff = app.add_subcommand("diff-normal-form",
                                  "random differential test of the normal form");
  std::string diff_ring;
  unsigned diff_count = 500;
  CommonOpts fopts;
  diff->add_option("--ring", diff_ring, "finite ring spec")->required();
  diff->add_option("--count", diff_count, "number of random formulas");
  add_common(diff, fopts);

  // ---- print -----------------------------------------------------------
  auto* print = app.add_subcommand("print", "print a certificate");
  std::string print_cert, format = "pretty";
  print->add_option("certificate", print_cert, "certificate JSON file")->required();
  print->add_option("--format", format, "pretty | sexpr | json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*derive) {
      Certificate c;
      auto need_ring = [&] {
        if (ring_text.empty())
          fail(ErrorCode::BadArgument, "--ring is required for this construction");
        return RingSpec::parse(ring_text);
      };
      auto need_ideal = [&](const RingSpec& r, const std::string& text) {
        if (text.empty())
          fail(ErrorCode::BadArgument, "--ideal is required for this construction");
        return Ideal::make(r, parse_gens(r, text));
      };
      if (path == "int-classic") {
        c = cert_int_classic();
      } else if (path == "finite") {
        c = cert_finite(need_ring());
      } else if (path == "field") {
        c = cert_field(need_ring());
      } else if (path == "ideal-membership") {
        RingSpec r = need_ring();
        c = cert_ideal_membership(need_ideal(r, ideal_text));
      } else if (path == "quotient-lift") {
        RingSpec r = need_ring();
        Ideal I = need_ideal(r, ideal_text);
        c = quotient_lift(I, auto_quotient_cert(r, I));
      } else if (path == "weil") {
        c = weil_restrict(auto_cert(need_ring()));
      } else if (path == "two-ideals") {
        RingSpec r = need_ring();
        Ideal I1 = need_ideal(r, ideal_text);
        if (ideal2_text.empty()) fail(ErrorCode::BadArgument, "--ideal2 is required");
        Ideal I2 = Ideal::make(r, parse_gens(r, ideal2_text));
        c = two_ideals(I1, I2, auto_quotient_cert(r, I1), auto_quotient_cert(r, I2));
      } else if (path == "polyring") {
        RingSpec r = need_ring();
        if (r.kind() != RingKind::Poly)
          fail(ErrorCode::BadArgument, "polyring needs --ring poly:gfp:p:X");
        c = polyring_cert(cert_field(r.base()), r.varname());
      } else if (path == "doubling") {
        RingSpec r = need_ring();
        Ideal I = need_ideal(r, ideal_text);
        c = doubling_cert(r, I, auto_quotient_cert(r, I), search_height);
      } else if (path == "product") {
        RingSpec r = need_ring();
        if (r.kind() != RingKind::Product)
          fail(ErrorCode::BadArgument, "product needs --ring prod(<spec>,<spec>)");
        c = product_cert(auto_cert(r.left()), auto_cert(r.right()));
      } else if (path == "filtration") {
        RingSpec r = need_ring();
        FiltrationData F = composition_series(r);
        std::vector<Certificate> certs;
        for (const Ideal& prime : F.primes)
          certs.push_back(auto_quotient_cert(r, prime));
        c = filtration_cert(F, certs);
      } else if (path == "regular") {
        RingSpec r = need_ring();
        AssociatedPrimesData D = associated_primes(r);
        if (mode == "base") {
          c = regular_via_base(D, cert_finite(r));
        } else {
          std::vector<Certificate> certs;
          for (const auto& [prime, alpha] : D.pairs) {
            (void)alpha;
            certs.push_back(auto_quotient_cert(r, prime));
          }
          c = regular_via_quotients(D, certs);
        }
      } else if (path == "one-poly") {
        RingSpec r = need_ring();
        if (term_text.empty()) fail(ErrorCode::BadArgument, "--term is required");
        std::vector<VarId> vars;
        size_t start = 0;
        while (!vars_text.empty() && start <= vars_text.size()) {
          size_t comma = vars_text.find(',', start);
          vars.push_back(vars_text.substr(
              start, comma == std::string::npos ? std::string::npos : comma - start));
          if (comma == std::string::npos) break;
          start = comma + 1;
        }
        c = one_poly_cert(r, parse_term(term_text, r), vars);
      } else {
        fail(ErrorCode::BadArgument, "unknown derivation path '" + path + "'");
      }
      emit(certificate_to_json(c), dopts.json_path);
      return kExitPass;
    }

    if (*verify) {
      Certificate c = load_cert(cert_path);
      VerifyConfig cfg;
      cfg.exhaustive = exhaustive;
      if (!exhaustive) {
        if (elements_text.empty() && c.ring.finite()) cfg.exhaustive = true;
        else if (elements_text.empty())
          cfg.elements = parse_elements(c.ring, "-20..20");
        else
          cfg.elements = parse_elements(c.ring, elements_text);
      }
      auto t0 = std::chrono::steady_clock::now();
      EvalSession ses;
      Report rep = verify_cert(c, cfg, vopts.budget(), &ses);
      rep.wallclock_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - t0)
                             .count();
      emit(report_to_json(rep, vopts.timings), vopts.json_path);
      return report_exit(rep);
    }

    if (*eval) {
      RingSpec r = RingSpec::parse(eval_ring);
      Formula f = parse_formula(formula_text, r);
      std::map<VarId, Elem> env;
      size_t start = 0;
      while (!assign_text.empty() && start <= assign_text.size()) {
        size_t semi = assign_text.find(';', start);
        std::string part = assign_text.substr(
            start, semi == std::string::npos ? std::string::npos : semi - start);
        size_t eq = part.find('=');
        if (eq == std::string::npos)
          fail(ErrorCode::BadArgument, "assignment entries look like var=enc");
        env[part.substr(0, eq)] = r.decode(part.substr(eq + 1));
        if (semi == std::string::npos) break;
        start = semi + 1;
      }
      Verdict v = eval_formula(r, f, env, eopts.budget());
      Json j;
      j["verdict"] = v.kind == VerdictKind::True             ? "true"
                     : v.kind == VerdictKind::FalseExhaustive ? "false-exhaustive"
                                                              : "unknown";
      if (v.is_true()) {
        Json w = Json::array();
        for (const auto& [var, val] : v.witness)
          w.push_back(Json::array({var, r.encode(val)}));
        j["witness"] = std::move(w);
        j["height"] = v.height;
      }
      j["nodes"] = v.nodes;
      emit(j, eopts.json_path);
      return v.kind == VerdictKind::Unknown ? kExitUndecided : kExitPass;
    }

    if (*phi) {
      IntPoly P = IntPoly::parse(poly_text);
      RingSpec Z = RingSpec::integers();
      std::vector<Term> monomials;
      for (size_t e = 0; e < P.coeffs.size(); ++e) {
        if (P.coeffs[e] == 0) continue;
        std::vector<Term> factors{Term::constant(Elem(P.coeffs[e]))};
        for (size_t i = 0; i < e; ++i) factors.push_back(Term::var("X"));
        monomials.push_back(Term::prod(std::move(factors)));
      }
      PhiSystem S;
      S.polys = {Term::sum(std::move(monomials))};
      S.vars = {"X"};
      auto t0 = std::chrono::steady_clock::now();
      Report rep = phi_experiment(S, BigInt(p_text), Q, popts.budget());
      rep.wallclock_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - t0)
                             .count();
      std::cerr << rep.conclusion << "\n";
      emit(report_to_json(rep, popts.timings), popts.json_path);
      return report_exit(rep);
    }

    if (*closed) {
      Certificate c = load_cert(closed_cert);
      auto t0 = std::chrono::steady_clock::now();
      Report rep = closedness_demo(c, BigInt(cp_text), cQ,
                                   copts.budget({2, 4, 8, 16, 32, 64, 128, 256, 512,
                                                 1024}));
      rep.wallclock_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - t0)
                             .count();
      std::cerr << rep.conclusion << "\n";
      emit(report_to_json(rep, copts.timings), copts.json_path);
      if (rep.conclusion.rfind("inconclusive", 0) == 0) return kExitUndecided;
      return report_exit(rep);
    }

    if (*diff) {
      Report rep = random_formula_equivalence(RingSpec::parse(diff_ring), fopts.seed,
                                              diff_count);
      emit(report_to_json(rep, fopts.timings), fopts.json_path);
      return report_exit(rep);
    }

    if (*print) {
      Certificate c = load_cert(print_cert);
      if (format == "json") {
        std::cout << certificate_to_json(c).dump(2) << "\n";
      } else if (format == "sexpr") {
        std::cout << print_formula(c.formula, c.ring) << "\n";
      } else {
        std::cout << "ring:    " << c.ring.to_string() << "\n";
        std::cout << "target:  " << c.target.describe(c.ring) << "\n";
        std::cout << "formula: " << pretty_formula(c.formula, c.ring) << "\n";
        if (!c.assumptions.empty()) {
          std::cout << "assumptions:\n";
          for (const Assumption& a : c.assumptions)
            std::cout << "  [" << (a.checked ? "checked" : "recorded") << "] " << a.tag
                      << ": " << a.text << "\n";
        }
      }
      return kExitPass;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::BudgetExhausted:
      case ErrorCode::InfeasibleScan:
        return kExitUndecided;
      case ErrorCode::ParseError:
      case ErrorCode::BadArgument:
        return kExitUsage;
      default:
        return kExitUsage;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
