// thuelab: command-line front end. Exit codes: 0 success, 1 usage or domain
// error, 2 computation error.

#include "thuelab/arith.hpp"
#include "thuelab/automorphism.hpp"
#include "thuelab/bounds.hpp"
#include "thuelab/cyclotomic.hpp"
#include "thuelab/error.hpp"
#include "thuelab/harness.hpp"
#include "thuelab/json_io.hpp"
#include "thuelab/padic.hpp"
#include "thuelab/proof_chain.hpp"
#include "thuelab/solver.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace thuelab;

namespace {

Json irreducibility_json(const IrreducibilityResult& r) {
  Json j = Json::object();
  j["status"] = to_string(r.status);
  j["witness"] = r.witness ? to_json(*r.witness) : Json(nullptr);
  j["certifying_prime"] = r.certifying_prime ? Json(*r.certifying_prime) : Json(nullptr);
  return j;
}

Json form_info(const BinaryForm& F, bool fast) {
  Json j = Json::object();
  j["form"] = to_json(F);
  j["expression"] = F.to_string();
  j["degree"] = F.degree();
  const FormInvariants inv = compute_invariants(F, fast);
  j["content"] = to_json(inv.content);
  j["height"] = to_json(inv.height);
  if (F.leading() == 0) {
    const ShiftResult s = unimodular_shift(F);
    j["shift"] = Json{{"matrix", to_json(s.matrix)}, {"form", to_json(s.form)}};
    j["discriminant"] = to_json(discriminant(s.form));
    j["mahler"] = to_json(mahler_measure(s.form));
    j["invariants_from_shift"] = true;
  } else {
    j["discriminant"] = to_json(*inv.discriminant);
    j["mahler"] = to_json(*inv.mahler);
  }
  j["landau"] = to_json(inv.landau);
  j["irreducible"] = inv.content == 1 ? irreducibility_json(inv.irreducible) : Json("undetermined (content is not one)");
  return j;
}

Json aut_json(const BinaryForm& F, const EnhancedAutGroup& G, long prec) {
  Json j = Json::object();
  j["form"] = to_json(F);
  j["cardinality"] = G.cardinality();
  j["sign_multiplicity"] = G.sign_multiplicity;
  Json classes = Json::array();
  for (const auto& c : G.classes) classes.push_back(to_json(c.matrix));
  j["classes"] = std::move(classes);
  Json elements = Json::array();
  bool all_ok = true;
  for (const auto& M : G.elements()) {
    const bool sq = is_enhanced_automorphism(F, M);
    const bool law = automorphism_determinant_law(F, M);
    all_ok = all_ok && sq && law;
    elements.push_back(Json{{"matrix", to_json(M)}, {"det", to_json(M.det())}, {"squared_identity", sq},
                            {"determinant_law", law}});
  }
  j["elements"] = std::move(elements);
  j["all_verified"] = all_ok;
  j["closed"] = G.closed;
  j["at_most_24"] = G.cardinality() <= 24;
  const OrbitCounts oc = orbit_counts(F, G, prec);
  j["gamma"] = oc.gamma;
  j["orbit_sizes"] = oc.per_root;
  j["precision_bits"] = G.precision_bits;
  j["denom_bound"] = to_json(G.denom_bound);
  j["warnings"] = G.warnings;
  return j;
}

Json chain_json(const ChainReport& r) {
  Json j = Json::object();
  j["mu"] = to_json(r.mu);
  j["C0"] = to_json(r.C0);
  j["roth_branch"] = to_string(r.roth_branch);
  j["bound_on_H"] = to_string(r.bound_on_H);
  j["to_be_applied"] = to_string(r.to_be_applied);
  j["lewis_mahler"] = to_string(r.lewis_mahler);
  j["implication_violated"] = r.implication_violated();
  j["C1_stated"] = to_json(r.C1_stated);
  j["C1_tight"] = to_json(r.C1_tight);
  j["thunder_valuation"] = r.thunder_valuation ? Json(r.thunder_valuation->to_string()) : Json(nullptr);
  j["thunder_stated"] = to_string(r.thunder_stated);
  j["thunder_tight"] = to_string(r.thunder_tight);
  if (!r.thunder_note.empty()) j["thunder_note"] = r.thunder_note;
  return j;
}

Json bound_json(const BoundReport& r) {
  Json j = Json::object();
  j["d"] = to_json(r.d);
  j["lambda"] = to_json(r.lambda);
  j["lambda_limit"] = to_json(r.lambda_limit);
  j["lambda_in_range"] = r.lambda_in_range;
  j["f_d"] = r.f_d ? to_json(*r.f_d) : Json(nullptr);
  j["mu"] = to_json(r.mu);
  j["mu_gap"] = r.mu_gap;
  j["g_like"] = r.g_like ? to_json(*r.g_like) : Json(nullptr);
  j["theorem2_count"] = r.theorem2_count ? to_json(*r.theorem2_count) : Json(nullptr);
  j["aut_cardinality"] = to_json(r.aut_cardinality);
  j["A"] = r.A ? to_json(*r.A) : Json(nullptr);
  j["evertse_log10"] = to_json(r.evertse_log10);
  j["notes"] = r.notes;
  return j;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw DomainError("cannot read " + path);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

Integer parse_integer(const std::string& s, const char* what) {
  Integer v;
  std::string body = s;
  if (!body.empty() && body[0] == '+') body = body.substr(1);
  if (body.empty() || v.set_str(body, 10) != 0) throw DomainError(std::string(what) + " is not an integer: " + s);
  return v;
}

std::uint64_t parse_prime(const std::string& s) {
  const Integer p = parse_integer(s, "p");
  if (p < 2 || !p.fits_ulong_p() || p >= (Integer(1) << 63)) throw DomainError("p out of range");
  if (!is_prime(p)) throw DomainError("p must be prime");
  return p.get_ui();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Thue and Thue-Mahler experiments for binary forms", "thuelab"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Help for every subcommand");

  std::string form_spec;
  long precision = -1;
  const std::string form_help = "Form: psi:N, a JSON array [c_d, ..., c_0], or an expression such as \"x^3 - 2*y^3\"";
  const std::string prec_help = "Working precision in bits (default 256, or THUELAB_PRECISION_BITS)";

  // forms info
  auto* forms = app.add_subcommand("forms", "Binary form utilities");
  forms->require_subcommand(1);
  auto* info = forms->add_subcommand("info", "Invariants: content, height, discriminant, Mahler measure, irreducibility");
  bool fast = false;
  info->add_option("--form", form_spec, form_help)->required();
  info->add_flag("--fast", fast, "Irreducibility from the modular fast path only");

  // psi
  auto* psi = app.add_subcommand("psi", "Build Psi_n, the homogenised minimal polynomial of 2cos(2pi/n)");
  std::uint64_t psi_n = 0;
  psi->add_option("--n", psi_n, "n >= 3")->required();

  // aut
  auto* aut = app.add_subcommand("aut", "Enhanced automorphism group Aut'|F|");
  std::string denom = "1000000";
  aut->add_option("--form", form_spec, form_help)->required();
  aut->add_option("--precision", precision, prec_help);
  aut->add_option("--denom-bound", denom, "Denominator bound for rational reconstruction (default 1000000)");

  // solve
  auto* solve = app.add_subcommand("solve", "Primitive solutions of |F(x, y)| = t p^z in a height box (JSONL)");
  std::string p_text, lambda_text = "0", out_file;
  int k = 0;
  bool any_z = false, brute = false;
  long height = 0;
  unsigned threads = 1;
  solve->add_option("--form", form_spec, form_help)->required();
  solve->add_option("--p", p_text, "Prime p")->required();
  auto* k_opt = solve->add_option("--k", k, "Exact exponent k (Thue type)");
  auto* z_opt = solve->add_flag("--any-z", any_z, "Any exponent z >= 1 (Thue-Mahler type)");
  k_opt->excludes(z_opt);
  solve->add_option("--lambda", lambda_text, "Exact rational r/q: keep t^q <= p^(z r) (default 0)");
  solve->add_option("--height", height, "Height bound H: max(|x|, |y|) <= H")->required();
  solve->add_option("--out", out_file, "Write JSONL here instead of stdout");
  solve->add_option("--threads", threads, "Worker threads (default 1)");
  solve->add_flag("--brute", brute, "Use the brute-force scan instead of the p-sieve");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Orbit-structure sweep over a prime range");
  std::string config_file, sweep_out, threshold_text, pmin_text, pmax_text;
  int kmax = 1;
  bool allow_any = false;
  sweep->add_option("--config", config_file, "JSON config with the same keys; flags override it");
  auto* s_form = sweep->add_option("--form", form_spec, form_help);
  auto* s_pmin = sweep->add_option("--pmin", pmin_text, "Smallest prime (default 2)");
  auto* s_pmax = sweep->add_option("--pmax", pmax_text, "Largest prime (default 100)");
  auto* s_kmax = sweep->add_option("--kmax", kmax, "Fixed-k mode with k = 1..kmax (default 1)");
  auto* s_anyz = sweep->add_flag("--any-z", any_z, "Thue-Mahler mode, z >= 1");
  s_kmax->excludes(s_anyz);
  auto* s_lambda = sweep->add_option("--lambda", lambda_text, "Exact rational lambda (default 0)");
  auto* s_height = sweep->add_option("--height", height, "Height bound (default 100)");
  auto* s_out = sweep->add_option("--out", sweep_out, "Output directory for reports.jsonl, solutions.jsonl, summary.csv");
  auto* s_threads = sweep->add_option("--threads", threads, "Worker threads over primes (default 1)");
  auto* s_threshold = sweep->add_option("--threshold", threshold_text, "Empirical threshold on p^k (default 10000)");
  auto* s_allow = sweep->add_flag("--allow-any-form", allow_any, "Skip the content-one and irreducibility checks");
  auto* s_prec = sweep->add_option("--precision", precision, prec_help);

  // bounds
  auto* bounds = app.add_subcommand("bounds", "Explicit bounds: f(d), mu, Theorem 2 count, A, Evertse (JSON)");
  std::string d_text, aut_text = "2";
  auto* b_d = bounds->add_option("--d", d_text, "Degree d (decimal, may be huge)");
  bounds->add_option("--lambda", lambda_text, "Exact rational lambda (default 0)");
  bounds->add_option("--aut", aut_text, "#Aut'|F| (default 2)");
  bounds->add_option("--form", form_spec, "Optional form for A and #Aut'");
  auto* table = bounds->add_subcommand("table", "CSV over a degree range, lambda = 1/2 - 4.05/(d + 2)");
  long dmin = 7, dmax = 30;
  table->add_option("--dmin", dmin, "Smallest d (default 7)");
  table->add_option("--dmax", dmax, "Largest d (default 30)");
  table->add_option("--aut", aut_text, "#Aut'|F| (default 2)");

  // check
  auto* check = app.add_subcommand("check", "Proof-chain inequalities and the Thunder root for one pair");
  std::string x_text, y_text;
  check->add_option("--form", form_spec, form_help)->required();
  check->add_option("--p", p_text, "Prime p")->required();
  check->add_option("--x", x_text, "x")->required();
  check->add_option("--y", y_text, "y")->required();
  check->add_option("--lambda", lambda_text, "Exact rational lambda (default 0)");
  check->add_option("--precision", precision, prec_help);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    const long prec = precision > 0 ? precision : default_precision_bits();
    if (prec < 64) throw DomainError("precision must be at least 64 bits");

    if (*forms) {
      std::cout << form_info(resolve_form_spec(form_spec), fast).dump(2) << "\n";
    } else if (*psi) {
      const PsiForm P = psi_form(psi_n);
      Json j = Json::object();
      j["n"] = P.n;
      j["phi"] = P.phi;
      j["degree"] = P.form.degree();
      j["form"] = to_json(P.form);
      j["expression"] = P.form.to_string();
      j["discriminant"] = to_json(discriminant(P.form));
      j["substitution_identity"] = psi_substitution_identity(P);
      j["roots_verified"] = psi_roots_verified(P);
      std::cout << j.dump(2) << "\n";
    } else if (*aut) {
      const BinaryForm F = resolve_form_spec(form_spec);
      const EnhancedAutGroup G = compute_aut_group(F, prec, parse_integer(denom, "denom-bound"));
      std::cout << aut_json(F, G, prec).dump(2) << "\n";
    } else if (*solve) {
      if (k_opt->count() == 0 && !any_z) throw DomainError("give --k or --any-z");
      Query Q;
      Q.F = resolve_form_spec(form_spec);
      Q.p = parse_prime(p_text);
      Q.mode = any_z ? SolveMode::AnyZ : SolveMode::FixedK;
      Q.k = k;
      Q.lambda = parse_rational(lambda_text);
      Q.height = height;
      Q.threads = std::max(1u, threads);
      const auto sols = brute ? solve_bruteforce(Q) : solve_sieved(Q);
      std::string body;
      for (const auto& s : sols) body += to_json(s, Q.p).dump() + "\n";
      if (out_file.empty()) {
        std::cout << body;
      } else {
        std::ofstream f(out_file, std::ios::binary);
        if (!f || !(f << body)) throw ComputationError("cannot write " + out_file);
        std::cerr << sols.size() << " solutions written to " << out_file << "\n";
      }
    } else if (*sweep) {
      SweepConfig cfg;
      cfg.precision_bits = default_precision_bits();
      if (!config_file.empty()) {
        Json j;
        try {
          j = Json::parse(slurp(config_file));
        } catch (const nlohmann::json::parse_error& e) {
          throw DomainError(std::string("malformed config: ") + e.what());
        }
        cfg = sweep_config_from_json(j);
      }
      if (s_form->count()) cfg.form_spec = form_spec;
      if (s_pmin->count()) cfg.pmin = parse_integer(pmin_text, "pmin").get_ui();
      if (s_pmax->count()) cfg.pmax = parse_integer(pmax_text, "pmax").get_ui();
      if (s_kmax->count()) {
        cfg.mode = SolveMode::FixedK;
        cfg.kmax = kmax;
      }
      if (s_anyz->count()) cfg.mode = SolveMode::AnyZ;
      if (s_lambda->count()) cfg.lambda = parse_rational(lambda_text);
      if (s_height->count()) cfg.height = height;
      if (s_out->count()) cfg.out_dir = sweep_out;
      if (s_threads->count()) cfg.threads = threads;
      if (s_threshold->count()) cfg.threshold = parse_integer(threshold_text, "threshold");
      if (s_allow->count()) cfg.allow_any_form = allow_any;
      if (s_prec->count()) cfg.precision_bits = precision;
      const SweepResult res = run_sweep(cfg);
      if (!cfg.out_dir.empty()) write_sweep_outputs(res, cfg.out_dir);
      Json j = Json::object();
      j["config"] = to_json(cfg);
      j["form"] = to_json(res.F);
      Json classes = Json::array();
      for (const auto& c : res.group.classes) classes.push_back(to_json(c.matrix));
      j["aut_classes"] = std::move(classes);
      j["aut_cardinality"] = res.group.cardinality();
      j["orbit_relation_verified"] = res.orbit_relation_verified;
      j["reports"] = res.reports.size();
      long errors = 0;
      for (const auto& r : res.reports) errors += r.error.empty() ? 0 : 1;
      j["reports_with_errors"] = errors;
      const PairingResult pr = verify_corollary_pairing(res.reports);
      j["negation_pairs"] = pr.negation_pairs;
      j["multiple_canonical_solutions"] = pr.multiple;
      Json subs = Json::array(), viol = Json::array();
      for (const auto* r : sub_threshold_exceptions(res.reports)) subs.push_back(to_json(*r));
      for (const auto* r : threshold_violations(res.reports)) viol.push_back(to_json(*r));
      j["sub_threshold_exceptions"] = std::move(subs);
      j["threshold_violations"] = std::move(viol);
      j["notes"] = res.notes;
      if (cfg.out_dir.empty()) {
        Json all = Json::array();
        for (const auto& r : res.reports) all.push_back(to_json(r));
        j["reports_detail"] = std::move(all);
      }
      std::cout << j.dump(2) << "\n";
    } else if (*bounds) {
      const Integer aut_n = parse_integer(aut_text, "aut");
      if (*table) {
        if (dmin < 7 || dmax < dmin) throw DomainError("need 7 <= dmin <= dmax");
        if (aut_n < 1) throw DomainError("aut must be at least 1");
        std::cout << "d,f_d,lambda,g_d,theorem2_count,evertse_log10_t1\n";
        for (long d = dmin; d <= dmax; ++d) {
          const Rational lam = g_lambda(d);
          std::cout << d << ',' << f_of_d(d).to_string(12) << ',' << to_string(lam) << ','
                    << g_of_d(d).to_string(12) << ',' << to_string(theorem2_bound(d, lam, aut_n)) << ','
                    << evertse_log10(d, 1).to_string(12) << '\n';
        }
      } else {
        if (b_d->count() == 0 && form_spec.empty()) throw DomainError("give --d or --form");
        std::optional<BinaryForm> F;
        Integer aut_card = aut_n;
        if (!form_spec.empty()) {
          F = resolve_form_spec(form_spec);
          if (F->degree() >= 3) aut_card = Integer(static_cast<unsigned long>(compute_aut_group(*F, prec).cardinality()));
        }
        const Integer d = b_d->count() ? parse_integer(d_text, "d") : Integer(F->degree());
        Json j = bound_json(make_bound_report(d, parse_rational(lambda_text), aut_card, F ? &*F : nullptr));
        if (d >= 7) {
          const Corollary2Check c = corollary2_discrepancy(d);
          j["corollary2_remark"] = Json{{"aut", 2},
                                        {"count_with_lambda_1/2-4.05/(d+2)", to_json(c.with_g_lambda)},
                                        {"count_with_lambda_1-8.5/(d+2)", to_json(c.with_stated_lambda)},
                                        {"inner_with_lambda_1-8.5/(d+2)", to_json(c.inner_stated)},
                                        {"note", "the remark's 166 matches the first lambda, not the stated one"}};
        }
        if (F) j["C0"] = to_json(compute_C0(*F));
        std::cout << j.dump(2) << "\n";
      }
    } else if (*check) {
      const BinaryForm F = resolve_form_spec(form_spec);
      const std::uint64_t p = parse_prime(p_text);
      const Integer x = parse_integer(x_text, "x"), y = parse_integer(y_text, "y");
      if (gcd(x, y) != 1) throw DomainError("gcd(x, y) must be 1");
      const Integer pz = static_cast<unsigned long>(p);
      Solution s;
      s.x = x;
      s.y = y;
      s.N = abs(evaluate(F, x, y));
      if (s.N == 0) throw DomainError("F(x, y) = 0");
      s.z = static_cast<long>(vp_unchecked(s.N, pz));
      s.t = s.N / ipow(pz, static_cast<unsigned long>(s.z));
      const Rational lambda = parse_rational(lambda_text);
      Json j = Json::object();
      j["solution"] = to_json(s, p);
      j["lambda_ok"] = s.z >= 1 && lambda_check(s.t, pz, s.z, lambda);
      j["chain"] = chain_json(check_proof_chain(F, p, lambda, s, compute_C0(F), prec));
      std::cout << j.dump(2) << "\n";
    }
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const ComputationError& e) {
    std::cerr << "computation error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "computation error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
