#include "thuelab/harness.hpp"

#include "thuelab/arith.hpp"
#include "thuelab/bounds.hpp"
#include "thuelab/cyclotomic.hpp"
#include "thuelab/error.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>
#include <tuple>

namespace thuelab {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

std::uint64_t parse_u64(const std::string& text, const char* what) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw DomainError(std::string(what) + " must be a non-negative integer, got \"" + text + "\"");
  try {
    return std::stoull(text);
  } catch (const std::out_of_range&) {
    throw DomainError(std::string(what) + " out of range: " + text);
  }
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

EnhancedAutGroup trivial_group() {
  EnhancedAutGroup G;
  G.classes.push_back(AutElement{IntMatrix2::identity(), true});
  G.closed = true;
  return G;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c == '\n' ? ' ' : c;
  }
  return out + "\"";
}

const char* exponent_name(SolveMode m) { return m == SolveMode::FixedK ? "k" : "z"; }

struct Context {
  const SweepConfig& cfg;
  const BinaryForm& F;
  const EnhancedAutGroup& G;
  std::optional<Integer> bound;
  std::optional<Interval> f_d;
  bool lambda_below_f = false;
};

OrbitReport make_report(const Context& ctx, std::uint64_t p, std::optional<long> exponent, std::vector<Solution> sols) {
  OrbitReport r;
  r.p = p;
  r.mode = ctx.cfg.mode;
  r.exponent = exponent;
  r.solutions = std::move(sols);
  r.aut_cardinality = ctx.G.cardinality();
  r.lambda = ctx.cfg.lambda;
  r.f_d = ctx.f_d;
  r.lambda_below_f = ctx.lambda_below_f;
  r.theorem2_bound = ctx.bound;
  r.determinant_law_verified = assign_orbits(ctx.F, ctx.G, r.solutions, r.orbit_count);
  for (const auto& s : r.solutions) r.max_t = std::max(r.max_t, s.t);
  r.theorem1_holds = static_cast<std::size_t>(r.signed_count()) <= r.aut_cardinality;
  if (ctx.bound) r.theorem2_holds = Integer(r.signed_count()) <= *ctx.bound;
  const Integer pz = static_cast<unsigned long>(p);
  r.above_threshold = ipow(pz, static_cast<unsigned long>(exponent.value_or(1))) > ctx.cfg.threshold;
  if (!r.determinant_law_verified) r.error = "an Aut' image breaks the determinant law";
  return r;
}

std::vector<OrbitReport> sweep_prime(const Context& ctx, std::uint64_t p) {
  const SweepConfig& cfg = ctx.cfg;
  Query Q;
  Q.F = ctx.F;
  Q.p = p;
  Q.mode = cfg.mode;
  Q.lambda = cfg.lambda;
  Q.height = cfg.height;
  std::vector<OrbitReport> out;
  try {
    if (cfg.mode == SolveMode::FixedK) {
      for (int k = 1; k <= cfg.kmax; ++k) {
        Q.k = k;
        out.push_back(make_report(ctx, p, k, solve_sieved(Q)));
      }
    } else {
      std::map<long, std::vector<Solution>> by_z;
      for (auto& s : solve_sieved(Q)) by_z[s.z].push_back(std::move(s));
      long total = 0;
      for (const auto& [z, v] : by_z) total += 2 * static_cast<long>(v.size());
      if (by_z.empty()) out.push_back(make_report(ctx, p, std::nullopt, {}));
      for (auto& [z, v] : by_z) out.push_back(make_report(ctx, p, z, std::move(v)));
      for (auto& r : out) {
        r.prime_signed_total = total;
        if (ctx.bound) r.theorem2_prime_holds = Integer(total) <= *ctx.bound;
      }
    }
  } catch (const std::exception& e) {
    out.clear();
    OrbitReport r;
    r.p = p;
    r.mode = cfg.mode;
    r.lambda = cfg.lambda;
    r.aut_cardinality = ctx.G.cardinality();
    r.error = e.what();
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

BinaryForm resolve_form_spec(const std::string& spec) {
  const std::string s = trim(spec);
  if (s.empty()) throw DomainError("empty form spec");
  if (s.rfind("psi:", 0) == 0) {
    const std::uint64_t n = parse_u64(trim(s.substr(4)), "psi index");
    return psi_form(n).form;
  }
  return parse_form(s);
}

long default_precision_bits() {
  const char* env = std::getenv("THUELAB_PRECISION_BITS");
  if (env == nullptr || *env == '\0') return 256;
  const std::uint64_t v = parse_u64(trim(env), "THUELAB_PRECISION_BITS");
  if (v < 64 || v > (1u << 16)) throw DomainError("THUELAB_PRECISION_BITS must lie in [64, 65536]");
  return static_cast<long>(v);
}

void SweepConfig::validate() const {
  if (form_spec.empty()) throw DomainError("a form is required");
  if (pmin > pmax) throw DomainError("pmin must not exceed pmax");
  if (pmax >= (1ULL << 40)) throw DomainError("pmax too large");
  if (height < 1) throw DomainError("height bound must be at least 1");
  if (lambda < 0) throw DomainError("lambda must be non-negative");
  if (mode == SolveMode::FixedK && kmax < 1) throw DomainError("kmax must be at least 1");
  if (precision_bits < 64) throw DomainError("precision must be at least 64 bits");
  if (threshold < 0) throw DomainError("threshold must be non-negative");
  if (threads < 1) throw DomainError("threads must be at least 1");
}

SweepConfig sweep_config_from_json(const Json& j) {
  if (!j.is_object()) throw DomainError("config must be a JSON object");
  SweepConfig c;
  c.precision_bits = default_precision_bits();
  auto as_u64 = [](const Json& v, const char* key) {
    const Integer x = integer_from_json(v);
    if (x < 0 || !x.fits_ulong_p()) throw DomainError(std::string(key) + " out of range");
    return static_cast<std::uint64_t>(x.get_ui());
  };
  auto as_bool = [](const Json& v, const char* key) {
    if (!v.is_boolean()) throw DomainError(std::string(key) + " must be true or false");
    return v.get<bool>();
  };
  for (const auto& [key, v] : j.items()) {
    if (key == "form") {
      c.form_spec = v.is_string() ? v.get<std::string>() : v.dump();
    } else if (key == "pmin") {
      c.pmin = as_u64(v, "pmin");
    } else if (key == "pmax") {
      c.pmax = as_u64(v, "pmax");
    } else if (key == "kmax") {
      c.kmax = static_cast<int>(std::min<std::uint64_t>(as_u64(v, "kmax"), 1000));
    } else if (key == "any_z") {
      c.mode = as_bool(v, "any_z") ? SolveMode::AnyZ : SolveMode::FixedK;
    } else if (key == "lambda") {
      c.lambda = parse_rational(v.is_string() ? v.get<std::string>() : v.dump());
    } else if (key == "height") {
      c.height = static_cast<long>(std::min<std::uint64_t>(as_u64(v, "height"), 1ULL << 40));
    } else if (key == "out") {
      if (!v.is_string()) throw DomainError("out must be a string");
      c.out_dir = v.get<std::string>();
    } else if (key == "precision_bits") {
      c.precision_bits = static_cast<long>(std::min<std::uint64_t>(as_u64(v, "precision_bits"), 1 << 16));
    } else if (key == "denom_bound") {
      c.denom_bound = integer_from_json(v);
    } else if (key == "threads") {
      c.threads = static_cast<unsigned>(std::min<std::uint64_t>(as_u64(v, "threads"), 256));
    } else if (key == "threshold") {
      c.threshold = integer_from_json(v);
    } else if (key == "allow_any_form") {
      c.allow_any_form = as_bool(v, "allow_any_form");
    } else {
      throw DomainError("unknown config key \"" + key + "\"");
    }
  }
  return c;
}

Json to_json(const SweepConfig& c) {
  Json j = Json::object();
  j["form"] = c.form_spec;
  j["pmin"] = c.pmin;
  j["pmax"] = c.pmax;
  j["any_z"] = c.mode == SolveMode::AnyZ;
  if (c.mode == SolveMode::FixedK) j["kmax"] = c.kmax;
  j["lambda"] = to_json(c.lambda);
  j["height"] = c.height;
  j["precision_bits"] = c.precision_bits;
  j["denom_bound"] = to_json(c.denom_bound);
  j["threshold"] = to_json(c.threshold);
  j["allow_any_form"] = c.allow_any_form;
  return j;
}

bool assign_orbits(const BinaryForm& F, const EnhancedAutGroup& G, std::vector<Solution>& sols, long& orbit_count) {
  const unsigned long d = static_cast<unsigned long>(F.degree());
  std::map<std::pair<Integer, Integer>, std::size_t> index;
  for (std::size_t i = 0; i < sols.size(); ++i) index[{sols[i].x, sols[i].y}] = i;
  UnionFind uf(sols.size());
  bool law = true;
  for (std::size_t i = 0; i < sols.size(); ++i) {
    const Integer v = evaluate(F, sols[i].x, sols[i].y);
    for (const auto& el : G.classes) {
      const MobiusImage img = apply_mobius(el.matrix, sols[i].x, sols[i].y);
      // M (x, y) = factor (x', y') and F(M (x, y))^2 = |det M|^d F(x, y)^2.
      const Integer w = evaluate(F, img.x, img.y);
      if (w * w * ipow(img.factor, 2 * d) != ipow(abs(el.matrix.det()), d) * v * v) {
        law = false;
        continue;
      }
      auto it = index.find({img.x, img.y});
      if (it != index.end()) uf.unite(i, it->second);
    }
  }
  std::map<std::size_t, long> ids;
  for (std::size_t i = 0; i < sols.size(); ++i) {
    const std::size_t root = uf.find(i);
    auto it = ids.find(root);
    if (it == ids.end()) it = ids.emplace(root, static_cast<long>(ids.size())).first;
    sols[i].orbit_id = it->second;
  }
  orbit_count = static_cast<long>(ids.size());
  return law;
}

SweepResult run_sweep(const SweepConfig& cfg) {
  cfg.validate();
  SweepResult res;
  res.F = resolve_form_spec(cfg.form_spec);
  const BinaryForm& F = res.F;
  if (!cfg.allow_any_form) {
    if (content(F) != 1) throw DomainError("form must have content one (or pass --allow-any-form)");
    if (is_irreducible(F).status != Irreducibility::Irreducible)
      throw DomainError("form must be irreducible (or pass --allow-any-form)");
  } else if (content(F) != 1) {
    throw DomainError("the solver needs content one");
  }
  const int d = F.degree();
  if (d >= 3 && F.leading() != 0) {
    res.group = compute_aut_group(F, cfg.precision_bits, cfg.denom_bound);
  } else {
    res.group = trivial_group();
    res.notes.push_back("Aut' not computed for this form (needs d >= 3 and c_d != 0); orbits use {+-I}");
  }
  const EnhancedAutGroup& G = res.group;
  for (const auto& w : G.warnings) res.notes.push_back("Aut': " + w);
  res.orbit_relation_verified = G.contains(IntMatrix2::identity()) && G.closed;

  Context ctx{cfg, F, G, std::nullopt, std::nullopt, false};
  if (d >= 7) {
    ctx.f_d = f_of_d(d);
    ctx.lambda_below_f = certainly_less(Interval(cfg.lambda, 128), *ctx.f_d);
    if (cfg.mode == SolveMode::AnyZ && cfg.lambda < theorem2_lambda_limit(d))
      ctx.bound = theorem2_bound(d, cfg.lambda, Integer(static_cast<unsigned long>(G.cardinality())));
  }
  if (!ctx.bound) res.notes.push_back("no Theorem 2 bound for this configuration (needs any-z, d >= 7, lambda in range)");

  const auto primes = primes_in_range(cfg.pmin, cfg.pmax);
  std::vector<std::vector<OrbitReport>> per_prime(primes.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < primes.size(); i = next++) per_prime[i] = sweep_prime(ctx, primes[i]);
  };
  const unsigned n = std::min<unsigned>(cfg.threads, static_cast<unsigned>(std::max<std::size_t>(primes.size(), 1)));
  if (n <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < n; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (auto& v : per_prime) std::move(v.begin(), v.end(), std::back_inserter(res.reports));
  return res;
}

PairingResult verify_corollary_pairing(const std::vector<OrbitReport>& reports) {
  PairingResult out;
  for (const auto& r : reports) {
    const auto full = expand_negations(r.solutions);
    std::set<std::tuple<Integer, Integer, Integer, Integer>> seen;
    for (const auto& s : full) seen.emplace(s.x, s.y, s.N, s.t);
    for (const auto& s : full)
      if (!seen.count({-s.x, -s.y, s.N, s.t})) out.negation_pairs = false;
    if (full.size() != 2 * r.solutions.size()) out.negation_pairs = false;
    if (r.solutions.size() > 1) {
      std::string label = "p=" + std::to_string(r.p);
      if (r.exponent) label += std::string(" ") + exponent_name(r.mode) + "=" + std::to_string(*r.exponent);
      out.multiple.push_back(label + ": " + std::to_string(r.solutions.size()));
    }
  }
  return out;
}

std::vector<const OrbitReport*> sub_threshold_exceptions(const std::vector<OrbitReport>& reports) {
  std::vector<const OrbitReport*> out;
  for (const auto& r : reports)
    if (r.violation() && !r.above_threshold) out.push_back(&r);
  return out;
}

std::vector<const OrbitReport*> threshold_violations(const std::vector<OrbitReport>& reports) {
  std::vector<const OrbitReport*> out;
  for (const auto& r : reports)
    if (r.violation() && r.above_threshold) out.push_back(&r);
  return out;
}

Json to_json(const Solution& s, std::uint64_t p) {
  Json j = Json::object();
  j["x"] = to_json(s.x);
  j["y"] = to_json(s.y);
  j["N"] = to_json(s.N);
  j["p"] = p;
  j["z"] = s.z;
  j["t"] = to_json(s.t);
  if (s.orbit_id) j["orbit"] = *s.orbit_id;
  return j;
}

Json to_json(const OrbitReport& r) {
  Json j = Json::object();
  j["p"] = r.p;
  j["mode"] = to_string(r.mode);
  j[exponent_name(r.mode)] = r.exponent ? Json(*r.exponent) : Json(nullptr);
  Json sols = Json::array();
  for (const auto& s : r.solutions) sols.push_back(to_json(s, r.p));
  j["solutions"] = std::move(sols);
  j["solution_count"] = r.solutions.size();
  j["signed_count"] = r.signed_count();
  j["orbit_count"] = r.orbit_count;
  j["max_t"] = to_json(r.max_t);
  j["aut_cardinality"] = r.aut_cardinality;
  j["theorem1_holds"] = r.theorem1_holds;
  j["theorem2_bound"] = r.theorem2_bound ? to_json(*r.theorem2_bound) : Json(nullptr);
  j["theorem2_holds"] = r.theorem2_holds;
  if (r.prime_signed_total) {
    j["prime_signed_total"] = *r.prime_signed_total;
    j["theorem2_prime_holds"] = r.theorem2_prime_holds;
  }
  j["above_threshold"] = r.above_threshold;
  j["lambda"] = to_json(r.lambda);
  j["f_d"] = r.f_d ? to_json(*r.f_d) : Json(nullptr);
  j["lambda_below_f"] = r.lambda_below_f;
  j["determinant_law_verified"] = r.determinant_law_verified;
  j["error"] = r.error;
  return j;
}

std::string reports_jsonl(const SweepResult& res) {
  std::string out;
  for (const auto& r : res.reports) out += to_json(r).dump() + "\n";
  return out;
}

std::string solutions_jsonl(const SweepResult& res) {
  std::string out;
  for (const auto& r : res.reports)
    for (const auto& s : r.solutions) out += to_json(s, r.p).dump() + "\n";
  return out;
}

std::string summary_csv(const SweepResult& res) {
  std::ostringstream os;
  os << "p,exponent,solutions,orbits,max_t,theorem2_bound,theorem1_holds,theorem2_holds,above_threshold,error\n";
  for (const auto& r : res.reports) {
    os << r.p << ',' << (r.exponent ? std::to_string(*r.exponent) : "") << ',' << r.solutions.size() << ','
       << r.orbit_count << ',' << to_string(r.max_t) << ',' << (r.theorem2_bound ? to_string(*r.theorem2_bound) : "")
       << ',' << (r.theorem1_holds ? "true" : "false") << ',' << (r.theorem2_holds ? "true" : "false") << ','
       << (r.above_threshold ? "true" : "false") << ',' << csv_field(r.error) << '\n';
  }
  return os.str();
}

void write_sweep_outputs(const SweepResult& res, const std::string& dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw ComputationError("cannot create " + dir + ": " + ec.message());
  auto put = [&dir](const std::string& name, const std::string& body) {
    const fs::path path = fs::path(dir) / name;
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ComputationError("cannot write " + path.string());
    f << body;
    if (!f) throw ComputationError("write failed: " + path.string());
  };
  put("reports.jsonl", reports_jsonl(res));
  put("solutions.jsonl", solutions_jsonl(res));
  put("summary.csv", summary_csv(res));
}

}  // namespace thuelab
