/*
   Copyright 2026 The knotfm Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "knotfm/certificate.hpp"

namespace knotfm::cli {

namespace {

using json = nlohmann::ordered_json;

// Thrown for input problems that map to the usage exit code.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

u64 config_u64(const json& v, const char* key) {
  if (v.is_number_unsigned()) return v.get<u64>();
  if (v.is_string()) {
    const std::string& s = v.get_ref<const std::string&>();
    u64 x = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
    if (!s.empty() && ec == std::errc{} && ptr == s.data() + s.size()) return x;
  }
  throw std::invalid_argument(std::string("config: '") + key + "' must be a non-negative integer");
}

OracleLevel parse_level(const std::string& s) {
  if (s == "off") return OracleLevel::Off;
  if (s == "composite") return OracleLevel::CompositeOnly;
  if (s == "always") return OracleLevel::Always;
  throw std::invalid_argument("oracle level must be off, composite or always, got '" + s + "'");
}

DecideOptions decide_options(const Config& c, bool collect_all = false) {
  DecideOptions o;
  o.oracle.level = c.oracle;
  o.oracle.max_degree = c.oracle_max_degree;
  o.oracle.seed = c.seed;
  o.collect_all = collect_all;
  o.max_a = c.max_a;
  return o;
}

void print_certificate(std::ostream& out, const Certificate& c) {
  out << "a = " << c.a << "\n";
  out << "verdict: " << to_string(c.verdict) << "\n";
  if (c.witness) out << "witness: p = " << c.witness->p << ", d = " << c.witness->d << "\n";
  out << "reason: " << reason(c) << "\n";
  out << "theorem tags:";
  if (c.theorem_tags.empty()) out << " none";
  for (const auto& t : c.theorem_tags) out << " " << t;
  out << "\n";
  if (!c.note.empty()) out << "note: " << c.note << "\n";
}

int cmd_check(const Config& cfg, u64 a, bool as_json, bool all, const std::string& path, std::ostream& out) {
  try {
    PretzelParam::make(a, cfg.max_a);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const Certificate c = decide(a, decide_options(cfg, all));
  const json j = to_json(c);
  if (as_json)
    out << j.dump(2) << "\n";
  else
    print_certificate(out, c);
  if (!path.empty()) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << j.dump(2) << "\n";
  }
  return is_obstructed(c.verdict) ? kOk : kInconclusive;
}

std::vector<u64> parse_residues(const std::string& s) {
  std::vector<u64> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    u64 x = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), x);
    if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size())
      throw UsageError("invalid residue '" + item + "'");
    out.push_back(x);
  }
  if (out.empty()) throw UsageError("empty residue list");
  return out;
}

int cmd_scan(const Config& cfg, u64 lo, u64 hi, u64 modulus, const std::string& residues, unsigned jobs,
             const std::string& prefix, std::ostream& out, std::ostream& err) {
  ScanRequest r{lo, hi, std::nullopt};
  if (modulus != 0 || !residues.empty()) {
    if (modulus == 0 || residues.empty()) throw UsageError("--mod and --residues go together");
    r.filter = ResidueFilter{modulus, parse_residues(residues)};
  }
  try {
    validate(r);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (hi > cfg.max_a) throw UsageError("max exceeds the configured bound " + std::to_string(cfg.max_a));
  if (jobs == 0) throw UsageError("--jobs must be at least 1");

  std::ofstream jsonl, csv;
  std::ostream* lines = &out;
  std::ostream* summary = &err;
  if (!prefix.empty()) {
    jsonl.open(prefix + ".jsonl");
    csv.open(prefix + ".csv");
    if (!jsonl || !csv) throw std::runtime_error("cannot write " + prefix + ".{jsonl,csv}");
    csv << csv_header() << "\n";
    lines = &jsonl;
    summary = &out;
  }
  const ScanReport rep = scan(r, decide_options(cfg), jobs, [&](const Certificate& c) {
    *lines << to_json(c).dump() << "\n";
    if (csv.is_open()) csv << csv_row(c) << "\n";
  });
  const json s = to_json(rep);
  if (!prefix.empty()) {
    std::ofstream f(prefix + ".summary.json");
    f << s.dump(2) << "\n";
  }
  *summary << "scanned " << rep.total << " values: " << rep.parity << " parity, " << rep.self_reciprocal
           << " self-reciprocal, " << rep.mod_p << " mod-p, " << rep.inconclusive_count << " inconclusive\n";
  *summary << "inconclusive:";
  for (u64 a : rep.inconclusive) *summary << " " << a;
  *summary << "\nprime-only checking would differ on " << rep.prime_only_differs.size()
           << " values; the full mod-p test decided " << rep.modp_fired.size() << "\n";
  return rep.inconclusive.empty() ? kOk : kInconclusive;
}

int cmd_cyclotomic(const Config& cfg, u64 d, u64 p, std::ostream& out) {
  CyclotomicQuery q{};
  try {
    q = CyclotomicQuery::make(d, p);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  const FactorMultiset m = factor_cyclotomic_oracle(q, cfg.seed);
  const FactorCountReport c = count_irreducible_factors(q);
  OracleOptions off;
  off.level = OracleLevel::Off;
  const SelfReciprocalEvidence sr = has_self_reciprocal_factor(q, off);
  out << "Phi_" << d << " mod " << p << ": " << m.factors.size() << " irreducible factors of degree "
      << c.degree_each << " (phi = " << c.phi << ")\n";
  for (const Factor& f : m.factors)
    out << "  " << to_string(f.poly) << (is_self_reciprocal_factor(f.poly) ? "   [self-reciprocal]" : "") << "\n";
  out << "count parity: " << (c.parity == Parity::Even ? "even" : "odd");
  if (c.legendre_check) out << " ((p/d) = " << *c.legendre_check << ")";
  out << "\nself-reciprocal factor: " << (has_self_reciprocal_member(m) ? "yes" : "no");
  if (sr.w) out << " (p^" << *sr.w << " = -1 mod " << d << ")";
  out << "\n";
  return kOk;
}

int cmd_legendre(i64 n, u64 d, std::ostream& out) {
  if (d < 3 || d % 2 == 0 || !is_prime(d)) throw UsageError("d must be an odd prime");
  out << legendre(n, d) << "\n";
  return kOk;
}

int cmd_alexander(const Config& cfg, u64 a, u64 p, std::ostream& out) {
  std::optional<PretzelParam> P;
  try {
    P = PretzelParam::make(a, cfg.max_a);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  out << "Delta = " << to_string(alexander_poly(*P)) << "\n";
  if (p == 0) return kOk;
  if (!is_prime(p) || P->half_plus_one() % p != 0)
    throw UsageError("p must be a prime dividing (a+1)/2 = " + std::to_string(P->half_plus_one()));
  out << "Delta mod " << p << " = " << to_string(alexander_mod_p(*P, p)) << "\n";
  OracleOptions o;
  o.level = cfg.oracle;
  o.max_degree = cfg.oracle_max_degree;
  o.seed = cfg.seed;
  const FoxMilnorStatus st = fox_milnor_status(*P, p, o);
  if (st.factorization) {
    out << "factorization mod " << p << ":\n";
    for (const Factor& f : st.factorization->factors) {
      const bool sr = is_self_reciprocal_factor(f.poly);
      out << "  (" << to_string(f.poly) << ")^" << f.multiplicity;
      if (sr && f.multiplicity % 2 == 1) out << "   <== self-reciprocal, multiplicity " << f.multiplicity;
      else if (sr) out << "   [self-reciprocal]";
      out << "\n";
    }
  } else {
    out << "pieces Phi_d(-t) mod " << p << " (degree above " << o.max_degree << ", listed per piece):\n";
    for (const FoxMilnorPiece& pc : st.pieces) {
      out << "  d = " << pc.d << ": " << pc.factor_count << " factors of degree " << pc.factor_degree
          << (pc.via_oracle ? " (factored)" : " (closed form)");
      if (pc.self_reciprocal) out << "   <== self-reciprocal, multiplicity 1";
      out << "\n";
    }
  }
  out << "Fox-Milnor mod " << p << ": "
      << (st.verdict == FoxMilnorVerdict::Admits ? "admits" : "obstructed") << "\n";
  return kOk;
}

int cmd_verify(const std::string& path, std::ostream& out, std::ostream& err) {
  std::ifstream f(path);
  if (!f) {
    err << "error: cannot read " << path << "\n";
    return kFailure;
  }
  std::stringstream buf;
  buf << f.rdbuf();
  const std::string text = buf.str();
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) {
    err << "parse error: " << path << " is empty\n";
    return kFailure;
  }
  Certificate c;
  try {
    c = certificate_from_json(json::parse(text));
  } catch (const std::exception& e) {
    err << "parse error: " << e.what() << "\n";
    return kFailure;
  }
  const VerifyResult r = verify_certificate(c);
  if (r.ok) {
    out << "ok: a = " << c.a << ", " << to_string(c.verdict) << "\n";
    return kOk;
  }
  out << "verification failed for a = " << c.a << ":\n";
  for (const auto& s : r.problems) out << "  - " << s << "\n";
  return kFailure;
}

}  // namespace

Config load_config(const char* path) {
  Config c;
  if (path == nullptr || *path == '\0') return c;
  std::ifstream f(path);
  if (!f) throw std::invalid_argument(std::string("config: cannot read ") + path);
  json j;
  try {
    j = json::parse(f);
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("config: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("config: expected a JSON object");
  for (const auto& [key, v] : j.items()) {
    if (key == "seed") c.seed = config_u64(v, "seed");
    else if (key == "max_a") c.max_a = config_u64(v, "max_a");
    else if (key == "jobs") c.jobs = static_cast<unsigned>(config_u64(v, "jobs"));
    else if (key == "oracle_max_degree") c.oracle_max_degree = config_u64(v, "oracle_max_degree");
    else if (key == "oracle") {
      if (!v.is_string()) throw std::invalid_argument("config: 'oracle' must be a string");
      c.oracle = parse_level(v.get<std::string>());
    } else {
      throw std::invalid_argument("config: unknown key '" + key + "'");
    }
  }
  if (c.jobs == 0) throw std::invalid_argument("config: 'jobs' must be at least 1");
  return c;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fox-Milnor obstructions for the pretzel knots P(a, -a-2, -(a+1)^2/2)", "knotfm"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  std::string config_path;
  std::optional<u64> seed, max_a, oracle_deg;
  std::string oracle;
  app.add_option("--config", config_path, "JSON config file (default: $KNOTFM_CONFIG)");
  app.add_option("--seed", seed, "seed for the randomized factoring oracle");
  app.add_option("--max-a", max_a, "largest accepted a");
  app.add_option("--oracle", oracle, "oracle confirmation: off, composite or always");
  app.add_option("--oracle-max-degree", oracle_deg, "largest degree handed to the factoring oracle");

  u64 a = 0;
  bool as_json = false, all = false;
  std::string cert_out;
  auto* check = app.add_subcommand("check", "decide one a and emit a certificate");
  check->add_option("a", a, "odd a >= 3")->required();
  check->add_flag("--json", as_json, "print the JSON certificate instead of the summary");
  check->add_flag("--all", all, "record every failing witness pair");
  check->add_option("--out", cert_out, "also write the JSON certificate to this file");

  u64 lo = 0, hi = 0, modulus = 0;
  std::string residues, prefix;
  std::optional<unsigned> jobs;
  auto* scan_cmd = app.add_subcommand("scan", "decide every odd a in [min, max]");
  scan_cmd->add_option("min", lo)->required();
  scan_cmd->add_option("max", hi)->required();
  scan_cmd->add_option("--mod", modulus, "residue filter modulus");
  scan_cmd->add_option("--residues", residues, "comma-separated residues kept by the filter");
  scan_cmd->add_option("--jobs", jobs, "worker threads");
  scan_cmd->add_option("--out", prefix, "write PREFIX.jsonl, PREFIX.csv and PREFIX.summary.json");

  auto* inspect = app.add_subcommand("inspect", "show cyclotomic, Legendre or Alexander data");
  inspect->require_subcommand(1);
  u64 cd = 0, cp = 0;
  auto* cyc = inspect->add_subcommand("cyclotomic", "factor Phi_d mod p");
  cyc->add_option("d", cd)->required();
  cyc->add_option("p", cp)->required();
  i64 ln = 0;
  u64 ld = 0;
  auto* leg = inspect->add_subcommand("legendre", "Legendre symbol (n/d)");
  leg->add_option("n", ln)->required();
  leg->add_option("d", ld)->required();
  u64 xa = 0, xp = 0;
  auto* alex = inspect->add_subcommand("alexander", "Alexander polynomial, optionally mod p");
  alex->add_option("a", xa)->required();
  alex->add_option("p", xp);

  std::string verify_path;
  auto* verify = app.add_subcommand("verify", "re-check a certificate from its evidence");
  verify->add_option("file", verify_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << "run with --help for usage\n";
    return kUsage;
  }

  try {
    Config cfg;
    try {
      cfg = load_config(config_path.empty() ? std::getenv("KNOTFM_CONFIG") : config_path.c_str());
      if (seed) cfg.seed = *seed;
      if (max_a) cfg.max_a = *max_a;
      if (oracle_deg) cfg.oracle_max_degree = *oracle_deg;
      if (!oracle.empty()) cfg.oracle = parse_level(oracle);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }

    if (*check) return cmd_check(cfg, a, as_json, all, cert_out, out);
    if (*scan_cmd) return cmd_scan(cfg, lo, hi, modulus, residues, jobs.value_or(cfg.jobs), prefix, out, err);
    if (*cyc) return cmd_cyclotomic(cfg, cd, cp, out);
    if (*leg) return cmd_legendre(ln, ld, out);
    if (*alex) return cmd_alexander(cfg, xa, xp, out);
    if (*verify) return cmd_verify(verify_path, out, err);
    err << "usage error: no command\n";
    return kUsage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
}

}  // namespace knotfm::cli
