#include "msetforge/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "msetforge/acceptance.hpp"
#include "msetforge/aurifeuille.hpp"
#include "msetforge/lehmer.hpp"
#include "msetforge/nt_core.hpp"
#include "msetforge/polycyc.hpp"
#include "msetforge/recsim.hpp"
#include "msetforge/witness.hpp"

namespace msetforge {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kError = 1;
constexpr int kNotCovered = 2;

Json coeff_list(const std::vector<Int>& coeffs) {
  Json out = Json::array();
  for (const auto& c : coeffs) out.push_back(c.get_str());
  return out;
}

Json poly_json(const IntPoly& f) { return coeff_list(f.coeffs()); }

Json witness_json(const Witness& w) {
  Json j;
  j["status"] = "ok";
  j["m"] = w.m;
  j["p"] = w.p.get_str();
  j["a"] = w.a.get_str();
  j["g"] = poly_json(w.g);
  j["route"] = to_string(w.route);
  j["checks"] = Json::array();
  for (const auto& c : w.checks) j["checks"].push_back({{"name", c.name}, {"ok", c.ok}});
  return j;
}

Int json_int(const Json& v) {
  if (v.is_string()) return parse_int(v.get<std::string>());
  if (v.is_number_integer()) return parse_int(std::to_string(v.get<long long>()));
  throw DomainError("expected an integer or decimal string");
}

Witness witness_from_json(const Json& j) {
  Witness w;
  w.m = j.at("m").get<std::uint64_t>();
  w.p = json_int(j.at("p"));
  w.a = json_int(j.at("a"));
  std::vector<Int> g;
  for (const auto& c : j.at("g")) g.push_back(json_int(c));
  w.g = IntPoly(std::move(g));
  if (j.contains("route")) w.route = parse_route(j.at("route").get<std::string>());
  return w;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

int emit_outcome(std::ostream& out, const WitnessOutcome& outcome) {
  if (const auto* w = std::get_if<Witness>(&outcome)) {
    emit(out, witness_json(*w));
    return kOk;
  }
  const auto& nc = std::get<NotCovered>(outcome);
  emit(out, Json{{"status", nc.budget_exhausted ? "partial" : "not-covered"}, {"reason", nc.reason}});
  return kNotCovered;
}

struct Options {
  // witness
  std::string t, g, root;
  int c = -1;
  std::uint64_t m = 0;
  // mset-scan
  std::uint64_t max_modulus = 0;
  std::uint64_t max_states = ScanBudget{}.max_states;
  bool all_states = false;
  std::string format = "csv";
  // lehmer
  std::string R, Q = "1";
  std::uint64_t u = 0, v = 0, phi = 0, primitive = 0;
  std::string rank, prime;
  // cyclotomic / resultant / aurifeuille
  std::uint64_t n = 0;
  std::string x, y, f, k;
  // two-squares
  std::uint64_t ell = 0;
  std::string d0, d1;
  // zsigmondy
  std::string a;
  // verify
  std::string suite, witness_file;
  std::vector<int> only;
  unsigned threads = 1;
};

int cmd_witness(const Options& o, std::ostream& out, const FactorBudget& budget) {
  const IntPoly g = parse_poly(o.g);
  if (!o.root.empty()) return emit_outcome(out, find_linear_witness(parse_int(o.root), g, o.m, budget));
  const QuadraticSeed seed(parse_int(o.t), o.c);
  return emit_outcome(out, find_witness(seed, g, o.m, budget));
}

int cmd_scan(const Options& o, std::ostream& out) {
  const IntPoly g = parse_poly(o.g);
  const ScanResult scan = mset_scan(g, o.max_modulus, ScanBudget{o.max_states}, o.threads, o.all_states);
  if (o.format == "json") {
    Json j;
    j["status"] = scan.partial ? "partial" : "ok";
    j["max_modulus"] = scan.max_modulus;
    j["hits"] = Json::array();
    for (const auto& [m, h] : scan.first_hit) {
      j["hits"].push_back({{"m", m}, {"M", h.M}, {"init", h.init}, {"tail", h.tail}, {"period", h.period}});
    }
    emit(out, j);
  } else {
    write_scan_csv(out, scan, o.all_states);
  }
  return scan.partial ? kNotCovered : kOk;
}

int cmd_lehmer(const Options& o, std::ostream& out, const FactorBudget& budget) {
  const LehmerParams params(parse_int(o.R), parse_int(o.Q));
  Json j;
  j["status"] = "ok";
  j["R"] = params.R().get_str();
  j["Q"] = params.Q().get_str();
  int selected = 0;
  if (o.u) {
    ++selected;
    j["n"] = o.u;
    j["u"] = lehmer_u(params, o.u).get_str();
  }
  if (o.v) {
    ++selected;
    j["n"] = o.v;
    j["v"] = lehmer_v_odd(params, o.v).get_str();
  }
  if (o.phi) {
    ++selected;
    j["n"] = o.phi;
    j["phi"] = phi_value(params, o.phi).get_str();
  }
  if (!o.rank.empty()) {
    ++selected;
    const auto r = rank_of_appearance(params, parse_int(o.rank), budget);
    j["p"] = o.rank;
    j["rank"] = r ? Json(r->get_str()) : Json(nullptr);
  }
  if (o.primitive) {
    ++selected;
    j["n"] = o.primitive;
    if (!o.prime.empty()) {
      const auto rep = is_primitive_divisor(params, parse_int(o.prime), o.primitive, budget);
      j["p"] = rep.prime.get_str();
      j["primitive"] = rep.is_primitive;
      j["reason"] = to_string(rep.reason);
      j["rank"] = rep.rank ? Json(rep.rank->get_str()) : Json(nullptr);
    } else {
      const auto pd = primitive_divisors(params, o.primitive, budget);
      j["phi"] = pd.phi.get_str();
      j["cofactor"] = pd.cofactor.get_str();
      j["primes"] = Json::array();
      for (const auto& p : pd.primes) j["primes"].push_back(p.get_str());
      j["unfactored"] = coeff_list(pd.unfactored);
      j["exists"] = pd.exists();
      if (!pd.complete()) {
        j["status"] = "partial";
        emit(out, j);
        return kNotCovered;
      }
    }
  }
  if (selected != 1) throw DomainError("lehmer: give exactly one of --u, --v, --phi, --rank, --primitive");
  emit(out, j);
  return kOk;
}

int cmd_cyclotomic(const Options& o, std::ostream& out) {
  const IntPoly f = cyclotomic(o.n);
  Json j{{"status", "ok"}, {"n", o.n}, {"coeffs", poly_json(f)}, {"pretty", pretty_poly(f)}};
  if (!o.x.empty() || !o.y.empty()) {
    const Int x = parse_int(o.x.empty() ? "1" : o.x);
    const Int y = parse_int(o.y.empty() ? "1" : o.y);
    j["x"] = x.get_str();
    j["y"] = y.get_str();
    j["value"] = cyclotomic_homog_value(o.n, x, y).value.get_str();
  }
  emit(out, j);
  return kOk;
}

int cmd_resultant(const Options& o, std::ostream& out) {
  const IntPoly f = parse_poly(o.f);
  const IntPoly g = o.g.empty() ? cyclotomic(o.m) : parse_poly(o.g);
  emit(out, Json{{"status", "ok"}, {"f", poly_json(f)}, {"g", poly_json(g)}, {"resultant", resultant(f, g).get_str()}});
  return kOk;
}

int cmd_aurifeuille(const Options& o, std::ostream& out) {
  const Int k = parse_int(o.k);
  const AuriPair pair = aurifeuillian_pair(o.n, k);
  emit(out, Json{{"status", "ok"},
                 {"n", pair.n},
                 {"k", pair.k.get_str()},
                 {"q", pair.q},
                 {"condition", to_string(applicable(o.n, k))},
                 {"F", coeff_list(pair.F.coeffs())},
                 {"G", coeff_list(pair.G.coeffs())},
                 {"sF", pair.sF},
                 {"sG", pair.sG},
                 {"verified", verify_pair(pair)}});
  return kOk;
}

int cmd_two_squares(const Options& o, std::ostream& out, const FactorBudget& budget) {
  const LehmerParams params(parse_int(o.R), parse_int(o.Q));
  Int d0, d1;
  if (o.d0.empty()) {
    const SquarefreeSplit split = squarefree_split(params.discriminant_product(), budget);
    d0 = split.d0;
    d1 = split.d1;
  } else {
    d0 = parse_int(o.d0);
    d1 = o.d1.empty() ? Int(1) : parse_int(o.d1);
  }
  const TwoSquares ts = two_squares(params, o.ell, d0, d1);
  emit(out, Json{{"status", "ok"},
                 {"ell", ts.ell},
                 {"phi", phi_value(params, o.ell).get_str()},
                 {"A", ts.A.get_str()},
                 {"B", ts.B.get_str()},
                 {"v", ts.v},
                 {"n", ts.n}});
  return kOk;
}

int cmd_zsigmondy(const Options& o, std::ostream& out, const FactorBudget& budget) {
  const ZsigmondyResult z = zsigmondy_witness(parse_int(o.a), o.m, budget);
  Json j{{"status", z.prime ? "ok" : "not-covered"}, {"a", o.a}, {"m", o.m}};
  j["prime"] = z.prime ? Json(z.prime->get_str()) : Json(nullptr);
  if (!z.prime) j["exception"] = z.exception;
  emit(out, j);
  return z.prime ? kOk : kNotCovered;
}

int cmd_verify(const Options& o, std::ostream& out) {
  if (!o.witness_file.empty()) {
    Json in;
    if (o.witness_file == "-") {
      in = Json::parse(std::cin);
    } else {
      std::ifstream file(o.witness_file);
      if (!file) throw DomainError("cannot open " + o.witness_file);
      in = Json::parse(file);
    }
    const Witness w = witness_from_json(in);
    const bool ok = verify_witness(w);
    emit(out, Json{{"status", "ok"}, {"m", w.m}, {"p", w.p.get_str()}, {"a", w.a.get_str()}, {"valid", ok}});
    return ok ? kOk : kError;
  }
  if (o.suite != "paper" && o.suite != "acceptance") throw DomainError("verify: unknown suite '" + o.suite + "'");
  AcceptanceOptions options;
  options.threads = o.threads;
  options.only.insert(o.only.begin(), o.only.end());
  const auto results = run_acceptance(options);
  bool all = true;
  Json j;
  j["criteria"] = Json::array();
  for (const auto& r : results) {
    all = all && r.pass;
    j["criteria"].push_back({{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"detail", r.detail}});
  }
  j["status"] = "ok";
  j["all_pass"] = all;
  emit(out, j);
  return all ? kOk : kError;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Residue-count certificates for integer linear recurrences", "msetforge"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_help_all_flag("--help-all");
  Options o;
  app.add_option("--threads", o.threads, "worker threads for library-level parallelism")->check(CLI::PositiveNumber);

  auto* witness = app.add_subcommand("witness", "certify m for a recurrence with characteristic polynomial g");
  witness->add_option("--t", o.t, "trace t of f = X^2 - tX + c");
  witness->add_option("--c", o.c, "constant c = +1 or -1");
  witness->add_option("--root", o.root, "use the linear factor X - root of g instead of a quadratic seed");
  witness->add_option("--g", o.g, "g as constant-first coefficients")->required();
  witness->add_option("--m", o.m, "residue count")->required();

  auto* scan = app.add_subcommand("mset-scan", "enumerate every initial tuple modulo 2..M");
  scan->add_option("--g", o.g, "g as constant-first coefficients")->required();
  scan->add_option("--max-modulus", o.max_modulus, "largest modulus")->required();
  scan->add_option("--max-states", o.max_states, "state budget summed over all moduli");
  scan->add_flag("--all-states", o.all_states, "one row per initial tuple");
  scan->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  auto* lehmer = app.add_subcommand("lehmer", "Lehmer sequence with R = (gamma + delta)^2, Q = gamma delta");
  lehmer->add_option("--R", o.R, "R")->required();
  lehmer->add_option("--Q", o.Q, "Q (default 1)");
  lehmer->add_option("--u", o.u, "u_n");
  lehmer->add_option("--v", o.v, "v_n for odd n");
  lehmer->add_option("--phi", o.phi, "Phi_n(gamma, delta)");
  lehmer->add_option("--rank", o.rank, "rank of appearance of a prime");
  lehmer->add_option("--primitive", o.primitive, "primitive divisors of u_n");
  lehmer->add_option("--prime", o.prime, "with --primitive: test this prime only");

  auto* cyclo = app.add_subcommand("cyclotomic", "Phi_n and optionally Phi_n(x, y)");
  cyclo->add_option("--n", o.n, "index")->required();
  cyclo->add_option("--x", o.x, "x");
  cyclo->add_option("--y", o.y, "y");

  auto* res = app.add_subcommand("resultant", "Res(f, g), with g = Phi_m when --m is given");
  res->add_option("--f", o.f, "monic f")->required();
  auto* res_g = res->add_option("--g", o.g, "monic g");
  res->add_option("--m", o.m, "use g = Phi_m")->excludes(res_g);

  auto* auri = app.add_subcommand("aurifeuille", "Aurifeuillian pair (F, G) for Phi_n");
  auri->add_option("--n", o.n, "index")->required();
  auri->add_option("--k", o.k, "squarefree k")->required();

  auto* two = app.add_subcommand("two-squares", "Phi_ell(gamma, delta) = A^2 + B^2");
  two->add_option("--R", o.R, "R")->required();
  two->add_option("--Q", o.Q, "Q (default 1)");
  two->add_option("--ell", o.ell, "index ell")->required();
  two->add_option("--d0", o.d0, "squarefree part of R(R - 4Q)");
  two->add_option("--d1", o.d1, "cofactor with R(R - 4Q) = d0 d1^2");

  auto* zs = app.add_subcommand("zsigmondy", "prime p with ord_p(a) = m");
  zs->add_option("--a", o.a, "base")->required();
  zs->add_option("--m", o.m, "order")->required();

  auto* verify = app.add_subcommand("verify", "run the reproduction suite or check a witness file");
  auto* suite = verify->add_option("--suite", o.suite, "paper (alias: acceptance)");
  verify->add_option("--witness", o.witness_file, "witness JSON file, - for stdin")->excludes(suite);
  verify->add_option("--only", o.only, "criterion ids")->delimiter(',');

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    const auto subs = app.get_subcommands();
    err << (subs.empty() ? app.help() : subs.front()->help());
    return kError;
  }

  try {
    const FactorBudget budget = FactorBudget::from_environment();
    if (*witness) {
      if (o.root.empty() && o.t.empty()) throw DomainError("witness: give --t and --c, or --root");
      return cmd_witness(o, out, budget);
    }
    if (*scan) return cmd_scan(o, out);
    if (*lehmer) return cmd_lehmer(o, out, budget);
    if (*cyclo) return cmd_cyclotomic(o, out);
    if (*res) {
      if (o.g.empty() && o.m == 0) throw DomainError("resultant: give --g or --m");
      return cmd_resultant(o, out);
    }
    if (*auri) return cmd_aurifeuille(o, out);
    if (*two) return cmd_two_squares(o, out, budget);
    if (*zs) return cmd_zsigmondy(o, out, budget);
    if (*verify) {
      if (o.suite.empty() && o.witness_file.empty()) throw DomainError("verify: give --suite or --witness");
      return cmd_verify(o, out);
    }
  } catch (const InvariantViolation& e) {
    err << "internal error: " << e.what() << '\n';
    return kError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  }
  return kError;
}

}  // namespace msetforge
