#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "msetforge/aurifeuille.hpp"
#include "msetforge/lehmer.hpp"
#include "msetforge/nt_core.hpp"
#include "msetforge/polycyc.hpp"
#include "msetforge/recsim.hpp"
#include "msetforge/witness.hpp"

namespace py = pybind11;
using namespace msetforge;

// Python int <-> mpz_class, through the decimal representation.
namespace pybind11::detail {
template <>
struct type_caster<Int> {
  PYBIND11_TYPE_CASTER(Int, const_name("int"));

  bool load(handle src, bool) {
    if (!src || !PyLong_Check(src.ptr())) return false;
    const std::string text = py::str(src);
    return value.set_str(text, 10) == 0;
  }

  static handle cast(const Int& v, return_value_policy, handle) {
    return PyLong_FromString(v.get_str().c_str(), nullptr, 10);
  }
};
}  // namespace pybind11::detail

namespace {

IntPoly to_poly(const std::vector<Int>& coeffs) { return IntPoly(coeffs); }

FactorBudget budget_from(std::optional<std::uint64_t> rho_iterations) {
  FactorBudget b = FactorBudget::from_environment();
  if (rho_iterations) b.rho_iterations = *rho_iterations;
  return b;
}

py::dict witness_dict(const Witness& w) {
  py::dict d;
  d["m"] = w.m;
  d["p"] = w.p;
  d["a"] = w.a;
  d["g"] = w.g.coeffs();
  d["route"] = to_string(w.route);
  py::list checks;
  for (const Check& c : w.checks) checks.append(py::make_tuple(c.name, c.ok));
  d["checks"] = checks;
  return d;
}

py::object outcome(const WitnessOutcome& o) {
  if (const auto* w = std::get_if<Witness>(&o)) return witness_dict(*w);
  const auto& nc = std::get<NotCovered>(o);
  py::dict d;
  d["not_covered"] = nc.reason;
  d["budget_exhausted"] = nc.budget_exhausted;
  return d;
}

Witness witness_from(const py::dict& d) {
  Witness w;
  w.m = d["m"].cast<std::uint64_t>();
  w.p = d["p"].cast<Int>();
  w.a = d["a"].cast<Int>();
  w.g = to_poly(d["g"].cast<std::vector<Int>>());
  w.route = parse_route(d["route"].cast<std::string>());
  return w;
}

}  // namespace

PYBIND11_MODULE(_msetforge, m) {
  m.doc() = "Residue-count certificates for linear recurrences";

  static py::exception<DomainError> domain_error(m, "DomainError", PyExc_ValueError);
  static py::exception<InvariantViolation> invariant_violation(m, "InvariantViolation", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const DomainError& e) {
      py::set_error(domain_error, e.what());
    } catch (const InvariantViolation& e) {
      py::set_error(invariant_violation, e.what());
    }
  });

  m.def("is_prime", [](const Int& n) { return is_prime(n); }, py::arg("n"));
  m.def(
      "factorize",
      [](const Int& n, std::optional<std::uint64_t> rho) {
        const FactorResult r = factorize(n, budget_from(rho));
        std::vector<std::pair<Int, unsigned>> out;
        for (const PrimePower& pp : r.partial.factors) out.emplace_back(pp.prime, pp.exponent);
        return py::make_tuple(r.partial.sign, out, r.complete(), r.unfactored);
      },
      py::arg("n"), py::arg("rho_iterations") = py::none(),
      "(sign, [(prime, exponent)], complete, unfactored cofactors)");
  m.def("mult_order", [](const Int& a, const Int& M) { return mult_order(a, M); }, py::arg("a"), py::arg("M"));

  m.def("cyclotomic", [](std::uint64_t n) { return cyclotomic(n).coeffs(); }, py::arg("n"));
  m.def(
      "resultant", [](const std::vector<Int>& f, const std::vector<Int>& g) { return resultant(to_poly(f), to_poly(g)); },
      py::arg("f"), py::arg("g"));
  m.def("parse_poly", [](const std::string& s) { return parse_poly(s).coeffs(); }, py::arg("text"));
  m.def("pretty_poly", [](const std::vector<Int>& f) { return pretty_poly(to_poly(f)); }, py::arg("coeffs"));

  m.def("lehmer_u", [](const Int& R, const Int& Q, std::uint64_t n) { return lehmer_u(LehmerParams(R, Q), n); },
        py::arg("R"), py::arg("Q"), py::arg("n"));
  m.def(
      "lehmer_v_odd", [](const Int& R, const Int& Q, std::uint64_t n) { return lehmer_v_odd(LehmerParams(R, Q), n); },
      py::arg("R"), py::arg("Q"), py::arg("n"));
  m.def("phi_value", [](const Int& R, const Int& Q, std::uint64_t n) { return phi_value(LehmerParams(R, Q), n); },
        py::arg("R"), py::arg("Q"), py::arg("n"));
  m.def(
      "rank_of_appearance",
      [](const Int& R, const Int& Q, const Int& p) { return rank_of_appearance(LehmerParams(R, Q), p); },
      py::arg("R"), py::arg("Q"), py::arg("p"));
  m.def(
      "primitive_divisors",
      [](const Int& R, const Int& Q, std::uint64_t n) {
        const PrimitiveDivisors d = primitive_divisors(LehmerParams(R, Q), n);
        return std::vector<Int>(d.primes.begin(), d.primes.end());
      },
      py::arg("R"), py::arg("Q"), py::arg("n"));
  m.def(
      "has_primitive_divisor",
      [](const Int& R, const Int& Q, std::uint64_t n) { return has_primitive_divisor(LehmerParams(R, Q), n, false); },
      py::arg("R"), py::arg("Q"), py::arg("n"));

  m.def("aurifeuille_applicable", [](std::uint64_t n, const Int& k) { return std::string(to_string(applicable(n, k))); },
        py::arg("n"), py::arg("k"));
  m.def(
      "aurifeuillian_pair",
      [](std::uint64_t n, const Int& k) {
        const AuriPair p = aurifeuillian_pair(n, k);
        return py::make_tuple(p.F.coeffs(), p.G.coeffs());
      },
      py::arg("n"), py::arg("k"), "(F, G) coefficients with Phi_n(X^2, kY^2) = F^2 - k X Y G^2");
  m.def(
      "two_squares",
      [](const Int& R, std::uint64_t ell) {
        const LehmerParams params(R, Int(1));
        const SquarefreeSplit s = squarefree_split(params.discriminant_product());
        const TwoSquares t = two_squares(params, ell, s.d0, s.d1);
        return py::make_tuple(t.A, t.B);
      },
      py::arg("R"), py::arg("ell"));

  m.def(
      "find_witness",
      [](const Int& t, int c, std::optional<std::vector<Int>> g, std::uint64_t mod_count) {
        const QuadraticSeed seed(t, c);
        return outcome(find_witness(seed, g ? to_poly(*g) : seed.f(), mod_count));
      },
      py::arg("t"), py::arg("c"), py::arg("g") = py::none(), py::arg("m"));
  m.def(
      "find_linear_witness",
      [](const Int& a, const std::vector<Int>& g, std::uint64_t mod_count) {
        return outcome(find_linear_witness(a, to_poly(g), mod_count));
      },
      py::arg("a"), py::arg("g"), py::arg("m"));
  m.def("verify_witness", [](const py::dict& d) { return verify_witness(witness_from(d)); }, py::arg("witness"));
  m.def(
      "zsigmondy_witness",
      [](const Int& a, std::uint64_t mod_count) -> py::object {
        const ZsigmondyResult z = zsigmondy_witness(a, mod_count);
        if (z.prime) return py::cast(*z.prime);
        return py::none();
      },
      py::arg("a"), py::arg("m"));

  m.def(
      "orbit",
      [](const std::vector<Int>& g, const std::vector<Int>& init, const Int& M) {
        const OrbitSummary o = orbit(spec_from_poly(to_poly(g), init, M));
        return py::make_tuple(o.residues, o.tail_length, o.period);
      },
      py::arg("g"), py::arg("init"), py::arg("M"), "(sorted distinct residues, tail, period)");
  m.def(
      "mset_scan",
      [](const std::vector<Int>& g, std::uint64_t max_modulus, unsigned threads) {
        ScanResult r;
        {
          py::gil_scoped_release release;
          r = mset_scan(to_poly(g), max_modulus, ScanBudget{}, threads);
        }
        py::dict hits;
        for (const auto& [count, hit] : r.first_hit) hits[py::int_(count)] = py::make_tuple(hit.M, hit.init);
        return hits;
      },
      py::arg("g"), py::arg("max_modulus"), py::arg("threads") = 1, "{m: (M, init)} for the smallest realizing M");
}
