#include "msetforge/polycyc.hpp"

#include <sstream>
#include <utility>

#include "msetforge/nt_core.hpp"

namespace msetforge {

IntPoly::IntPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

IntPoly IntPoly::monomial(const Int& c, std::size_t degree) {
  std::vector<Int> v(degree + 1);
  v[degree] = c;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::x_pow_minus_one(std::size_t d) {
  std::vector<Int> v(d + 1);
  v[0] = -1;
  v[d] += 1;
  return IntPoly(std::move(v));
}

void IntPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Int& IntPoly::leading() const {
  if (is_zero()) throw DomainError("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

Int IntPoly::evaluate(const Int& x) const {
  Int acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPoly IntPoly::negate_variable() const {
  std::vector<Int> v = coeffs_;
  for (std::size_t i = 1; i < v.size(); i += 2) v[i] = -v[i];
  return IntPoly(std::move(v));
}

IntPoly IntPoly::inflate(std::size_t k) const {
  if (k == 0) throw DomainError("inflate: exponent must be positive");
  if (is_zero()) return {};
  std::vector<Int> v((coeffs_.size() - 1) * k + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i * k] = coeffs_[i];
  return IntPoly(std::move(v));
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator*=(const Int& c) {
  for (auto& x : coeffs_) x *= c;
  normalize();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Int> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPoly(std::move(v));
}

PolyDivision divmod_monic(const IntPoly& dividend, const IntPoly& divisor) {
  if (!divisor.is_monic()) throw DomainError("divmod_monic: divisor must be monic");
  const long dd = divisor.degree();
  if (dividend.degree() < dd) return {IntPoly{}, dividend};
  std::vector<Int> rem = dividend.coeffs();
  std::vector<Int> quo(rem.size() - static_cast<std::size_t>(dd));
  const auto& d = divisor.coeffs();
  for (long i = static_cast<long>(rem.size()) - 1; i >= dd; --i) {
    const Int c = rem[i];
    quo[i - dd] = c;
    if (c == 0) continue;
    for (long j = 0; j <= dd; ++j) rem[i - dd + j] -= c * d[j];
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {IntPoly(std::move(quo)), IntPoly(std::move(rem))};
}

IntPoly divide_exact(const IntPoly& dividend, const IntPoly& divisor) {
  auto [q, r] = divmod_monic(dividend, divisor);
  if (!r.is_zero()) throw InvariantViolation("divide_exact: nonzero remainder");
  return q;
}

IntPoly power(const IntPoly& base, unsigned exponent) {
  IntPoly result{1};
  for (unsigned i = 0; i < exponent; ++i) result = result * base;
  return result;
}

IntPoly parse_poly(const std::string& text) {
  std::vector<Int> coeffs;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    if (first == std::string::npos) throw DomainError("empty coefficient in '" + text + "'");
    coeffs.push_back(parse_int(item.substr(first, last - first + 1)));
  }
  if (coeffs.empty()) throw DomainError("empty polynomial");
  return IntPoly(std::move(coeffs));
}

std::string format_poly(const IntPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (i) out += ',';
    out += f.coeffs()[i].get_str();
  }
  return out;
}

std::string pretty_poly(const IntPoly& f, const std::string& var) {
  if (f.is_zero()) return "0";
  std::string out;
  for (long i = f.degree(); i >= 0; --i) {
    const Int& c = f.coeffs()[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const Int mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1 || i == 0) out += mag.get_str();
    if (i >= 1) out += var;
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

namespace {

IntPoly times_x_pow_minus_one(const IntPoly& p, std::size_t d) {
  std::vector<Int> v(p.coeffs().size() + d);
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    v[i + d] += p.coeffs()[i];
    v[i] -= p.coeffs()[i];
  }
  return IntPoly(std::move(v));
}

// Exact division by X^d - 1: p_j = q_{j-d} - q_j, solved from the bottom.
IntPoly over_x_pow_minus_one(const IntPoly& p, std::size_t d) {
  const auto& a = p.coeffs();
  if (a.size() <= d) throw InvariantViolation("cyclotomic: inexact division");
  const std::size_t qlen = a.size() - d;
  std::vector<Int> q(qlen);
  for (std::size_t j = 0; j < qlen; ++j) q[j] = (j >= d ? q[j - d] : Int(0)) - a[j];
  for (std::size_t j = qlen; j < a.size(); ++j) {
    const Int expected = (j >= d ? q[j - d] : Int(0)) - (j < qlen ? q[j] : Int(0));
    if (expected != a[j]) throw InvariantViolation("cyclotomic: inexact division");
  }
  return IntPoly(std::move(q));
}

Int content(const IntPoly& p) {
  Int g = 0;
  for (const auto& c : p.coeffs()) g = gcd(g, c);
  return g;
}

IntPoly divide_coeffs(const IntPoly& p, const Int& d) {
  std::vector<Int> v = p.coeffs();
  for (auto& c : v) {
    if (!divides(d, c)) throw InvariantViolation("resultant: inexact coefficient division");
    mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
  }
  return IntPoly(std::move(v));
}

// lc(b)^(deg a - deg b + 1) * a mod b, computed without fractions.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  std::vector<Int> r = a.coeffs();
  const auto& bc = b.coeffs();
  const long db = b.degree();
  const Int& lb = b.leading();
  long e = a.degree() - db + 1;
  for (long i = a.degree(); i >= db; --i) {
    const Int c = r[static_cast<std::size_t>(i)];
    for (auto& x : r) x *= lb;
    for (long j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= c * bc[static_cast<std::size_t>(j)];
    --e;
  }
  Int scale = pow(lb, static_cast<unsigned long>(e));
  r.resize(static_cast<std::size_t>(db));
  for (auto& x : r) x *= scale;
  return IntPoly(std::move(r));
}

}  // namespace

IntPoly cyclotomic(std::uint64_t n) {
  if (n == 0) throw DomainError("cyclotomic: n must be positive");
  IntPoly acc{1};
  const auto ds = divisors(n);
  for (std::uint64_t d : ds) {
    if (moebius(n / d) == 1) acc = times_x_pow_minus_one(acc, d);
  }
  for (std::uint64_t d : ds) {
    if (moebius(n / d) == -1) acc = over_x_pow_minus_one(acc, d);
  }
  return acc;
}

Int resultant(const IntPoly& f, const IntPoly& g) {
  if (f.degree() < 1 || g.degree() < 1) throw DomainError("resultant: inputs must be nonconstant");
  if (!f.is_monic() || !g.is_monic()) throw DomainError("resultant: inputs must be monic");

  IntPoly a = f, b = g;
  int sign = 1;
  if (a.degree() < b.degree()) {
    std::swap(a, b);
    if ((a.degree() * b.degree()) % 2 == 1) sign = -sign;
  }
  const Int ca = content(a), cb = content(b);
  a = divide_coeffs(a, ca);
  b = divide_coeffs(b, cb);
  const Int t = pow(ca, static_cast<unsigned long>(b.degree())) *
                pow(cb, static_cast<unsigned long>(a.degree()));
  Int gg = 1, h = 1;
  while (true) {
    const long delta = a.degree() - b.degree();
    if (a.degree() % 2 == 1 && b.degree() % 2 == 1) sign = -sign;
    IntPoly r = pseudo_remainder(a, b);
    a = b;
    if (r.is_zero()) return 0;
    b = divide_coeffs(r, gg * pow(h, static_cast<unsigned long>(delta)));
    gg = a.leading();
    if (delta == 0) {
      // h unchanged
    } else {
      Int num = pow(gg, static_cast<unsigned long>(delta));
      Int den = pow(h, static_cast<unsigned long>(delta - 1));
      if (!divides(den, num)) throw InvariantViolation("resultant: subresultant chain not integral");
      h = num / den;
    }
    if (b.degree() == 0) {
      const unsigned long da = static_cast<unsigned long>(a.degree());
      Int num = pow(b.leading(), da);
      Int den = pow(h, da - 1);
      if (!divides(den, num)) throw InvariantViolation("resultant: final step not integral");
      return sign * t * (num / den);
    }
  }
}

Int res_eps(const IntPoly& f, std::uint64_t m, int eps) {
  if (f.degree() != 2 || !f.is_monic()) throw DomainError("res_eps: f must be a monic quadratic");
  if (eps != 1 && eps != -1) throw DomainError("res_eps: eps must be +1 or -1");
  // f(-X) of a monic quadratic stays monic.
  return resultant(eps == 1 ? f : f.negate_variable(), cyclotomic(m));
}

ReflectionSides reflect_identity(std::uint64_t m) {
  if (m == 0) throw DomainError("reflect_identity: m must be positive");
  ReflectionSides out;
  const IntPoly phi = cyclotomic(m);
  out.lhs = phi * phi.negate_variable();
  out.e = m % 4 == 0 ? 2 : 1;
  const std::uint64_t half = m % 2 == 0 ? m / 2 : m;
  out.rhs = power(cyclotomic(half).inflate(2), out.e);
  if (euler_phi(m) % 2 == 1) out.rhs = -out.rhs;
  return out;
}

Int eval_mod(const IntPoly& f, const Int& a, const Int& M) {
  if (M < 1) throw DomainError("eval_mod: modulus must be positive");
  const Int x = mod(a, M);
  Int acc = 0;
  for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) acc = mod(acc * x + *it, M);
  return acc;
}

HomogValue cyclotomic_homog_value(std::uint64_t n, const Int& x, const Int& y) {
  const IntPoly phi = cyclotomic(n);
  const auto& c = phi.coeffs();
  const std::size_t d = c.size() - 1;
  Int acc = 0;
  for (std::size_t i = 0; i <= d; ++i) acc += c[i] * pow(x, i) * pow(y, d - i);
  return {n, acc};
}

}  // namespace msetforge
