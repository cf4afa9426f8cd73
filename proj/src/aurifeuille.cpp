#include "msetforge/aurifeuille.hpp"

#include <numeric>

#include "msetforge/nt_core.hpp"

namespace msetforge {

HomogPoly::HomogPoly(std::size_t degree, std::vector<Int> coeffs)
    : degree_(degree), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() > degree_ + 1) {
    for (std::size_t i = degree_ + 1; i < coeffs_.size(); ++i) {
      if (coeffs_[i] != 0) throw DomainError("HomogPoly: coefficient beyond degree");
    }
  }
  coeffs_.resize(degree_ + 1);
}

HomogPoly HomogPoly::homogenize(const IntPoly& f, std::size_t degree) {
  if (f.degree() > static_cast<long>(degree)) throw DomainError("homogenize: degree too small");
  return HomogPoly(degree, f.coeffs());
}

HomogPoly HomogPoly::swapped() const {
  return HomogPoly(degree_, std::vector<Int>(coeffs_.rbegin(), coeffs_.rend()));
}

int HomogPoly::symmetry_type() const {
  const HomogPoly s = swapped();
  if (s == *this) return 1;
  if (s == *this * Int(-1)) return -1;
  return 0;
}

Int HomogPoly::evaluate(const Int& x, const Int& y) const {
  // Homogeneous Horner: sum c_i x^i y^(d-i).
  Int acc = 0;
  Int ypow = 1;
  for (std::size_t i = 0; i <= degree_; ++i) {
    acc = acc * x + coeffs_[degree_ - i] * ypow;
    ypow *= y;
  }
  return acc;
}

HomogPoly HomogPoly::inflate(std::size_t q) const {
  std::vector<Int> v(degree_ * q + 1);
  for (std::size_t i = 0; i <= degree_; ++i) v[i * q] = coeffs_[i];
  return HomogPoly(degree_ * q, std::move(v));
}

HomogPoly HomogPoly::times_xy_pow(std::size_t q) const {
  std::vector<Int> v(degree_ + 2 * q + 1);
  for (std::size_t i = 0; i <= degree_; ++i) v[i + q] = coeffs_[i];
  return HomogPoly(degree_ + 2 * q, std::move(v));
}

HomogPoly operator*(const HomogPoly& a, const HomogPoly& b) {
  std::vector<Int> v(a.degree_ + b.degree_ + 1);
  for (std::size_t i = 0; i <= a.degree_; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j <= b.degree_; ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return HomogPoly(a.degree_ + b.degree_, std::move(v));
}

HomogPoly operator*(HomogPoly a, const Int& c) {
  for (auto& x : a.coeffs_) x *= c;
  return a;
}

HomogPoly operator-(const HomogPoly& a, const HomogPoly& b) {
  if (a.degree_ != b.degree_) throw DomainError("HomogPoly: degree mismatch in subtraction");
  std::vector<Int> v = a.coeffs_;
  for (std::size_t i = 0; i < v.size(); ++i) v[i] -= b.coeffs_[i];
  return HomogPoly(a.degree_, std::move(v));
}

const char* to_string(AuriCondition c) {
  switch (c) {
    case AuriCondition::c1: return "c1";
    case AuriCondition::c2: return "c2";
    case AuriCondition::none: return "none";
  }
  return "none";
}

std::uint64_t q_of(std::uint64_t n) {
  if (n == 0) throw DomainError("q_of: n must be positive");
  std::uint64_t q = 1;
  for (const auto& [p, v] : factor_small(n)) {
    if (p == 2) continue;
    for (unsigned i = 1; i < v; ++i) q *= p;
  }
  return q;
}

AuriCondition applicable(std::uint64_t n, const Int& k) {
  if (n < 3) throw DomainError("applicable: n must be at least 3");
  if (!is_squarefree(k)) throw DomainError("applicable: k must be squarefree, got " + k.get_str());
  const Int N(static_cast<unsigned long>(n));
  const Int ak = abs(k);
  if (mod(k, Int(4)) == 1) {
    if (divides(ak, N) && !divides(2 * ak, N)) return AuriCondition::c1;
  } else {
    if (divides(2 * ak, N) && !divides(4 * ak, N)) return AuriCondition::c2;
  }
  return AuriCondition::none;
}

int expected_symmetry_f(std::uint64_t n, const Int& k) {
  if (k == 1 || (k > 1 && n % 2 == 0)) return 1;
  return (euler_phi(n) / 2) % 2 == 0 ? 1 : -1;
}

namespace {

// Arithmetic in Z[zeta_N] = Z[z] / Phi_N(z).
class CyclotomicRing {
 public:
  explicit CyclotomicRing(std::uint64_t N) : N_(N), modulus_(cyclotomic(N)) {}

  IntPoly zeta_pow(std::uint64_t j) const { return reduce(IntPoly::monomial(Int(1), j % N_)); }
  IntPoly reduce(const IntPoly& a) const { return divmod_monic(a, modulus_).remainder; }
  IntPoly mul(const IntPoly& a, const IntPoly& b) const { return reduce(a * b); }

  /// The element as a rational integer, or throws if it is not one.
  static Int as_integer(const IntPoly& a) {
    if (a.degree() > 0) throw InvariantViolation("aurifeuillian_pair: expected a rational coefficient");
    return a.coeff(0);
  }

 private:
  std::uint64_t N_;
  IntPoly modulus_;
};

int kronecker(const Int& D, std::uint64_t j) {
  return mpz_kronecker_ui(D.get_mpz_t(), static_cast<unsigned long>(j));
}

// Pair for q_m = 1. The roots of Phi_m(t^2) are zeta_{2m}^j with gcd(j, m) = 1;
// a Galois-stable half T with -T its complement gives
// prod_{j in T} (t - zeta^j) = F(t^2) + sqrt(k) t G(t^2).
std::pair<HomogPoly, HomogPoly> primitive_pair(std::uint64_t m, const Int& k) {
  const std::uint64_t N = 2 * m;
  const Int D = mod(k, Int(4)) == 1 ? k : Int(4 * k);
  const Int cond = abs(D);
  if (!divides(cond, Int(static_cast<unsigned long>(N)))) {
    throw InvariantViolation("aurifeuillian_pair: conductor does not divide 2n");
  }
  const bool m_even = m % 2 == 0;
  if (m_even && kronecker(D, m + 1) != -1) {
    throw InvariantViolation("aurifeuillian_pair: character does not separate t and -t");
  }

  CyclotomicRing ring(N);
  std::vector<IntPoly> P{IntPoly{1}};  // coefficients in t, constant first
  for (std::uint64_t j = 0; j < N; ++j) {
    if (std::gcd(j, m) != 1) continue;
    int psi = kronecker(D, j);
    if (!m_even && j % 2 == 0) psi = -psi;
    if (psi != 1) continue;
    const IntPoly root = ring.zeta_pow(j);
    std::vector<IntPoly> next(P.size() + 1);
    for (std::size_t i = 0; i < P.size(); ++i) {
      next[i + 1] += P[i];
      next[i] -= ring.mul(root, P[i]);
    }
    P = std::move(next);
  }

  const std::size_t phi = P.size() - 1;
  if (phi != euler_phi(m)) throw InvariantViolation("aurifeuillian_pair: wrong root count");

  // Gauss sum: w^2 = D.
  const std::uint64_t f = cond.get_ui();
  IntPoly w;
  for (std::uint64_t a = 1; a <= f; ++a) {
    const int chi = kronecker(D, a);
    if (chi != 0) w += ring.zeta_pow(a * (N / f)) * Int(chi);
  }
  if (CyclotomicRing::as_integer(ring.mul(w, w)) != D) {
    throw InvariantViolation("aurifeuillian_pair: Gauss sum does not square to the discriminant");
  }
  const Int scale = D == k ? k : Int(2 * k);  // w * sqrt(k) = +-scale

  std::vector<Int> fc(phi / 2 + 1), gc(phi / 2);
  for (std::size_t i = 0; i <= phi; ++i) {
    if (i % 2 == 0) {
      fc[i / 2] = CyclotomicRing::as_integer(P[i]);
    } else {
      const Int c = CyclotomicRing::as_integer(ring.mul(P[i], w));
      if (!divides(scale, c)) throw InvariantViolation("aurifeuillian_pair: G coefficient not integral");
      gc[i / 2] = c / scale;
    }
  }
  return {HomogPoly(phi / 2, std::move(fc)), HomogPoly(phi / 2 - 1, std::move(gc))};
}

HomogPoly normalized_sign(HomogPoly p) {
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
    if (*it == 0) continue;
    return *it < 0 ? p * Int(-1) : p;
  }
  return p;
}

HomogPoly cyclotomic_homog(std::uint64_t n) {
  return HomogPoly::homogenize(cyclotomic(n), euler_phi(n));
}

}  // namespace

AuriPair aurifeuillian_pair(std::uint64_t n, const Int& k) {
  if (n < 3) throw DomainError("aurifeuillian_pair: n must be at least 3");
  if (applicable(n, k) == AuriCondition::none) {
    throw DomainError("aurifeuillian_pair: no Aurifeuillian condition holds for n=" + std::to_string(n) +
                      ", k=" + k.get_str());
  }
  AuriPair pair;
  pair.n = n;
  pair.k = k;
  pair.q = q_of(n);
  auto [F, G] = primitive_pair(n / pair.q, k);
  pair.F = normalized_sign(F.inflate(pair.q));
  pair.G = normalized_sign(G.inflate(pair.q));
  pair.sF = expected_symmetry_f(n, k);
  pair.sG = (k > 0 ? 1 : -1) * pair.sF;
  if (!verify_pair(pair)) {
    throw InvariantViolation("aurifeuillian_pair: identity check failed for n=" + std::to_string(n) +
                             ", k=" + k.get_str());
  }
  return pair;
}

bool verify_pair(const AuriPair& pair) {
  if (pair.n < 3) return false;
  AuriCondition cond;
  try {
    cond = applicable(pair.n, pair.k);
  } catch (const DomainError&) {
    return false;
  }
  if (cond == AuriCondition::none || pair.q != q_of(pair.n)) return false;
  const std::uint64_t phi = euler_phi(pair.n);
  if (pair.F.degree() != phi / 2 || pair.G.degree() + pair.q != phi / 2) return false;
  const int sF = expected_symmetry_f(pair.n, pair.k);
  const int sG = (pair.k > 0 ? 1 : -1) * sF;
  if (pair.sF != sF || pair.sG != sG) return false;
  if (pair.F.symmetry_type() != sF || pair.G.symmetry_type() != sG) return false;
  const HomogPoly rhs = pair.F * pair.F - (pair.G * pair.G).times_xy_pow(pair.q) * pair.k;
  return rhs == cyclotomic_homog(pair.n);
}

bool common_divisor_check(const AuriPair& pair, const Int& x, const Int& y) {
  const Int support = 2 * Int(static_cast<unsigned long>(pair.n)) * x * y;
  if (support == 0) return true;
  const Int g = gcd(pair.F.evaluate(x, y), pair.G.evaluate(x, y));
  if (g == 0) return false;
  return strip_common_factors(g, support) == 1;
}

bool common_divisor_check(std::uint64_t n, const Int& k, const Int& x, const Int& y) {
  return common_divisor_check(aurifeuillian_pair(n, k), x, y);
}

Int evaluate_symmetric(const HomogPoly& f, const Int& e1, const Int& e2) {
  if (f.symmetry_type() != 1) throw DomainError("evaluate_symmetric: polynomial is not symmetric");
  const std::size_t d = f.degree();
  // Power sums p_j = X^j + Y^j.
  std::vector<Int> p(d + 1);
  p[0] = 2;
  if (d >= 1) p[1] = e1;
  for (std::size_t j = 2; j <= d; ++j) p[j] = e1 * p[j - 1] - e2 * p[j - 2];
  Int acc = 0;
  Int e2pow = 1;
  for (std::size_t i = 0; 2 * i <= d; ++i) {
    const Int& c = f.coeffs()[i];
    if (2 * i == d) {
      acc += c * e2pow;
    } else {
      acc += c * e2pow * p[d - 2 * i];
    }
    e2pow *= e2;
  }
  return acc;
}

TwoSquares two_squares(const LehmerParams& params, std::uint64_t ell, const Int& d0, const Int& d1) {
  if (params.Q() != 1) throw DomainError("two_squares: requires Q = 1");
  if (params.discriminant_product() != d0 * d1 * d1) throw DomainError("two_squares: R(R-4) != d0 d1^2");
  if (d0 < 5 || mod(d0, Int(4)) != 1) throw DomainError("two_squares: need d0 >= 5 and d0 = 1 mod 4");
  if (!is_squarefree(d0)) throw DomainError("two_squares: d0 must be squarefree");
  if (ell == 0 || !divides(4 * d0, Int(static_cast<unsigned long>(ell)))) {
    throw DomainError("two_squares: 4 d0 must divide ell");
  }

  TwoSquares out;
  out.ell = ell;
  // d0 is odd, so 2d0 | n and 4d0 does not exactly when n has one factor 2.
  std::uint64_t n = ell;
  while (n % 4 == 0) {
    n /= 2;
    ++out.v;
  }
  out.n = n;

  const AuriPair pair = aurifeuillian_pair(n, Int(-d0));
  const IntPoly H = divide_exact(pair.G.dehomogenize(), IntPoly{-1, 1});
  const HomogPoly Hh = HomogPoly::homogenize(H, pair.G.degree() - 1);

  // x_j = gamma^(2^j) + delta^(2^j), with gamma delta = 1.
  Int x = params.R() - 2;
  for (unsigned j = 1; j < out.v; ++j) x = x * x - 2;

  out.A = evaluate_symmetric(pair.F, x, Int(1));
  const std::uint64_t two_v = std::uint64_t{1} << out.v;
  out.B = d0 * d1 * lehmer_u(params, two_v) * evaluate_symmetric(Hh, x, Int(1));

  if (out.A * out.A + out.B * out.B != phi_value(params, ell)) {
    throw InvariantViolation("two_squares: A^2 + B^2 differs from Phi_ell(gamma, delta)");
  }
  return out;
}

}  // namespace msetforge
