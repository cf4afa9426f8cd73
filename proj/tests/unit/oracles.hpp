#pragma once

// Slow, independent reference implementations used only by the tests.

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "msetforge/common.hpp"
#include "msetforge/polycyc.hpp"

namespace oracle {

using msetforge::Int;
using msetforge::IntPoly;

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

/// Ascending prime factors with multiplicity.
inline std::vector<std::uint64_t> factor(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    while (n % d == 0) {
      out.push_back(d);
      n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

inline std::uint64_t order(std::int64_t a, std::uint64_t p) {
  const std::int64_t m = static_cast<std::int64_t>(p);
  const std::uint64_t base = static_cast<std::uint64_t>(((a % m) + m) % m);
  std::uint64_t x = base % p;
  for (std::uint64_t k = 1; k <= p; ++k) {
    if (x == 1 % p) return k;
    x = x * base % p;
  }
  return 0;
}

/// Long division by a monic divisor, coefficient vectors constant first.
inline std::vector<Int> divide(std::vector<Int> num, const std::vector<Int>& den) {
  const std::size_t dn = den.size() - 1;
  if (num.size() < den.size()) return {};
  std::vector<Int> q(num.size() - dn);
  for (std::size_t i = num.size(); i-- > dn;) {
    const Int c = num[i];
    q[i - dn] = c;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  return q;
}

/// Phi_n by dividing X^n - 1 by Phi_d for every proper divisor d.
inline std::vector<Int> cyclotomic(std::uint64_t n) {
  std::vector<Int> num(n + 1);
  num[0] = -1;
  num[n] = 1;
  for (std::uint64_t d = 1; d < n; ++d) {
    if (n % d == 0) num = divide(num, cyclotomic(d));
  }
  return num;
}

/// Bareiss fraction-free determinant.
inline Int determinant(std::vector<std::vector<Int>> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

/// det of the Sylvester matrix of f and g.
inline Int sylvester_resultant(const IntPoly& f, const IntPoly& g) {
  const std::size_t m = static_cast<std::size_t>(f.degree());
  const std::size_t n = static_cast<std::size_t>(g.degree());
  std::vector<std::vector<Int>> s(m + n, std::vector<Int>(m + n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= m; ++j) s[i][i + j] = f.coeff(m - j);
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j <= n; ++j) s[n + i][i + j] = g.coeff(n - j);
  }
  return determinant(std::move(s));
}

/// prod g(root) over the roots of a monic quadratic f, computed as the norm
/// of g(x) in Z[x] / (f).
inline Int quadratic_norm_resultant(const IntPoly& f, const IntPoly& g) {
  const Int b = f.coeff(1), c = f.coeff(0);
  // x^2 = -b x - c
  Int r0 = 0, r1 = 0;
  for (std::size_t i = g.coeffs().size(); i-- > 0;) {
    // (r0 + r1 x) * x + g_i
    const Int n0 = -c * r1 + g.coeffs()[i];
    const Int n1 = r0 - b * r1;
    r0 = n0;
    r1 = n1;
  }
  // (r0 + r1 a)(r0 + r1 b') with a + b' = -b, a b' = c
  return r0 * r0 - b * r0 * r1 + c * r1 * r1;
}

/// Lehmer u_n from the Lucas sequence U_n(sqrt R, Q) in Z[s] / (s^2 - R).
inline Int lehmer_u(const Int& R, const Int& Q, std::uint64_t n) {
  // Elements a + b s.
  std::pair<Int, Int> prev{0, 0}, cur{1, 0};  // U_0, U_1
  if (n == 0) return 0;
  for (std::uint64_t k = 1; k < n; ++k) {
    // U_{k+1} = s U_k - Q U_{k-1}
    std::pair<Int, Int> next{cur.second * R - Q * prev.first, cur.first - Q * prev.second};
    prev = cur;
    cur = next;
  }
  return n % 2 == 1 ? cur.first : cur.second;
}

struct Orbit {
  std::vector<Int> residues;
  std::size_t tail = 0;
  std::size_t period = 0;
};

/// Linear search over all visited states.
inline Orbit orbit(const std::vector<Int>& coeffs, std::vector<Int> state, const Int& M) {
  std::vector<std::vector<Int>> seen;
  for (auto& s : state) s = msetforge::mod(s, M);
  for (;;) {
    for (std::size_t i = 0; i < seen.size(); ++i) {
      if (seen[i] == state) {
        Orbit o;
        for (const auto& st : seen) o.residues.push_back(st.front());
        std::sort(o.residues.begin(), o.residues.end());
        o.residues.erase(std::unique(o.residues.begin(), o.residues.end()), o.residues.end());
        o.tail = i;
        o.period = seen.size() - i;
        return o;
      }
    }
    seen.push_back(state);
    Int next = 0;
    const std::size_t r = state.size();
    for (std::size_t i = 1; i <= r; ++i) next += coeffs[i - 1] * state[r - i];
    state.erase(state.begin());
    state.push_back(msetforge::mod(next, M));
  }
}

}  // namespace oracle
