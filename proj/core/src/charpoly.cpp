// Copyright 2026 The spexm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "spexm/charpoly.hpp"

#include <cmath>
#include <sstream>

#include "spexm/errors.hpp"

namespace spexm {

mpz_class IntPoly::eval(const mpz_class& x) const {
  mpz_class acc = 0;
  for (int i = degree(); i >= 0; --i) acc = acc * x + coeffs[i];
  return acc;
}

IntPoly make_poly(std::initializer_list<long> coeffs_low_to_high) {
  IntPoly p;
  for (long c : coeffs_low_to_high) p.coeffs.emplace_back(c);
  return p;
}

std::string to_string(const IntPoly& p) {
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    const mpz_class& c = p.coeffs[i];
    if (c == 0 && !(i == 0 && first)) continue;
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (mag != 1 || i == 0) os << mag.get_str();
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
    first = false;
  }
  return os.str();
}

CharPoly char_poly(const Graph& g) {
  const int n = g.n();
  if (n > kMaxCharPolyOrder) {
    throw SizeLimitError("char_poly supports at most " + std::to_string(kMaxCharPolyOrder) +
                         " vertices, got " + std::to_string(n));
  }
  CharPoly p;
  p.coeffs.assign(n + 1, 0);
  p.coeffs[n] = 1;
  std::vector<mpz_class> cur(static_cast<std::size_t>(n) * n, 0), next(cur.size(), 0);
  auto at = [n](std::vector<mpz_class>& mat, int i, int j) -> mpz_class& {
    return mat[static_cast<std::size_t>(i) * n + j];
  };
  for (int k = 1; k <= n; ++k) {
    // next = A * cur + c_{n-k+1} I
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        mpz_class s = 0;
        for_each_bit(g.adj(i), [&](int l) { s += at(cur, l, j); });
        if (i == j) s += p.coeffs[n - k + 1];
        at(next, i, j) = std::move(s);
      }
    }
    mpz_class trace = 0;
    for (int i = 0; i < n; ++i) {
      for_each_bit(g.adj(i), [&](int l) { trace += at(next, l, i); });
    }
    if (!mpz_divisible_ui_p(trace.get_mpz_t(), static_cast<unsigned long>(k))) {
      throw ConsistencyError("Faddeev-LeVerrier trace not divisible by k");
    }
    mpz_class q;
    mpz_divexact_ui(q.get_mpz_t(), trace.get_mpz_t(), static_cast<unsigned long>(k));
    p.coeffs[n - k] = -q;
    std::swap(cur, next);
  }
  if (n >= 1 && p.coeffs[n - 1] != 0) throw ConsistencyError("char_poly: c_{n-1} != 0");
  if (n >= 2 && p.coeffs[n - 2] != -g.m()) throw ConsistencyError("char_poly: c_{n-2} != -m");
  return p;
}

double QuadraticRoot::value() const {
  const long double d = static_cast<long double>(discriminant());
  return static_cast<double>((-static_cast<long double>(b) + std::sqrt(d)) /
                             (2.0L * static_cast<long double>(a)));
}

namespace {

// x + y*sqrt(d)
struct Surd {
  mpz_class x;
  mpz_class y;
};

int sign_of(const Surd& s, const mpz_class& d) {
  const int sx = sgn(s.x);
  const int sy = sgn(s.y);
  if (sy == 0 || d == 0) return sx;
  if (sx == 0) return sy;
  if (sx == sy) return sx;
  // opposite signs: compare x^2 with y^2 d
  const mpz_class lhs = s.x * s.x;
  const mpz_class rhs = s.y * s.y * d;
  if (lhs == rhs) return 0;
  return lhs > rhs ? sx : sy;
}

}  // namespace

int sign_at(const IntPoly& p, const QuadraticRoot& q) {
  if (q.a <= 0) throw ArgumentError("sign_at: leading coefficient must be positive");
  const mpz_class d = q.discriminant();
  if (d < 0) throw ArgumentError("sign_at: quadratic has no real root");
  // p(r) * (2a)^deg with r = (-b + sqrt d) / 2a, by Horner in Z[sqrt d]
  const int deg = p.degree();
  if (deg < 0) return 0;
  const mpz_class two_a = 2 * q.a;
  const mpz_class beta_x = -q.b;
  Surd acc{p.coeffs[deg], 0};
  mpz_class scale = 1;
  for (int i = deg - 1; i >= 0; --i) {
    scale *= two_a;
    Surd next{acc.x * beta_x + acc.y * d, acc.x + acc.y * beta_x};
    next.x += p.coeffs[i] * scale;
    acc = std::move(next);
  }
  return sign_of(acc, d);
}

QuadraticRemainder remainder_mod_quadratic(const IntPoly& p, long lin, long cst) {
  std::vector<mpz_class> r = p.coeffs;
  for (int i = static_cast<int>(r.size()) - 1; i >= 2; --i) {
    const mpz_class top = r[i];
    if (top == 0) continue;
    r[i - 1] += top * lin;
    r[i - 2] += top * cst;
    r[i] = 0;
  }
  QuadraticRemainder out{0, 0};
  if (r.size() >= 2) out.c1 = r[1];
  if (!r.empty()) out.c0 = r[0];
  return out;
}

std::pair<IntPoly, IntPoly> divide_monic(const IntPoly& p, const IntPoly& d) {
  const int dd = d.degree();
  if (dd < 0 || d.coeffs[dd] != 1) throw ArgumentError("divide_monic: divisor must be monic");
  std::vector<mpz_class> r = p.coeffs;
  IntPoly quot;
  const int dp = p.degree();
  if (dp < dd) return {make_poly({0}), p};
  quot.coeffs.assign(dp - dd + 1, 0);
  for (int i = dp; i >= dd; --i) {
    const mpz_class c = r[i];
    quot.coeffs[i - dd] = c;
    if (c == 0) continue;
    for (int j = 0; j <= dd; ++j) r[i - dd + j] -= c * d.coeffs[j];
  }
  IntPoly rem;
  rem.coeffs.assign(r.begin(), r.begin() + dd);
  if (rem.coeffs.empty()) rem.coeffs.push_back(0);
  while (rem.coeffs.size() > 1 && rem.coeffs.back() == 0) rem.coeffs.pop_back();
  return {quot, rem};
}

}  // namespace spexm
