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

#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "spexm/graph.hpp"

namespace spexm {

inline constexpr int kMaxCharPolyOrder = 24;

/// Exact integer polynomial; coeffs[i] multiplies x^i.
struct IntPoly {
  std::vector<mpz_class> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  mpz_class eval(const mpz_class& x) const;
  friend bool operator==(const IntPoly&, const IntPoly&) = default;
};

IntPoly make_poly(std::initializer_list<long> coeffs_low_to_high);
std::string to_string(const IntPoly& p);

/// det(xI - A(G)). Leading coefficient 1, c_{n-1} = 0, c_{n-2} = -m.
using CharPoly = IntPoly;

/// Faddeev-LeVerrier over GMP integers. Throws SizeLimitError when
/// n > kMaxCharPolyOrder.
CharPoly char_poly(const Graph& g);

/// The largest real root of a*x^2 + b*x + c with a > 0 and a non-negative
/// discriminant.
struct QuadraticRoot {
  long a;
  long b;
  long c;

  long discriminant() const { return b * b - 4 * a * c; }
  double value() const;
};

/// Root of x^2 - m, i.e. sqrt(m).
inline QuadraticRoot sqrt_root(long m) { return {1, 0, -m}; }

/// Exact sign of p(r) for r = the larger root of q, evaluated in Z[sqrt(D)].
int sign_at(const IntPoly& p, const QuadraticRoot& q);

/// Remainder c1*x + c0 of p modulo x^2 - lin*x - cst.
struct QuadraticRemainder {
  mpz_class c1;
  mpz_class c0;
  bool is_zero() const { return c1 == 0 && c0 == 0; }
};

QuadraticRemainder remainder_mod_quadratic(const IntPoly& p, long lin, long cst);

/// Exact quotient and remainder by a monic divisor.
std::pair<IntPoly, IntPoly> divide_monic(const IntPoly& p, const IntPoly& monic_divisor);

}  // namespace spexm
