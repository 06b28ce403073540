// Copyright (c) 2026 the ergosplit developers
// SPDX-License-Identifier: Apache-2.0

#include "ergosplit/expm.hpp"

#include <cmath>

namespace ergosplit {

namespace {

// (13,13)-Pade approximant: on exit (V+U)(V-U)^{-1} approximates exp(A).
void pade13(const Matrix& a, Matrix& u, Matrix& v) {
  static const double b[] = {64764752532480000., 32382376266240000., 7771770303897600.,
                             1187353796428800.,  129060195264000.,   10559470521600.,
                             670442572800.,      33522128640.,       1323241920.,
                             40840800.,          960960.,            16380.,
                             182.,               1.};
  const auto n = a.rows();
  const Matrix id = Matrix::Identity(n, n);
  const Matrix a2 = a * a;
  const Matrix a4 = a2 * a2;
  const Matrix a6 = a4 * a2;
  u = a * (a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2) + b[7] * a6 + b[5] * a4 + b[3] * a2 +
           b[1] * id);
  v = a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2) + b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * id;
}

// 1-norm threshold below which the (13,13) approximant reaches double precision.
constexpr double kTheta13 = 5.371920351148152;

}  // namespace

Matrix expm(const Matrix& a, double t) {
  validate_generator(a);
  if (!std::isfinite(t)) throw std::invalid_argument("expm: t must be finite");

  Matrix b = t * a;
  if (!b.allFinite()) throw ExpOverflowError("expm: t*A overflows");

  const double norm1 = b.cwiseAbs().colwise().sum().maxCoeff();
  int squarings = 0;
  if (norm1 > kTheta13) {
    std::frexp(norm1 / kTheta13, &squarings);
    if (squarings < 0) squarings = 0;
    b *= std::ldexp(1.0, -squarings);
  }

  Matrix u, v;
  pade13(b, u, v);
  const Matrix numer = v + u;
  const Matrix denom = v - u;
  Matrix r = denom.partialPivLu().solve(numer);
  for (int i = 0; i < squarings; ++i) r = (r * r).eval();

  if (!r.allFinite()) throw ExpOverflowError("expm: result exceeds representable range");
  return r;
}

}  // namespace ergosplit
