// Copyright 2026 The Hyperflow Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Dihedral angles of a generalized hyper-ideal tetrahedron from its six edge
// lengths. All functions are pure and templated on the scalar type so the
// same code serves double evaluation and extended-precision cross checks.

#pragma once

#include <cmath>
#include <stdexcept>

#include <Eigen/Core>

#include "hyperflow/triangulation.hpp"

namespace hyperflow {

template <typename Scalar>
using Vector6 = Eigen::Matrix<Scalar, 6, 1>;

/// Edge lengths in local edge order. Negative entries are allowed and act
/// as zero.
using EdgeLengths6 = Vector6<double>;

/// cosh of the (clamped) edge lengths, local edge order; entries >= 1.
using CoshLengths6 = Vector6<double>;

template <typename Scalar>
struct AngleSet {
  Vector6<Scalar> alpha;  ///< extended dihedral angles in [0, pi]
  Vector6<Scalar> phi;    ///< cosines before clamping into [-1, 1]
};

/// Cosine of the dihedral angle at e1 in terms of the cosh-lengths of an
/// ordering (e1..e6) with (e_i, e_{i+3}) opposite, where {e1, e2, e6} and
/// {e1, e3, e5} are the two faces through e1. Evaluated as written.
template <typename Scalar>
Scalar phi_formula(Scalar x1, Scalar x2, Scalar x3, Scalar x4, Scalar x5,
                   Scalar x6) {
  using std::sqrt;
  const Scalar numerator = x2 * x3 + x5 * x6 + x1 * x2 * x5 + x1 * x3 * x6 -
                           x1 * x1 * x4 + x4;
  const Scalar left = sqrt(2 * x1 * x2 * x6 + x1 * x1 + x2 * x2 + x6 * x6 - 1);
  const Scalar right = sqrt(2 * x1 * x3 * x5 + x1 * x1 + x3 * x3 + x5 * x5 - 1);
  return numerator / (left * right);
}

template <typename Derived>
typename Derived::Scalar phi_formula(const Eigen::MatrixBase<Derived>& x) {
  EIGEN_STATIC_ASSERT_VECTOR_SPECIFIC_SIZE(Derived, 6);
  return phi_formula(x(0), x(1), x(2), x(3), x(4), x(5));
}

/// phi at edge e1 of `orientation`, with `x` indexed by local edge.
///
/// EdgeOrientation puts the face {e1, e2, e3} first; the formula wants its
/// faces in slots {1, 2, 6} and {1, 3, 5}, so e3 and e6 trade slots.
/// Throws std::domain_error if any x_i < 1.
template <typename Derived>
typename Derived::Scalar phi(const Eigen::MatrixBase<Derived>& x,
                             const EdgeOrientation& orientation) {
  EIGEN_STATIC_ASSERT_VECTOR_SPECIFIC_SIZE(Derived, 6);
  for (int i = 0; i < 6; ++i)
    if (!(x(i) >= 1))
      throw std::domain_error("phi: cosh-lengths must be >= 1");
  const auto& o = orientation;
  return phi_formula(x(o[0]), x(o[1]), x(o[5]), x(o[3]), x(o[4]), x(o[2]));
}

/// cosh(max(l_i, 0)) for each edge.
template <typename Derived>
Vector6<typename Derived::Scalar> cosh_lengths(
    const Eigen::MatrixBase<Derived>& lengths) {
  using std::cosh;
  using Scalar = typename Derived::Scalar;
  Vector6<Scalar> x;
  for (int i = 0; i < 6; ++i) x(i) = cosh(lengths(i) > 0 ? lengths(i) : Scalar(0));
  return x;
}

/// Extended dihedral angles arccos(clamp(phi, -1, 1)) at all six edges.
/// Throws std::invalid_argument on non-finite input.
template <typename Derived>
AngleSet<typename Derived::Scalar> dihedral_angles(
    const Eigen::MatrixBase<Derived>& lengths) {
  using std::acos;
  using std::isfinite;
  using Scalar = typename Derived::Scalar;
  for (int i = 0; i < 6; ++i)
    if (!isfinite(lengths(i)))
      throw std::invalid_argument("dihedral_angles: non-finite edge length");
  const Vector6<Scalar> x = cosh_lengths(lengths);
  AngleSet<Scalar> out;
  for (int e = 0; e < 6; ++e) {
    const Scalar p = phi(x, orientation_at(e));
    out.phi(e) = p;
    const Scalar clamped = p > Scalar(1) ? Scalar(1) : (p < Scalar(-1) ? Scalar(-1) : p);
    out.alpha(e) = acos(clamped);
  }
  return out;
}

/// cosh of the length bound below which every tetrahedron is hyper-ideal.
inline constexpr double kHyperidealCoshBound = 3.0;

/// True iff every phi lies strictly inside (-1, 1). Requires positive lengths.
bool phi_strictly_inside(const EdgeLengths6& lengths);

/// Hyper-ideality test. Lengths all <= arccosh 3 short-circuit to true.
/// Throws std::invalid_argument for a non-positive or non-finite length.
bool is_hyperideal(const EdgeLengths6& lengths);

/// Sum of the three dihedral angles at each vertex (vertex triangle).
template <typename Scalar>
Eigen::Matrix<Scalar, 4, 1> vertex_angle_sums(const Vector6<Scalar>& alpha) {
  Eigen::Matrix<Scalar, 4, 1> sums = Eigen::Matrix<Scalar, 4, 1>::Zero();
  for (int e = 0; e < 6; ++e) {
    sums(kLocalEdges[e][0]) += alpha(e);
    sums(kLocalEdges[e][1]) += alpha(e);
  }
  return sums;
}

}  // namespace hyperflow
