#pragma once

#include <complex>

#include <Eigen/Dense>

#include "qorient/half_integer.hpp"

namespace qorient {

/// z-y-z convention: R = Rz(alpha) Ry(beta) Rz(gamma).
struct EulerAngles {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;

  /// Wraps alpha, gamma into [0, 2pi); beta must lie in [0, pi].
  static EulerAngles wrapped(double alpha, double beta, double gamma);
};

Eigen::Matrix3d rotation_matrix(const EulerAngles& e);
EulerAngles euler_from_matrix(const Eigen::Matrix3d& r);

/// Associated Legendre P_l^m(x) with the Condon-Shortley phase.
/// Requires 0 <= m <= l and |x| <= 1.
double assoc_legendre(int l, int m, double x);

/// Complex spherical harmonic Y_lm(theta, phi), orthonormal on the sphere.
std::complex<double> spherical_harmonic(int l, int m, double theta, double phi);

/// Clebsch-Gordan coefficient <j1 m1; j2 m2 | j m> in the Condon-Shortley
/// convention. Selection-rule failures (m != m1 + m2, triangle violations)
/// return exactly 0; malformed half-integer inputs throw.
///
/// Evaluated with Racah's closed-form sum over exact big-rational arithmetic,
/// converted to double only at the end, so there is no cancellation loss for
/// j well beyond the physically interesting range here.
double clebsch_gordan(HalfInteger j1, HalfInteger m1, HalfInteger j2,
                      HalfInteger m2, HalfInteger j, HalfInteger m);

/// Wigner small-d matrix element d^j_{mn}(beta).
double wigner_small_d(HalfInteger j, HalfInteger m, HalfInteger n, double beta);

/// Wigner D^j_{mn}(alpha, beta, gamma) = e^{-i m alpha} d^j_{mn}(beta) e^{-i n gamma}.
std::complex<double> wigner_D(HalfInteger j, HalfInteger m, HalfInteger n,
                              const EulerAngles& angles);

}  // namespace qorient
