#pragma once

#include "solinv/sol_geometry.hpp"

// Curvatures of a surface invariant under the x-translations T1, expressed
// through the angle function theta of its generating curve
// alpha(s) = (0, y(s), z(s)) with e^{-z}y' = cos(theta), z' = sin(theta).
// Every quantity here is division-free; singular behaviour lives entirely in
// the ODE layer.

namespace solinv {

// Generating-curve state. theta is stored unwrapped (no mod 2*pi) so that
// e.g. constant-mean-curvature solutions keep a monotone angle.
struct CurveState {
  double s = 0.0;
  double y = 0.0;
  double z = 0.0;
  double theta = 0.0;
};

struct FundamentalForms {
  double E = 1.0, F = 0.0, G = 1.0;  // first form
  double e = 0.0, f = 0.0, g = 0.0;  // second form
};

struct CurvatureProfile {
  double H = 0.0;       // mean curvature = theta'/2
  double K_ext = 0.0;   // kappa1 * kappa2
  double K_int = 0.0;   // K_ext + K_sec
  double kappa1 = 0.0;  // theta' + cos(theta)
  double kappa2 = 0.0;  // -cos(theta)
  double K_sec = 0.0;   // ambient sectional curvature of the tangent plane
};

CurvatureProfile curvature_profile(double theta, double theta_prime);

// First and second fundamental forms of X(s,t) = (t, y(s), z(s)):
// (E,F,G) = (1, 0, e^{2z}), (e,f,g) = (theta'+cos, 0, -e^{2z}cos).
FundamentalForms fundamental_forms(const CurveState& state, double theta_prime);

// Curvatures of a graph z = z(y); primes are d/dy. Maps (z, z', z'') to
// (theta, theta') and defers to curvature_profile.
CurvatureProfile graph_curvatures(double z, double z_prime, double z_double_prime);

// Unit normal N = -sin(theta) E2 + cos(theta) E3 at the curve point, in frame
// components.
SolTangent normal_vector(const CurveState& state);

// Unit tangent e1 = cos(theta) E2 + sin(theta) E3 in frame components.
SolTangent tangent_vector(const CurveState& state);

}  // namespace solinv
