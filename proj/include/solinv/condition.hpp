#pragma once

#include <optional>
#include <string>
#include <variant>

#include "solinv/curvature.hpp"
#include "solinv/errors.hpp"

// Curvature conditions that close the generating-curve system
//   y' = e^z cos(theta),  z' = sin(theta),  theta' = F(theta).
// Each condition is an algebraic relation on the principal curvatures
// kappa1 = theta' + cos(theta), kappa2 = -cos(theta); solving it for theta'
// yields the autonomous right-hand side F.

namespace solinv {

struct Cmc {
  double H = 0.0;
};

struct IntrinsicK {
  double c = 0.0;
};

struct ExtrinsicK {
  double c = 0.0;
};

// kappa1 = m * kappa2.
struct PrincipalRatio {
  double m = 0.0;
};

// a*kappa1 + b*kappa2 = c.
struct LinearWeingartenKappa {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
};

// a*H + b*K_ext = c.
struct LinearWeingartenHK {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
};

using CurvatureCondition = std::variant<Cmc, IntrinsicK, ExtrinsicK, PrincipalRatio,
                                        LinearWeingartenKappa, LinearWeingartenHK>;

// Throws ConfigError for out-of-range constants ((a,b) = (0,0) for the
// linear Weingarten families).
void validate(const CurvatureCondition& condition);

// theta' determined by the condition at the given angle. Throws
// SingularAngle where the closed form divides by zero: cos(theta) = 0 for
// the Gaussian conditions, a = 0 for LinearWeingartenKappa, and
// a = 2b cos(theta) for LinearWeingartenHK. Near-singular angles return
// finite (large) values; magnitude policy belongs to the integrator.
double theta_prime(const CurvatureCondition& condition, double theta);

// |defining relation| evaluated at (theta, theta'), e.g. |a k1 + b k2 - c|.
double defining_residual(const CurvatureCondition& condition, double theta,
                         double theta_prime_value);

// True when the constant solution theta == theta0 satisfies the condition,
// i.e. F(theta0) = 0 (tested on the division-free numerator, which also
// covers the 0/0 leaf states). Such angles are unstable fixed points of the
// theta-equation and are integrated analytically.
bool is_stationary_angle(const CurvatureCondition& condition, double theta0);

// Distance-to-singularity gauge on the cos(theta) scale for conditions whose
// theta' blows up there; nullopt when no finite-angle singularity exists.
std::optional<double> singular_gap(const CurvatureCondition& condition, double theta);

// Short display form, e.g. "cmc(H=1)" or "lw-kappa(a=1,b=2,c=0)".
std::string describe(const CurvatureCondition& condition);

bool same_condition(const CurvatureCondition& a, const CurvatureCondition& b);

}  // namespace solinv
