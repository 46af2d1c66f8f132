#pragma once

#include <functional>
#include <string>
#include <vector>

#include "solinv/integrate.hpp"

// Closed-form generating curves, each paired with the curvature condition it
// solves, its maximal s-domain, and analytic derivatives. Entries whose y has
// no elementary antiderivative define y through adaptive quadrature of
// y' = e^z cos(theta). Where the source formulas are suspect, both candidate
// readings are constructed and the residual gate selects the correct one; the
// losing formula stays available for regression tests.

namespace solinv {

struct ClosedFormSolution {
  std::string id;
  CurvatureCondition condition;
  double s_min = 0.0;  // maximal domain (may be +/-infinity, open ends)
  double s_max = 0.0;
  double window_lo = 0.0;  // finite sampling window inside the domain
  double window_hi = 0.0;
  double anchor_s = 0.0;  // interior anchor; quadrature for y starts here
  std::string description;
  std::function<CurveState(double)> eval;
  std::function<std::array<double, 3>(double)> derivs;  // analytic (y',z',theta')
  std::function<double(double)> theta_of;               // angle component alone
  std::function<double(double)> z_of;                   // height component alone
};

// Individual constructors (constants validated against each case's range).
ClosedFormSolution minimal_leaf_f2();
ClosedFormSolution minimal_leaf_f3();
ClosedFormSolution minimal_log_graph(double theta0);
ClosedFormSolution cmc_entry(double H);
ClosedFormSolution kint_zero_curve();
ClosedFormSolution kint_log_cosh();
ClosedFormSolution kint_entire_min(double c);    // c in (-1,0), branch sin^2+c < 0
ClosedFormSolution kint_half_line(double c);     // c in (-1,0), branch sin^2+c > 0
ClosedFormSolution kint_bounded(double c);       // c > 0 or c < -1
ClosedFormSolution kint_log_graph(double c);     // c in (-1,0), stationary branch
ClosedFormSolution kext_tanh_graph();
ClosedFormSolution kext_monotone_curve();        // c = -1
ClosedFormSolution kext_two_asymptotes(double c);  // c in (-1,0), branch < 0
ClosedFormSolution kext_one_asymptote(double c);   // c in (-1,0), branch > 0
ClosedFormSolution kext_bounded(double c);         // c > 0 or c < -1
ClosedFormSolution kext_log_graph(double c);       // c in (-1,0), stationary branch
ClosedFormSolution weingarten_entry(double m);     // m not in {-1, 1}

// The rejected candidate readings, kept for regression: each fails the
// residual gate that its sibling passes.
ClosedFormSolution kext_monotone_curve_rejected();
ClosedFormSolution kint_bounded_rejected(double c);  // c < -1: theta (not sin) form
ClosedFormSolution kint_bounded_scaled_rejected(double c);  // c > 0: z/sqrt(c) form
ClosedFormSolution kint_half_line_rejected(double c);       // cot (not coth) form

// Representative instantiation of every family.
std::vector<ClosedFormSolution> catalog_entries();

// y(s) by adaptive quadrature of e^z cos(theta) from the entry's anchor.
// Throws DomainError for s outside [s_min, s_max].
double quadrature_y(const ClosedFormSolution& solution, double s);

// Wraps an entry as a trajectory: n samples across [window_lo, window_hi]
// shrunk by `margin` at open ends, analytic dense evaluator attached.
Trajectory sample_entry(const ClosedFormSolution& solution, std::size_t n, double margin = 1e-3);

}  // namespace solinv
