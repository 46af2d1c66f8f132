#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "solinv/condition.hpp"
#include "solinv/curvature.hpp"

// Adaptive integration of the generating-curve system closed by a curvature
// condition, with detection of the singular endpoints where theta' blows up
// in finite arclength (|cos theta| -> 0 for the Gaussian conditions).

namespace solinv {

struct IntegratorOptions {
  double tol = 1e-10;          // local error tolerance (absolute and relative)
  double singular_eps = 1e-8;  // singular-gap value that terminates the run
  double event_tol = 1e-12;    // bracketing width for the singular endpoint
  double max_step = 0.1;
  std::size_t max_samples = 500000;
};

enum class TerminationKind { RangeEnd, SingularEndpoint, StepFailure };

struct Termination {
  TerminationKind kind = TerminationKind::RangeEnd;
  double s = 0.0;
  std::string message;
};

struct TrajectorySample {
  CurveState state;
  std::array<double, 3> deriv{0.0, 0.0, 0.0};  // (y', z', theta')
  CurvatureProfile profile;
};

// Integrated generating curve. Samples are the accepted steps, strictly
// increasing in s; dense states between samples come from cubic Hermite
// interpolation (or from the analytic evaluator on wrapped closed forms).
struct Trajectory {
  CurvatureCondition condition;
  std::vector<TrajectorySample> samples;
  Termination lower;  // outcome at the decreasing-s end
  Termination upper;  // outcome at the increasing-s end

  // Optional analytic dense evaluator (closed-form wrappers install one).
  std::function<CurveState(double)> analytic_eval;

  double s_front() const { return samples.front().state.s; }
  double s_back() const { return samples.back().state.s; }
  CurveState at(double s) const;

  bool singular_lower() const { return lower.kind == TerminationKind::SingularEndpoint; }
  bool singular_upper() const { return upper.kind == TerminationKind::SingularEndpoint; }
};

// Integrates from `initial.s` to `s_end` (either direction). Throws
// DomainError when the initial state is already singular for the condition.
Trajectory integrate(const CurvatureCondition& condition, const CurveState& initial, double s_end,
                     const IntegratorOptions& opts = {});

// Integrates backward to s_lo and forward to s_hi from the same initial
// state and merges the legs into one ascending trajectory.
Trajectory integrate_span(const CurvatureCondition& condition, const CurveState& initial,
                          double s_lo, double s_hi, const IntegratorOptions& opts = {});

// Steps a single state to s_target and returns it. Used where correlated
// high-accuracy states at nearby arclengths are needed (finite-difference
// oracles); does not build a sample list.
CurveState propagate(const CurvatureCondition& condition, const CurveState& state, double s_target,
                     const IntegratorOptions& opts = {});

// Universal correctness gauge. Pointwise part: the defining relation and the
// unit-speed relation evaluated on each sample. Weak part: on every sample
// interval, the increments of (y, z) and of the condition's first integral
// are compared against adaptive quadrature of the dense states, normalized
// per unit arclength. Small residuals certify that the sampled triple
// (y, z, theta) genuinely solves the closed system.
double residual(const CurvatureCondition& condition, const Trajectory& trajectory);

}  // namespace solinv
