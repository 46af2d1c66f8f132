#include "solinv/integrate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace solinv {

namespace {

using Vec3 = std::array<double, 3>;  // (y, z, theta)

Vec3 rhs(const CurvatureCondition& cond, const Vec3& u) {
  const double tp = theta_prime(cond, u[2]);
  return {std::exp(u[1]) * std::cos(u[2]), std::sin(u[2]), tp};
}

bool finite(const Vec3& v) {
  return std::isfinite(v[0]) && std::isfinite(v[1]) && std::isfinite(v[2]);
}

// Dormand-Prince 5(4) tableau.
constexpr double kA21 = 1.0 / 5;
constexpr double kA31 = 3.0 / 40, kA32 = 9.0 / 40;
constexpr double kA41 = 44.0 / 45, kA42 = -56.0 / 15, kA43 = 32.0 / 9;
constexpr double kA51 = 19372.0 / 6561, kA52 = -25360.0 / 2187, kA53 = 64448.0 / 6561,
                 kA54 = -212.0 / 729;
constexpr double kA61 = 9017.0 / 3168, kA62 = -355.0 / 33, kA63 = 46732.0 / 5247,
                 kA64 = 49.0 / 176, kA65 = -5103.0 / 18656;
constexpr double kB1 = 35.0 / 384, kB3 = 500.0 / 1113, kB4 = 125.0 / 192, kB5 = -2187.0 / 6784,
                 kB6 = 11.0 / 84;
constexpr double kE1 = 71.0 / 57600, kE3 = -71.0 / 16695, kE4 = 71.0 / 1920,
                 kE5 = -17253.0 / 339200, kE6 = 22.0 / 525, kE7 = -1.0 / 40;

struct StepResult {
  Vec3 u_new;
  Vec3 f_new;  // FSAL derivative at u_new
  double err = 0.0;
  bool ok = false;
};

StepResult try_step(const CurvatureCondition& cond, const Vec3& u, const Vec3& f0, double h,
                    double tol) {
  StepResult r;
  Vec3 k1 = f0, k2{}, k3{}, k4{}, k5{}, k6{}, k7{};
  Vec3 t{};
  try {
    for (int i = 0; i < 3; ++i) t[i] = u[i] + h * kA21 * k1[i];
    k2 = rhs(cond, t);
    for (int i = 0; i < 3; ++i) t[i] = u[i] + h * (kA31 * k1[i] + kA32 * k2[i]);
    k3 = rhs(cond, t);
    for (int i = 0; i < 3; ++i) t[i] = u[i] + h * (kA41 * k1[i] + kA42 * k2[i] + kA43 * k3[i]);
    k4 = rhs(cond, t);
    for (int i = 0; i < 3; ++i)
      t[i] = u[i] + h * (kA51 * k1[i] + kA52 * k2[i] + kA53 * k3[i] + kA54 * k4[i]);
    k5 = rhs(cond, t);
    for (int i = 0; i < 3; ++i)
      t[i] = u[i] + h * (kA61 * k1[i] + kA62 * k2[i] + kA63 * k3[i] + kA64 * k4[i] + kA65 * k5[i]);
    k6 = rhs(cond, t);
    for (int i = 0; i < 3; ++i)
      t[i] = u[i] +
             h * (kB1 * k1[i] + kB3 * k3[i] + kB4 * k4[i] + kB5 * k5[i] + kB6 * k6[i]);
    k7 = rhs(cond, t);
  } catch (const SingularAngle&) {
    return r;  // stage hit the singular locus; reject
  }
  r.u_new = t;
  r.f_new = k7;
  if (!finite(t) || !finite(k7)) return r;

  double err2 = 0.0;
  for (int i = 0; i < 3; ++i) {
    const double e = h * (kE1 * k1[i] + kE3 * k3[i] + kE4 * k4[i] + kE5 * k5[i] + kE6 * k6[i] +
                          kE7 * k7[i]);
    const double scale = tol + tol * std::max(std::abs(u[i]), std::abs(t[i]));
    err2 += (e / scale) * (e / scale);
  }
  r.err = std::sqrt(err2 / 3.0);
  r.ok = std::isfinite(r.err);
  return r;
}

double hermite(double t, double h, double u0, double d0, double u1, double d1) {
  const double t2 = t * t, t3 = t2 * t;
  return (2 * t3 - 3 * t2 + 1) * u0 + (t3 - 2 * t2 + t) * h * d0 + (-2 * t3 + 3 * t2) * u1 +
         (t3 - t2) * h * d1;
}

Vec3 hermite_state(double s, double s0, double s1, const Vec3& u0, const Vec3& d0, const Vec3& u1,
                   const Vec3& d1) {
  const double h = s1 - s0;
  const double t = (s - s0) / h;
  Vec3 out{};
  for (int i = 0; i < 3; ++i) out[i] = hermite(t, h, u0[i], d0[i], u1[i], d1[i]);
  return out;
}

TrajectorySample make_sample(double s, const Vec3& u, const Vec3& d) {
  TrajectorySample smp;
  smp.state = {s, u[0], u[1], u[2]};
  smp.deriv = d;
  smp.profile = curvature_profile(u[2], d[2]);
  return smp;
}

Vec3 state_vec(const CurveState& st) { return {st.y, st.z, st.theta}; }

// Constant-theta solutions, emitted analytically: theta0 is an unstable
// fixed point of the theta-equation, so stepping through it is meaningless.
Trajectory stationary_trajectory(const CurvatureCondition& cond, const CurveState& initial,
                                 double s_end, const IntegratorOptions& opts) {
  const double th = initial.theta;
  const double st = std::sin(th);
  const double ct = std::cos(th);
  const double s0 = initial.s;
  const double y0 = initial.y;
  const double z0 = initial.z;

  auto eval = [=](double s) -> CurveState {
    const double z = z0 + st * (s - s0);
    double y;
    if (std::abs(st) > 1e-300) {
      y = y0 + (ct / st) * (std::exp(z) - std::exp(z0));
    } else {
      y = y0 + std::exp(z0) * ct * (s - s0);
    }
    return {s, y, z, th};
  };

  Trajectory traj;
  traj.condition = cond;
  traj.analytic_eval = eval;
  const double span = s_end - s0;
  const std::size_t n =
      std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(std::abs(span) / opts.max_step)));
  for (std::size_t i = 0; i <= n; ++i) {
    const double s = s0 + span * static_cast<double>(i) / static_cast<double>(n);
    const CurveState cs = eval(s);
    const Vec3 u{cs.y, cs.z, cs.theta};
    const Vec3 d{std::exp(cs.z) * ct, st, 0.0};
    traj.samples.push_back(make_sample(s, u, d));
  }
  if (span < 0.0) std::reverse(traj.samples.begin(), traj.samples.end());
  traj.lower = {TerminationKind::RangeEnd, std::min(s0, s_end), "range end"};
  traj.upper = {TerminationKind::RangeEnd, std::max(s0, s_end), "range end"};
  return traj;
}

struct DirectedResult {
  std::vector<TrajectorySample> samples;  // in production order from initial
  Termination far;                        // outcome at the far (s_end) side
};

DirectedResult integrate_directed(const CurvatureCondition& cond, const CurveState& initial,
                                  double s_end, const IntegratorOptions& opts) {
  DirectedResult out;
  const double s0 = initial.s;
  const double dir = (s_end >= s0) ? 1.0 : -1.0;
  const double span = std::abs(s_end - s0);

  Vec3 u = state_vec(initial);
  Vec3 f;
  try {
    f = rhs(cond, u);
  } catch (const SingularAngle& e) {
    throw DomainError(std::string("integrate: initial state is singular: ") + e.what());
  }

  const auto gap0 = singular_gap(cond, u[2]);
  if (gap0 && *gap0 <= opts.singular_eps) {
    throw DomainError("integrate: initial state within singular_eps of the singular locus");
  }

  double s = s0;
  out.samples.push_back(make_sample(s, u, f));
  if (span == 0.0) {
    out.far = {TerminationKind::RangeEnd, s0, "range end"};
    return out;
  }

  // Maximal-domain endpoint: step size (or floating-point spacing around s)
  // is exhausted. Inside a singular approach this is Remark-style blow-up;
  // report the endpoint with s* extrapolated from the leading behaviour of
  // the gap (quadratic in cos theta, linear in s).
  auto exhausted = [&](void) -> Termination {
    const auto gap = singular_gap(cond, u[2]);
    if (gap && *gap < std::max(1e3 * opts.singular_eps, 1e-5)) {
      const double dgap = -std::sin(u[2]) * f[2];  // d cos(theta)/ds
      double s_star = s;
      if (dgap != 0.0) s_star = s + dir * std::abs(*gap / (2.0 * dgap));
      return {TerminationKind::SingularEndpoint, s_star,
              "theta' blows up: cos(theta) -> 0 (step size exhausted; s* extrapolated)"};
    }
    return {TerminationKind::StepFailure, s, "step size underflow"};
  };

  double h = std::min({opts.max_step, span, 1e-2 / (1.0 + std::abs(f[2]))});

  while (true) {
    const double remaining = std::abs(s_end - s);
    if (remaining <= 0.0) {
      out.far = {TerminationKind::RangeEnd, s_end, "range end"};
      return out;
    }
    bool last = false;
    if (h >= remaining) {
      h = remaining;
      last = true;
    }

    const double h_min =
        4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(s));

    const StepResult step = try_step(cond, u, f, dir * h, opts.tol);
    if (!step.ok || step.err > 1.0) {
      const double shrink = step.ok ? std::max(0.2, 0.9 * std::pow(step.err, -0.2)) : 0.25;
      h *= std::min(0.9, shrink);
      if (h < h_min) {
        out.far = exhausted();
        return out;
      }
      continue;
    }

    const double s_new = last ? s_end : s + dir * h;
    if (s_new == s) {  // spacing exhausted: accepted step makes no progress
      out.far = exhausted();
      return out;
    }

    // Singular-endpoint event: the gap crossed opts.singular_eps inside the
    // accepted step; locate the crossing on the dense output by bisection.
    const auto gap_new = singular_gap(cond, step.u_new[2]);
    if (gap_new && *gap_new <= opts.singular_eps) {
      double lo = s, hi = s_new;  // gap(lo) > eps >= gap(hi)
      while (std::abs(hi - lo) > opts.event_tol) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        const Vec3 um = hermite_state(mid, s, s_new, u, f, step.u_new, step.f_new);
        const auto g = singular_gap(cond, um[2]);
        if (g && *g <= opts.singular_eps) {
          hi = mid;
        } else {
          lo = mid;
        }
      }
      const Vec3 uev = hermite_state(lo, s, s_new, u, f, step.u_new, step.f_new);
      Vec3 fev;
      try {
        fev = rhs(cond, uev);
      } catch (const SingularAngle&) {
        fev = f;
      }
      if (lo != s) out.samples.push_back(make_sample(lo, uev, fev));
      out.far = {TerminationKind::SingularEndpoint, 0.5 * (lo + hi),
                 "theta' blows up: singular gap reached singular_eps"};
      return out;
    }

    s = s_new;
    u = step.u_new;
    f = step.f_new;
    out.samples.push_back(make_sample(s, u, f));
    if (out.samples.size() > opts.max_samples) {
      out.far = {TerminationKind::StepFailure, s, "sample budget exhausted"};
      return out;
    }
    if (last) {
      out.far = {TerminationKind::RangeEnd, s_end, "range end"};
      return out;
    }
    h = std::min(opts.max_step, h * std::clamp(0.9 * std::pow(step.err, -0.2), 0.2, 5.0));
  }
}

}  // namespace

CurveState Trajectory::at(double s) const {
  if (analytic_eval) return analytic_eval(s);
  const auto& sm = samples;
  if (sm.empty()) throw DomainError("Trajectory::at: empty trajectory");
  if (s <= sm.front().state.s) return sm.front().state;
  if (s >= sm.back().state.s) return sm.back().state;
  auto it = std::upper_bound(sm.begin(), sm.end(), s, [](double v, const TrajectorySample& t) {
    return v < t.state.s;
  });
  const TrajectorySample& b = *it;
  const TrajectorySample& a = *(it - 1);
  const Vec3 u = hermite_state(s, a.state.s, b.state.s, state_vec(a.state), a.deriv,
                               state_vec(b.state), b.deriv);
  return {s, u[0], u[1], u[2]};
}

Trajectory integrate(const CurvatureCondition& condition, const CurveState& initial, double s_end,
                     const IntegratorOptions& opts) {
  validate(condition);
  if (is_stationary_angle(condition, initial.theta)) {
    return stationary_trajectory(condition, initial, s_end, opts);
  }
  if (std::holds_alternative<LinearWeingartenKappa>(condition)) {
    const auto& w = std::get<LinearWeingartenKappa>(condition);
    if (w.a == 0.0) {
      throw DomainError(
          "integrate: lw-kappa with a=0 admits only constant-angle solutions and the initial "
          "angle violates (a-b)cos(theta0) = c");
    }
  }

  DirectedResult run = integrate_directed(condition, initial, s_end, opts);
  Trajectory traj;
  traj.condition = condition;
  traj.samples = std::move(run.samples);
  if (s_end >= initial.s) {
    traj.lower = {TerminationKind::RangeEnd, initial.s, "range start"};
    traj.upper = run.far;
  } else {
    std::reverse(traj.samples.begin(), traj.samples.end());
    traj.lower = run.far;
    traj.upper = {TerminationKind::RangeEnd, initial.s, "range start"};
  }
  return traj;
}

Trajectory integrate_span(const CurvatureCondition& condition, const CurveState& initial,
                          double s_lo, double s_hi, const IntegratorOptions& opts) {
  if (s_lo > initial.s || s_hi < initial.s) {
    throw DomainError("integrate_span: initial.s must lie inside [s_lo, s_hi]");
  }
  Trajectory back = integrate(condition, initial, s_lo, opts);
  Trajectory fwd = integrate(condition, initial, s_hi, opts);
  Trajectory traj;
  traj.condition = condition;
  traj.samples = std::move(back.samples);
  traj.samples.insert(traj.samples.end(), fwd.samples.begin() + 1, fwd.samples.end());
  traj.lower = back.lower;
  traj.upper = fwd.upper;
  if (back.analytic_eval && fwd.analytic_eval) traj.analytic_eval = back.analytic_eval;
  return traj;
}

CurveState propagate(const CurvatureCondition& condition, const CurveState& state, double s_target,
                     const IntegratorOptions& opts) {
  Trajectory t = integrate(condition, state, s_target, opts);
  const bool forward = s_target >= state.s;
  const TrajectorySample& last = forward ? t.samples.back() : t.samples.front();
  return last.state;
}

namespace {

double gk_integrate(const std::function<double(double)>& f, double a, double b) {
  return boost::math::quadrature::gauss_kronrod<double, 15>::integrate(f, a, b, 10, 1e-13);
}

// First-integral defect of the condition over [a, b], evaluated on the dense
// trajectory states. Zero (up to quadrature error) exactly when the sampled
// triple satisfies the condition's theta-equation in integrated form.
double condition_weak_defect(const CurvatureCondition& cond, const Trajectory& traj, double a,
                             double b) {
  const CurveState sa = traj.at(a);
  const CurveState sb = traj.at(b);
  const double ds = b - a;
  struct Visitor {
    const Trajectory& traj;
    const CurveState &sa, &sb;
    double ds;
    double operator()(const Cmc& c) const {
      return std::abs(sb.theta - sa.theta - 2.0 * c.H * ds);
    }
    double operator()(const IntrinsicK& k) const {
      const double q = gk_integrate(
          [&](double s) {
            const double p = std::sin(traj.at(s).theta);
            return p * p + k.c;
          },
          sa.s, sb.s);
      return std::abs(std::sin(sb.theta) - std::sin(sa.theta) + q);
    }
    double operator()(const ExtrinsicK& k) const {
      const double q = gk_integrate(
          [&](double s) {
            const double p = std::sin(traj.at(s).theta);
            return p * p - k.c - 1.0;
          },
          sa.s, sb.s);
      return std::abs(std::sin(sb.theta) - std::sin(sa.theta) - q);
    }
    double operator()(const PrincipalRatio& r) const {
      const double q = gk_integrate(
          [&](double s) {
            const double ct = std::cos(traj.at(s).theta);
            return ct * ct;
          },
          sa.s, sb.s);
      return std::abs(std::sin(sb.theta) - std::sin(sa.theta) + (1.0 + r.m) * q);
    }
    double operator()(const LinearWeingartenKappa& w) const {
      if (w.a == 0.0) return 0.0;  // covered by the pointwise part
      const double q = gk_integrate(
          [&](double s) { return std::cos(traj.at(s).theta); }, sa.s, sb.s);
      return std::abs(w.a * (sb.theta - sa.theta) + (w.a - w.b) * q - w.c * ds);
    }
    double operator()(const LinearWeingartenHK& w) const {
      const double q = gk_integrate(
          [&](double s) {
            const double ct = std::cos(traj.at(s).theta);
            return 2.0 * w.c + 2.0 * w.b * ct * ct;
          },
          sa.s, sb.s);
      return std::abs(w.a * (sb.theta - sa.theta) -
                      2.0 * w.b * (std::sin(sb.theta) - std::sin(sa.theta)) - q);
    }
  };
  return std::visit(Visitor{traj, sa, sb, ds}, cond);
}

}  // namespace

double residual(const CurvatureCondition& condition, const Trajectory& trajectory) {
  double pointwise = 0.0;
  for (const TrajectorySample& smp : trajectory.samples) {
    const double rel = defining_residual(condition, smp.state.theta, smp.deriv[2]);
    const double ems = std::exp(-smp.state.z) * smp.deriv[0];
    const double unit = std::abs(ems * ems + smp.deriv[1] * smp.deriv[1] - 1.0);
    pointwise = std::max(pointwise, rel + unit);
  }

  double weak = 0.0;
  const auto& sm = trajectory.samples;
  for (std::size_t i = 0; i + 1 < sm.size(); ++i) {
    const double a = sm[i].state.s;
    const double b = sm[i + 1].state.s;
    const double ds = b - a;
    if (ds < 1e-6) continue;  // slivers near events: roundoff dominates
    const double qy = gk_integrate(
        [&](double s) {
          const CurveState st = trajectory.at(s);
          return std::exp(st.z) * std::cos(st.theta);
        },
        a, b);
    const double qz = gk_integrate(
        [&](double s) { return std::sin(trajectory.at(s).theta); }, a, b);
    const double dy = std::abs(sm[i + 1].state.y - sm[i].state.y - qy);
    const double dz = std::abs(sm[i + 1].state.z - sm[i].state.z - qz);
    const double dc = condition_weak_defect(condition, trajectory, a, b);
    weak = std::max(weak, (dy + dz + dc) / ds);
  }
  return pointwise + weak;
}

}  // namespace solinv
