#include "solinv/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <memory>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace solinv {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kGate = 1e-9;  // residual gate for candidate resolution

double clamp1(double p) { return std::clamp(p, -1.0, 1.0); }

std::string fmt_const(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

double gk(const std::function<double(double)>& f, double a, double b) {
  if (a == b) return 0.0;
  return boost::math::quadrature::gauss_kronrod<double, 15>::integrate(f, a, b, 12, 1e-13);
}

// Assembles an entry from (theta, z, theta') closures. y comes from the
// closed form when given, otherwise from quadrature of e^z cos(theta)
// anchored at anchor_s with y(anchor_s) = 0.
ClosedFormSolution make_entry(std::string id, CurvatureCondition cond, double s_min, double s_max,
                              double window_lo, double window_hi, double anchor_s,
                              std::string description, std::function<double(double)> theta_of,
                              std::function<double(double)> z_of,
                              std::function<double(double)> theta_prime_of,
                              std::function<double(double)> y_closed = nullptr,
                              std::function<double(double)> y_prime_closed = nullptr) {
  ClosedFormSolution e;
  e.id = std::move(id);
  e.condition = std::move(cond);
  e.s_min = s_min;
  e.s_max = s_max;
  e.window_lo = window_lo;
  e.window_hi = window_hi;
  e.anchor_s = anchor_s;
  e.description = std::move(description);

  auto y_of = [=](double s) -> double {
    if (y_closed) return y_closed(s);
    return gk([=](double t) { return std::exp(z_of(t)) * std::cos(theta_of(t)); }, anchor_s, s);
  };
  e.eval = [=](double s) -> CurveState { return {s, y_of(s), z_of(s), theta_of(s)}; };
  e.derivs = [=](double s) -> std::array<double, 3> {
    const double yp =
        y_prime_closed ? y_prime_closed(s) : std::exp(z_of(s)) * std::cos(theta_of(s));
    return {yp, std::sin(theta_of(s)), theta_prime_of(s)};
  };
  e.theta_of = theta_of;
  e.z_of = z_of;
  return e;
}

// Residual-gate selection among candidate readings of the same entry:
// exactly one candidate must pass; the winner's description records the
// rejected siblings.
ClosedFormSolution select_candidate(std::vector<ClosedFormSolution> candidates) {
  std::vector<double> res;
  res.reserve(candidates.size());
  for (const auto& c : candidates) {
    Trajectory t = sample_entry(c, 200);
    res.push_back(residual(c.condition, t));
  }
  int winner = -1;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (res[i] < kGate) {
      if (winner >= 0) throw std::logic_error("catalog: multiple candidates pass the gate");
      winner = static_cast<int>(i);
    }
  }
  if (winner < 0) throw std::logic_error("catalog: no candidate passes the residual gate");
  ClosedFormSolution out = candidates[static_cast<std::size_t>(winner)];
  out.description += " [residual gate selected this reading";
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (static_cast<int>(i) != winner) out.description += "; rejected " + candidates[i].id;
  }
  out.description += "]";
  return out;
}

}  // namespace

ClosedFormSolution minimal_leaf_f2() {
  const double th = M_PI / 2.0;
  return make_entry(
      "minimal.leaf-f2", Cmc{0.0}, -kInf, kInf, -8.0, 8.0, 0.0,
      "leaf of F2 (y const, z = s); totally geodesic, satisfies kappa1 = m kappa2 for every m",
      [=](double) { return th; }, [](double s) { return s; }, [](double) { return 0.0; },
      [](double) { return 0.0; }, [](double) { return 0.0; });
}

ClosedFormSolution minimal_leaf_f3() {
  return make_entry(
      "minimal.leaf-f3", Cmc{0.0}, -kInf, kInf, -8.0, 8.0, 0.0,
      "leaf of F3 (z const, y = s); minimal and flat", [](double) { return 0.0; },
      [](double) { return 0.0; }, [](double) { return 0.0; }, [](double s) { return s; },
      [](double) { return 1.0; });
}

ClosedFormSolution minimal_log_graph(double theta0) {
  const double st = std::sin(theta0);
  const double ct = std::cos(theta0);
  if (st == 0.0 || ct == 0.0) {
    throw ConfigError("minimal_log_graph: theta0 must avoid the leaf angles");
  }
  return make_entry(
      "minimal.log-graph", Cmc{0.0}, -kInf, kInf, -6.0, 6.0, 0.0,
      "minimal graph z(y) = log(tan(theta0) y): theta = theta0, z = sin(theta0) s, "
      "y = cot(theta0) e^z",
      [=](double) { return theta0; }, [=](double s) { return st * s; },
      [](double) { return 0.0; }, [=](double s) { return (ct / st) * std::exp(st * s); },
      [=](double s) { return ct * std::exp(st * s); });
}

ClosedFormSolution cmc_entry(double H) {
  if (H == 0.0) throw ConfigError("cmc_entry: H must be nonzero (minimal entries are separate)");
  const double T = M_PI / H;
  return make_entry("cmc.H=" + fmt_const(H), Cmc{H}, -kInf, kInf, -2.0 * T, 2.0 * T, 0.0,
                    "constant mean curvature: theta = 2Hs, z = -cos(2Hs)/(2H), y by quadrature; "
                    "z periodic with period pi/H",
                    [=](double s) { return 2.0 * H * s; },
                    [=](double s) { return -std::cos(2.0 * H * s) / (2.0 * H); },
                    [=](double) { return 2.0 * H; });
}

ClosedFormSolution kint_zero_curve() {
  auto sq = [](double s) { return std::sqrt(s * s - 1.0); };
  return make_entry(
      "kint.c=0.curve", IntrinsicK{0.0}, 1.0, kInf, 1.0, 9.0, 2.0,
      "K_int = 0: sin(theta) = 1/s, z = log s, y = (s sqrt(s^2-1) - log(s+sqrt(s^2-1)))/2, s > 1",
      [](double s) { return std::asin(clamp1(1.0 / s)); }, [](double s) { return std::log(s); },
      [=](double s) { return -1.0 / (s * sq(s)); },
      [=](double s) { return 0.5 * (s * sq(s) - std::log(s + sq(s))); },
      [=](double s) { return sq(s); });
}

ClosedFormSolution kint_log_cosh() {
  return make_entry("kint.c=-1.graph", IntrinsicK{-1.0}, -kInf, kInf, -8.0, 8.0, 0.0,
                    "K_int = -1: the graph z(y) = log(cosh y); sin(theta) = tanh s, "
                    "z = log(cosh s), y = s",
                    [](double s) { return std::asin(clamp1(std::tanh(s))); },
                    [](double s) { return std::log(std::cosh(s)); },
                    [](double s) { return 1.0 / std::cosh(s); }, [](double s) { return s; },
                    [](double) { return 1.0; });
}

ClosedFormSolution kint_entire_min(double c) {
  if (!(c > -1.0 && c < 0.0)) throw ConfigError("kint_entire_min: requires c in (-1,0)");
  const double A = std::sqrt(-c);
  auto p = [=](double s) { return A * std::tanh(A * s); };
  return make_entry(
      "kint.c=" + fmt_const(c) + ".entire-min", IntrinsicK{c}, -kInf, kInf, -10.0, 10.0, 0.0,
      "K_int = c in (-1,0), branch sin^2+c < 0: sin(theta) = sqrt(-c) tanh(sqrt(-c) s), "
      "z = log(cosh(sqrt(-c) s)); entire graph with a single minimum",
      [=](double s) { return std::asin(clamp1(p(s))); },
      [=](double s) { return std::log(std::cosh(A * s)); },
      [=](double s) {
        const double sch = 1.0 / std::cosh(A * s);
        return A * A * sch * sch / std::sqrt(1.0 - p(s) * p(s));
      });
}

namespace {

ClosedFormSolution kint_half_line_coth(double c) {
  const double A = std::sqrt(-c);
  const double s_left = std::atanh(A) / A;
  auto p = [=](double s) { return clamp1(A / std::tanh(A * s)); };
  return make_entry(
      "kint.c=" + fmt_const(c) + ".half-line", IntrinsicK{c}, s_left, kInf, s_left, s_left + 8.0,
      2.0 * s_left,
      "K_int = c in (-1,0), branch sin^2+c > 0: sin(theta) = sqrt(-c) coth(sqrt(-c) s), "
      "z = log(sinh(sqrt(-c) s)); monotone graph on a half-line, vertical at the left end",
      [=](double s) { return std::asin(p(s)); },
      [=](double s) { return std::log(std::sinh(A * s)); },
      [=](double s) {
        const double sh = std::sinh(A * s);
        return -(A * A / (sh * sh)) / std::sqrt(1.0 - p(s) * p(s));
      });
}

}  // namespace

ClosedFormSolution kint_half_line_rejected(double c) {
  if (!(c > -1.0 && c < 0.0)) throw ConfigError("kint_half_line: requires c in (-1,0)");
  const double A = std::sqrt(-c);
  // cot reading: valid angle range only on [atan(A)/A, pi/(4A)].
  const double lo = std::atan(A) / A;
  const double hi = M_PI / (4.0 * A);
  auto p = [=](double s) { return clamp1(A / std::tan(A * s)); };
  return make_entry("kint.c=" + fmt_const(c) + ".half-line.cot-rejected", IntrinsicK{c}, lo, hi,
                    lo, hi, 0.5 * (lo + hi), "cot reading of the half-line branch",
                    [=](double s) { return std::asin(p(s)); },
                    [=](double s) { return std::log(std::sinh(A * s)); },
                    [=](double s) {
                      const double sn = std::sin(A * s);
                      return -(A * A / (sn * sn)) / std::sqrt(1.0 - p(s) * p(s));
                    });
}

ClosedFormSolution kint_half_line(double c) {
  if (!(c > -1.0 && c < 0.0)) throw ConfigError("kint_half_line: requires c in (-1,0)");
  return select_candidate({kint_half_line_coth(c), kint_half_line_rejected(c)});
}

namespace {

ClosedFormSolution kint_bounded_sin(double c) {
  if (c > 0.0) {
    const double B = std::sqrt(c);
    const double M = std::atan(1.0 / B) / B;
    auto p = [=](double s) { return clamp1(-B * std::tan(B * s)); };
    return make_entry(
        "kint.c=" + fmt_const(c) + ".bounded", IntrinsicK{c}, -M, M, -M, M, 0.0,
        "K_int = c > 0: sin(theta) = -sqrt(c) tan(sqrt(c) s), z = log(cos(sqrt(c) s)); bounded "
        "domain, single maximum, vertical at both ends",
        [=](double s) { return std::asin(p(s)); },
        [=](double s) { return std::log(std::cos(B * s)); },
        [=](double s) {
          const double cs = std::cos(B * s);
          return (-B * B / (cs * cs)) / std::sqrt(1.0 - p(s) * p(s));
        });
  }
  const double B = std::sqrt(-c);
  const double M = std::atanh(1.0 / B) / B;
  auto p = [=](double s) { return clamp1(B * std::tanh(B * s)); };
  return make_entry(
      "kint.c=" + fmt_const(c) + ".bounded", IntrinsicK{c}, -M, M, -M, M, 0.0,
      "K_int = c < -1: sin(theta) = sqrt(-c) tanh(sqrt(-c) s), z = log(cosh(sqrt(-c) s)); "
      "bounded domain, single minimum, vertical at both ends",
      [=](double s) { return std::asin(p(s)); },
      [=](double s) { return std::log(std::cosh(B * s)); },
      [=](double s) {
        const double sch = 1.0 / std::cosh(B * s);
        return (B * B * sch * sch) / std::sqrt(1.0 - p(s) * p(s));
      });
}

}  // namespace

ClosedFormSolution kint_bounded_rejected(double c) {
  if (!(c < -1.0)) throw ConfigError("kint_bounded_rejected: requires c < -1");
  const double B = std::sqrt(-c);
  const double M = std::atanh(1.0 / B) / B;
  // reading with theta (not sin theta) equal to sqrt(-c) tanh(sqrt(-c) s)
  return make_entry("kint.c=" + fmt_const(c) + ".bounded.theta-rejected", IntrinsicK{c}, -M, M, -M,
                    M, 0.0, "theta reading of the bounded branch",
                    [=](double s) { return B * std::tanh(B * s); },
                    [=](double s) { return std::log(std::cosh(B * s)); },
                    [=](double s) {
                      const double sch = 1.0 / std::cosh(B * s);
                      return B * B * sch * sch;
                    });
}

ClosedFormSolution kint_bounded_scaled_rejected(double c) {
  if (!(c > 0.0)) throw ConfigError("kint_bounded_scaled_rejected: requires c > 0");
  const double B = std::sqrt(c);
  const double M = std::atan(1.0 / B) / B;
  auto p = [=](double s) { return clamp1(-B * std::tan(B * s)); };
  // reading with z = log(cos(sqrt(c) s)) / sqrt(c)
  return make_entry("kint.c=" + fmt_const(c) + ".bounded.scaled-rejected", IntrinsicK{c}, -M, M,
                    -M, M, 0.0, "scaled-z reading of the bounded branch",
                    [=](double s) { return std::asin(p(s)); },
                    [=](double s) { return std::log(std::cos(B * s)) / B; },
                    [=](double s) {
                      const double cs = std::cos(B * s);
                      return (-B * B / (cs * cs)) / std::sqrt(1.0 - p(s) * p(s));
                    });
}

ClosedFormSolution kint_bounded(double c) {
  if (!(c > 0.0 || c < -1.0)) throw ConfigError("kint_bounded: requires c > 0 or c < -1");
  if (c > 0.0) {
    return select_candidate({kint_bounded_sin(c), kint_bounded_scaled_rejected(c)});
  }
  return select_candidate({kint_bounded_sin(c), kint_bounded_rejected(c)});
}

ClosedFormSolution kint_log_graph(double c) {
  if (!(c > -1.0 && c < 0.0)) throw ConfigError("kint_log_graph: requires c in (-1,0)");
  const double theta0 = std::asin(std::sqrt(-c));
  ClosedFormSolution e = minimal_log_graph(theta0);
  e.id = "kint.c=" + fmt_const(c) + ".log-graph";
  e.condition = IntrinsicK{c};
  e.description = "K_int = c in (-1,0), stationary branch sin^2 theta0 = -c: the log graph "
                  "z(y) = log(tan(theta0) y)";
  return e;
}

ClosedFormSolution kext_tanh_graph() {
  return make_entry("kext.c=0.graph", ExtrinsicK{0.0}, -kInf, kInf, -8.0, 8.0, 0.0,
                    "K_ext = 0: sin(theta) = -tanh s, z = -log(cosh s), y = tanh s",
                    [](double s) { return std::asin(clamp1(-std::tanh(s))); },
                    [](double s) { return -std::log(std::cosh(s)); },
                    [](double s) { return -1.0 / std::cosh(s); },
                    [](double s) { return std::tanh(s); },
                    [](double s) {
                      const double sch = 1.0 / std::cosh(s);
                      return sch * sch;
                    });
}

namespace {

ClosedFormSolution kext_monotone_curve_derived() {
  auto sq = [](double s) { return std::sqrt(s * s - 1.0); };
  return make_entry(
      "kext.c=-1.curve", ExtrinsicK{-1.0}, 1.0, kInf, 1.0, 9.0, 2.0,
      "K_ext = -1: sin(theta) = -1/s, z = -log s, y = -sqrt(s^2-1)/s + log(s+sqrt(s^2-1)), s > 1",
      [](double s) { return std::asin(clamp1(-1.0 / s)); }, [](double s) { return -std::log(s); },
      [=](double s) { return 1.0 / (s * sq(s)); },
      [=](double s) { return -sq(s) / s + std::log(s + sq(s)); },
      [=](double s) { return sq(s) / (s * s); });
}

}  // namespace

ClosedFormSolution kext_monotone_curve_rejected() {
  auto sq = [](double s) { return std::sqrt(s * s - 1.0); };
  return make_entry("kext.c=-1.curve.rejected", ExtrinsicK{-1.0}, 1.0, kInf, 1.0, 9.0, 2.0,
                    "printed reading with y = -(s^2-1)/s + log(s+sqrt(s^2-1))",
                    [](double s) { return std::asin(clamp1(-1.0 / s)); },
                    [](double s) { return -std::log(s); },
                    [=](double s) { return 1.0 / (s * sq(s)); },
                    [=](double s) { return -(s * s - 1.0) / s + std::log(s + sq(s)); });
}

ClosedFormSolution kext_monotone_curve() {
  return select_candidate({kext_monotone_curve_derived(), kext_monotone_curve_rejected()});
}

ClosedFormSolution kext_two_asymptotes(double c) {
  if (!(c > -1.0 && c < 0.0)) throw ConfigError("kext_two_asymptotes: requires c in (-1,0)");
  const double A = std::sqrt(c + 1.0);
  auto p = [=](double s) { return clamp1(-A * std::tanh(A * s)); };
  return make_entry(
      "kext.c=" + fmt_const(c) + ".two-asymptotes", ExtrinsicK{c}, -kInf, kInf, -16.0, 16.0, 0.0,
      "K_ext = c in (-1,0), branch sin^2-c-1 < 0: sin(theta) = -sqrt(c+1) tanh(sqrt(c+1) s), "
      "z = -log(cosh(sqrt(c+1) s)); single maximum, asymptotic to two vertical lines",
      [=](double s) { return std::asin(p(s)); },
      [=](double s) { return -std::log(std::cosh(A * s)); },
      [=](double s) {
        const double sch = 1.0 / std::cosh(A * s);
        return (-A * A * sch * sch) / std::sqrt(1.0 - p(s) * p(s));
      });
}

ClosedFormSolution kext_one_asymptote(double c) {
  if (!(c > -1.0 && c < 0.0)) throw ConfigError("kext_one_asymptote: requires c in (-1,0)");
  const double A = std::sqrt(c + 1.0);
  const double s_right = -std::atanh(A) / A;
  auto p = [=](double s) { return clamp1(-A / std::tanh(A * s)); };
  return make_entry(
      "kext.c=" + fmt_const(c) + ".one-asymptote", ExtrinsicK{c}, -kInf, s_right,
      s_right - 14.0, s_right, 2.0 * s_right,
      "K_ext = c in (-1,0), branch sin^2-c-1 > 0: sin(theta) = -sqrt(c+1) coth(sqrt(c+1) s), "
      "z = -log(-sinh(sqrt(c+1) s)), s < 0; monotone, asymptotic to one vertical line",
      [=](double s) { return std::asin(p(s)); },
      [=](double s) { return -std::log(-std::sinh(A * s)); },
      [=](double s) {
        const double sh = std::sinh(A * s);
        return (A * A / (sh * sh)) / std::sqrt(1.0 - p(s) * p(s));
      });
}

ClosedFormSolution kext_bounded(double c) {
  if (!(c > 0.0 || c < -1.0)) throw ConfigError("kext_bounded: requires c > 0 or c < -1");
  if (c > 0.0) {
    const double A = std::sqrt(c + 1.0);
    const double M = std::atanh(1.0 / A) / A;
    auto p = [=](double s) { return clamp1(-A * std::tanh(A * s)); };
    return make_entry(
        "kext.c=" + fmt_const(c) + ".bounded", ExtrinsicK{c}, -M, M, -M, M, 0.0,
        "K_ext = c > 0: sin(theta) = -sqrt(c+1) tanh(sqrt(c+1) s), z = -log(cosh(sqrt(c+1) s)); "
        "bounded domain, single maximum, vertical at both ends",
        [=](double s) { return std::asin(p(s)); },
        [=](double s) { return -std::log(std::cosh(A * s)); },
        [=](double s) {
          const double sch = 1.0 / std::cosh(A * s);
          return (-A * A * sch * sch) / std::sqrt(1.0 - p(s) * p(s));
        });
  }
  const double B = std::sqrt(-c - 1.0);
  const double M = std::atan(1.0 / B) / B;
  auto p = [=](double s) { return clamp1(B * std::tan(B * s)); };
  return make_entry(
      "kext.c=" + fmt_const(c) + ".bounded", ExtrinsicK{c}, -M, M, -M, M, 0.0,
      "K_ext = c < -1: sin(theta) = sqrt(-c-1) tan(sqrt(-c-1) s), z = -log(cos(sqrt(-c-1) s)); "
      "bounded domain, single minimum, vertical at both ends",
      [=](double s) { return std::asin(p(s)); },
      [=](double s) { return -std::log(std::cos(B * s)); },
      [=](double s) {
        const double cs = std::cos(B * s);
        return (B * B / (cs * cs)) / std::sqrt(1.0 - p(s) * p(s));
      });
}

ClosedFormSolution kext_log_graph(double c) {
  if (!(c > -1.0 && c < 0.0)) throw ConfigError("kext_log_graph: requires c in (-1,0)");
  const double theta0 = std::asin(std::sqrt(c + 1.0));
  ClosedFormSolution e = minimal_log_graph(theta0);
  e.id = "kext.c=" + fmt_const(c) + ".log-graph";
  e.condition = ExtrinsicK{c};
  e.description = "K_ext = c in (-1,0), stationary branch sin^2 theta0 = c+1: the log graph "
                  "z(y) = log(tan(theta0) y)";
  return e;
}

ClosedFormSolution weingarten_entry(double m) {
  if (m == -1.0 || m == 1.0) {
    throw ConfigError("weingarten_entry: m = -1 (minimal) and m = 1 (umbilical) have no "
                      "dedicated closed form here");
  }
  const double k = m + 1.0;
  auto p = [=](double s) { return clamp1(-std::tanh(k * s)); };
  std::function<double(double)> y_closed = nullptr;
  std::function<double(double)> y_prime = [=](double s) {
    return std::pow(std::cosh(k * s), -(m + 2.0) / (m + 1.0));
  };
  if (m == -2.0) {
    y_closed = [](double s) { return s; };
  }
  return make_entry(
      "ratio.m=" + fmt_const(m), PrincipalRatio{m}, -kInf, kInf, -10.0, 10.0, 0.0,
      "kappa1 = m kappa2: sin(theta) = -tanh((m+1)s), z = -log(cosh((m+1)s))/(m+1), "
      "y' = cosh((m+1)s)^(-(m+2)/(m+1))",
      [=](double s) { return std::asin(p(s)); },
      [=](double s) { return -std::log(std::cosh(k * s)) / k; },
      [=](double s) { return -k / std::cosh(k * s); }, y_closed, y_prime);
}

std::vector<ClosedFormSolution> catalog_entries() {
  std::vector<ClosedFormSolution> out;
  out.push_back(minimal_leaf_f2());
  out.push_back(minimal_leaf_f3());
  out.push_back(minimal_log_graph(M_PI / 4.0));
  out.push_back(cmc_entry(0.5));
  out.push_back(cmc_entry(1.0));
  out.push_back(kint_zero_curve());
  out.push_back(kint_log_cosh());
  out.push_back(kint_entire_min(-0.5));
  out.push_back(kint_half_line(-0.5));
  out.push_back(kint_log_graph(-0.5));
  out.push_back(kint_bounded(2.0));
  out.push_back(kint_bounded(-3.0));
  out.push_back(kext_tanh_graph());
  out.push_back(kext_monotone_curve());
  out.push_back(kext_two_asymptotes(-0.5));
  out.push_back(kext_one_asymptote(-0.5));
  out.push_back(kext_log_graph(-0.5));
  out.push_back(kext_bounded(2.0));
  out.push_back(kext_bounded(-3.0));
  out.push_back(weingarten_entry(-3.0));
  out.push_back(weingarten_entry(-2.0));
  out.push_back(weingarten_entry(-1.5));
  out.push_back(weingarten_entry(0.0));
  out.push_back(weingarten_entry(2.0));
  return out;
}

double quadrature_y(const ClosedFormSolution& solution, double s) {
  if (s < solution.s_min || s > solution.s_max || !std::isfinite(s)) {
    throw DomainError("quadrature_y: s outside the solution's domain");
  }
  const double base = solution.eval(solution.anchor_s).y;
  return base + gk(
                    [&](double t) {
                      const CurveState st = solution.eval(t);
                      return std::exp(st.z) * std::cos(st.theta);
                    },
                    solution.anchor_s, s);
}

Trajectory sample_entry(const ClosedFormSolution& solution, std::size_t n, double margin) {
  double lo = solution.window_lo;
  double hi = solution.window_hi;
  if (lo == solution.s_min) lo += margin;
  if (hi == solution.s_max) hi -= margin;
  if (!(hi > lo)) throw DomainError("sample_entry: empty sampling window");

  Trajectory traj;
  traj.condition = solution.condition;
  traj.samples.reserve(n + 1);
  auto ys = std::make_shared<std::vector<std::pair<double, double>>>();
  ys->reserve(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    const double s = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n);
    TrajectorySample smp;
    smp.state = solution.eval(s);
    smp.deriv = solution.derivs(s);
    smp.profile = curvature_profile(smp.state.theta, smp.deriv[2]);
    ys->emplace_back(s, smp.state.y);
    traj.samples.push_back(std::move(smp));
  }
  traj.lower = {TerminationKind::RangeEnd, lo, "sampling window"};
  traj.upper = {TerminationKind::RangeEnd, hi, "sampling window"};

  // Dense evaluator: z and theta from the closed forms; y from linear
  // interpolation of the samples (the residual machinery reads only z and
  // theta between samples).
  auto theta_of = solution.theta_of;
  auto z_of = solution.z_of;
  traj.analytic_eval = [theta_of, z_of, ys](double s) -> CurveState {
    CurveState st{s, 0.0, z_of(s), theta_of(s)};
    const auto& v = *ys;
    if (!v.empty()) {
      auto it = std::lower_bound(v.begin(), v.end(), s,
                                 [](const std::pair<double, double>& a, double b) {
                                   return a.first < b;
                                 });
      if (it == v.begin()) {
        st.y = v.front().second;
      } else if (it == v.end()) {
        st.y = v.back().second;
      } else {
        const auto& [s1, y1] = *it;
        const auto& [s0, y0] = *(it - 1);
        st.y = y0 + (y1 - y0) * (s - s0) / (s1 - s0);
      }
    }
    return st;
  };
  return traj;
}

}  // namespace solinv
