#include "solinv/condition.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace solinv {

namespace {

constexpr double kStationaryEps = 1e-13;

template <class... Ts>
struct Overload : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overload(Ts...) -> Overload<Ts...>;

double fmt_scale(double a, double b, double c) {
  return std::max({1.0, std::abs(a), std::abs(b), std::abs(c)});
}

}  // namespace

void validate(const CurvatureCondition& condition) {
  std::visit(Overload{
                 [](const Cmc&) {},
                 [](const IntrinsicK&) {},
                 [](const ExtrinsicK&) {},
                 [](const PrincipalRatio&) {},
                 [](const LinearWeingartenKappa& w) {
                   if (w.a == 0.0 && w.b == 0.0) {
                     throw ConfigError("lw-kappa: (a,b) must not be (0,0)");
                   }
                 },
                 [](const LinearWeingartenHK& w) {
                   if (w.a == 0.0 && w.b == 0.0) {
                     throw ConfigError("lw-hk: (a,b) must not be (0,0)");
                   }
                 },
             },
             condition);
}

double theta_prime(const CurvatureCondition& condition, double theta) {
  const double ct = std::cos(theta);
  const double st = std::sin(theta);
  return std::visit(
      Overload{
          [](const Cmc& c) { return 2.0 * c.H; },
          [&](const IntrinsicK& k) {
            if (ct == 0.0) {
              const double lim = (k.c == -1.0)
                                     ? 0.0
                                     : std::copysign(std::numeric_limits<double>::infinity(),
                                                     -(k.c + 1.0));
              throw SingularAngle("kint: theta' singular at cos(theta)=0", lim);
            }
            return -(k.c + st * st) / ct;
          },
          [&](const ExtrinsicK& k) {
            if (ct == 0.0) {
              const double lim = (k.c == 0.0)
                                     ? 0.0
                                     : std::copysign(std::numeric_limits<double>::infinity(), -k.c);
              throw SingularAngle("kext: theta' singular at cos(theta)=0", lim);
            }
            return -k.c / ct - ct;
          },
          [&](const PrincipalRatio& r) { return -(1.0 + r.m) * ct; },
          [&](const LinearWeingartenKappa& w) {
            if (w.a == 0.0) {
              throw SingularAngle("lw-kappa: a=0 forces cos(theta) constant; no theta' closure",
                                  std::numeric_limits<double>::quiet_NaN());
            }
            return (w.c - (w.a - w.b) * ct) / w.a;
          },
          [&](const LinearWeingartenHK& w) {
            const double den = w.a - 2.0 * w.b * ct;
            if (den == 0.0) {
              throw SingularAngle("lw-hk: theta' singular at a = 2b cos(theta)",
                                  std::copysign(std::numeric_limits<double>::infinity(),
                                                2.0 * w.c + 2.0 * w.b * ct * ct));
            }
            return (2.0 * w.c + 2.0 * w.b * ct * ct) / den;
          },
      },
      condition);
}

double defining_residual(const CurvatureCondition& condition, double theta,
                         double theta_prime_value) {
  const double ct = std::cos(theta);
  const double st = std::sin(theta);
  const double k1 = theta_prime_value + ct;
  const double k2 = -ct;
  return std::visit(
      Overload{
          [&](const Cmc& c) { return std::abs(theta_prime_value - 2.0 * c.H); },
          [&](const IntrinsicK& k) { return std::abs(-theta_prime_value * ct - st * st - k.c); },
          [&](const ExtrinsicK& k) { return std::abs(k1 * k2 - k.c); },
          [&](const PrincipalRatio& r) { return std::abs(k1 - r.m * k2); },
          [&](const LinearWeingartenKappa& w) { return std::abs(w.a * k1 + w.b * k2 - w.c); },
          [&](const LinearWeingartenHK& w) {
            return std::abs(w.a * 0.5 * theta_prime_value + w.b * k1 * k2 - w.c);
          },
      },
      condition);
}

bool is_stationary_angle(const CurvatureCondition& condition, double theta0) {
  const double ct = std::cos(theta0);
  const double st = std::sin(theta0);
  return std::visit(
      Overload{
          [](const Cmc& c) { return std::abs(2.0 * c.H) < kStationaryEps; },
          [&](const IntrinsicK& k) { return std::abs(k.c + st * st) < kStationaryEps; },
          [&](const ExtrinsicK& k) { return std::abs(st * st - k.c - 1.0) < kStationaryEps; },
          [&](const PrincipalRatio& r) { return std::abs((1.0 + r.m) * ct) < kStationaryEps; },
          [&](const LinearWeingartenKappa& w) {
            return std::abs(w.c - (w.a - w.b) * ct) < kStationaryEps * fmt_scale(w.a, w.b, w.c);
          },
          [&](const LinearWeingartenHK& w) {
            return std::abs(2.0 * w.c + 2.0 * w.b * ct * ct) <
                       kStationaryEps * fmt_scale(w.a, w.b, w.c) &&
                   std::abs(w.a - 2.0 * w.b * ct) > kStationaryEps;
          },
      },
      condition);
}

std::optional<double> singular_gap(const CurvatureCondition& condition, double theta) {
  const double ct = std::cos(theta);
  return std::visit(
      Overload{
          [](const Cmc&) -> std::optional<double> { return std::nullopt; },
          [&](const IntrinsicK& k) -> std::optional<double> {
            // For c = -1 the 1/cos factor cancels against the numerator.
            if (k.c == -1.0) return std::nullopt;
            return std::abs(ct);
          },
          [&](const ExtrinsicK& k) -> std::optional<double> {
            if (k.c == 0.0) return std::nullopt;
            return std::abs(ct);
          },
          [](const PrincipalRatio&) -> std::optional<double> { return std::nullopt; },
          [](const LinearWeingartenKappa&) -> std::optional<double> { return std::nullopt; },
          [&](const LinearWeingartenHK& w) -> std::optional<double> {
            if (w.b == 0.0) return std::nullopt;
            return std::abs(w.a - 2.0 * w.b * ct) / (2.0 * std::abs(w.b));
          },
      },
      condition);
}

std::string describe(const CurvatureCondition& condition) {
  std::ostringstream os;
  std::visit(Overload{
                 [&](const Cmc& c) { os << "cmc(H=" << c.H << ")"; },
                 [&](const IntrinsicK& k) { os << "kint(c=" << k.c << ")"; },
                 [&](const ExtrinsicK& k) { os << "kext(c=" << k.c << ")"; },
                 [&](const PrincipalRatio& r) { os << "ratio(m=" << r.m << ")"; },
                 [&](const LinearWeingartenKappa& w) {
                   os << "lw-kappa(a=" << w.a << ",b=" << w.b << ",c=" << w.c << ")";
                 },
                 [&](const LinearWeingartenHK& w) {
                   os << "lw-hk(a=" << w.a << ",b=" << w.b << ",c=" << w.c << ")";
                 },
             },
             condition);
  return os.str();
}

bool same_condition(const CurvatureCondition& a, const CurvatureCondition& b) {
  if (a.index() != b.index()) return false;
  return std::visit(
      Overload{
          [&](const Cmc& x) { return x.H == std::get<Cmc>(b).H; },
          [&](const IntrinsicK& x) { return x.c == std::get<IntrinsicK>(b).c; },
          [&](const ExtrinsicK& x) { return x.c == std::get<ExtrinsicK>(b).c; },
          [&](const PrincipalRatio& x) { return x.m == std::get<PrincipalRatio>(b).m; },
          [&](const LinearWeingartenKappa& x) {
            const auto& o = std::get<LinearWeingartenKappa>(b);
            return x.a == o.a && x.b == o.b && x.c == o.c;
          },
          [&](const LinearWeingartenHK& x) {
            const auto& o = std::get<LinearWeingartenHK>(b);
            return x.a == o.a && x.b == o.b && x.c == o.c;
          },
      },
      a);
}

}  // namespace solinv
