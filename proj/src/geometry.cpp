#include "hkepler/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace hkep {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

double wrap_two_pi(double angle) {
    double w = std::fmod(angle, kTwoPi);
    if (w < 0.0) w += kTwoPi;
    // fmod can land exactly on 2*pi after the correction
    if (w >= kTwoPi) w = 0.0;
    return w;
}

double wrap_pi(double angle) {
    double w = std::fmod(angle, kTwoPi);
    if (w > std::numbers::pi) w -= kTwoPi;
    if (w <= -std::numbers::pi) w += kTwoPi;
    return w;
}

PseudoSphericalPoint normalize_angles(const PseudoSphericalPoint& pt) {
    PseudoSphericalPoint out = pt;
    out.theta = std::clamp(pt.theta, 0.0, std::numbers::pi);
    out.phi = wrap_two_pi(pt.phi);
    return out;
}

AmbientPoint to_embedding(const PseudoSphericalPoint& pt, const Params& params) {
    const double R = params.radius;
    const double ch = std::cosh(pt.tau);
    const double st = std::sin(pt.theta);
    return AmbientPoint{R * std::sinh(pt.tau),
                        R * ch * st * std::cos(pt.phi),
                        R * ch * st * std::sin(pt.phi),
                        R * ch * std::cos(pt.theta)};
}

double constraint_residual(const AmbientPoint& x, const Params& params) {
    const double R2 = params.radius * params.radius;
    return (-x.x0 * x.x0 + x.x1 * x.x1 + x.x2 * x.x2 + x.x3 * x.x3) / R2 - 1.0;
}

PseudoSphericalPoint from_embedding(const AmbientPoint& x, const Params& params,
                                    double tol) {
    const double res = constraint_residual(x, params);
    if (std::abs(res) > tol) {
        std::ostringstream msg;
        msg << "from_embedding: constraint residual " << res
            << " exceeds tolerance " << tol;
        throw ConstraintViolation(msg.str());
    }
    const double rho2 = x.x1 * x.x1 + x.x2 * x.x2 + x.x3 * x.x3;
    if (rho2 == 0.0)
        throw DegeneratePoint("from_embedding: x1 = x2 = x3 = 0");

    const double R = params.radius;
    const double rho = std::sqrt(rho2); // = R cosh(tau) on the surface
    PseudoSphericalPoint pt;
    pt.tau = std::asinh(x.x0 / R);
    pt.theta = std::acos(std::clamp(x.x3 / rho, -1.0, 1.0));
    pt.phi = (x.x1 == 0.0 && x.x2 == 0.0) ? 0.0 : wrap_two_pi(std::atan2(x.x2, x.x1));
    return pt;
}

double line_element_sq(const PseudoSphericalPoint& pt, const CoordDelta& d,
                       const Params& params) {
    const double R2 = params.radius * params.radius;
    const double ch2 = std::pow(std::cosh(pt.tau), 2);
    const double st2 = std::pow(std::sin(pt.theta), 2);
    return R2 * (d.dtau * d.dtau -
                 ch2 * (d.dtheta * d.dtheta + st2 * d.dphi * d.dphi));
}

} // namespace hkep
