#include "hkepler/hjorbits.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "hkepler/errors.hpp"
#include "hkepler/quadrature.hpp"

namespace hkep {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPi = std::numbers::pi;

// a = alpha*R/L^2, the vertex abscissa of the subradical polynomial.
double vertex(const OrbitConstants& c, const Params& params) {
    return params.alpha * params.radius / c.l2;
}

// Discriminant D = a^2 + 2R^2E/L^2 + 1 of q(X), plus its natural scale.
struct Discriminant {
    double value;
    double scale;
};

Discriminant discriminant(const OrbitConstants& c, const Params& params) {
    const double a = vertex(c, params);
    const double e_term = 2.0 * params.radius * params.radius * c.energy / c.l2;
    return {a * a + e_term + 1.0, a * a + std::abs(e_term) + 1.0};
}

void require_positive_l2(const OrbitConstants& c, const char* where) {
    if (!(c.l2 > 0.0)) {
        std::ostringstream msg;
        msg << where << ": requires L^2 > 0, got " << c.l2;
        throw OutOfRange(msg.str());
    }
}

// asin with the documented clip window for turning-point roundoff.
double clipped_asin(double arg, const char* what) {
    constexpr double kClip = 1e-12;
    if (std::abs(arg) > 1.0 + kClip) {
        std::ostringstream msg;
        msg << what << ": asin argument " << arg << " outside [-1, 1]";
        throw OutOfRange(msg.str());
    }
    return std::asin(std::clamp(arg, -1.0, 1.0));
}

} // namespace

double effective_potential(double tau, double l2, const Params& params) {
    const double ch = std::cosh(tau);
    return -(params.alpha / params.radius) * std::tanh(tau) -
           l2 / (2.0 * params.radius * params.radius * ch * ch);
}

double energy_minimum(double l2, const Params& params) {
    const double aR = params.alpha * params.radius;
    return -(l2 + aR * aR / l2) / (2.0 * params.radius * params.radius);
}

std::optional<PotentialMinimum> potential_minimum(double l2, const Params& params) {
    const double aR = params.alpha * params.radius;
    if (!(l2 > aR)) return std::nullopt; // V_eff strictly decreasing
    return PotentialMinimum{std::atanh(aR / l2), energy_minimum(l2, params)};
}

double radial_poly(double x, const OrbitConstants& c, const Params& params) {
    const double a = vertex(c, params);
    return -x * x + 2.0 * a * x +
           2.0 * params.radius * params.radius * c.energy / c.l2 + 1.0;
}

TurningPoints turning_points(const OrbitConstants& c, const Params& params) {
    require_positive_l2(c, "turning_points");
    const auto [d, scale] = discriminant(c, params);
    if (d < -1e-12 * scale) {
        std::ostringstream msg;
        msg << "turning_points: discriminant " << d
            << " < 0 (E below the effective-potential floor "
            << energy_minimum(c.l2, params) << ")";
        throw NoRealMotion(msg.str());
    }
    const double root = std::sqrt(std::max(d, 0.0));
    const double a = vertex(c, params);
    return TurningPoints{a + root, a - root};
}

OrbitClass classify(const OrbitConstants& c, const Params& params, double rel_tol) {
    require_positive_l2(c, "classify");
    const double e_parabolic = -params.alpha / params.radius;
    const double e_unbound = params.alpha / params.radius;
    const double e = c.energy;

    if (c.l2 > params.alpha * params.radius) {
        const double e_min = energy_minimum(c.l2, params);
        const double tol_min = rel_tol * std::max(1.0, std::abs(e_min));
        if (e < e_min - tol_min) {
            std::ostringstream msg;
            msg << "classify: E = " << e << " below the floor E_min = " << e_min;
            throw NoRealMotion(msg.str());
        }
        if (std::abs(e - e_min) <= tol_min)
            return {OrbitKind::Circle, e_min, e_min};
        const double tol_par = rel_tol * std::max(1.0, std::abs(e_parabolic));
        if (std::abs(e - e_parabolic) <= tol_par)
            return {OrbitKind::Parabola, e_parabolic, e_parabolic};
        if (e < e_parabolic) return {OrbitKind::Ellipse, e_min, e_parabolic};
        if (e < e_unbound) return {OrbitKind::Hyperbola, e_parabolic, e_unbound};
        return {OrbitKind::DoublyUnbounded, e_unbound, kInf};
    }

    // L^2 <= alpha*R: the allowed X-interval lies outside (-1, 1) for all
    // E <= -alpha/R, so no bound classes exist.
    if (e <= e_parabolic) {
        std::ostringstream msg;
        msg << "classify: E = " << e << " <= -alpha/R with L^2 <= alpha*R: "
            << "the turning interval does not intersect |tanh tau| < 1";
        throw NoRealMotion(msg.str());
    }
    if (e < e_unbound) return {OrbitKind::Hyperbola, e_parabolic, e_unbound};
    return {OrbitKind::DoublyUnbounded, e_unbound, kInf};
}

ConicParams conic_params(const OrbitConstants& c, const Params& params) {
    require_positive_l2(c, "conic_params");
    const double a = vertex(c, params);
    if (std::abs(1.0 - a) <= 1e-12) {
        std::ostringstream msg;
        msg << "conic_params: L^2 = " << c.l2 << " equals alpha*R = "
            << params.alpha * params.radius << ", p undefined";
        throw DegenerateLatus(msg.str());
    }
    const auto [d, scale] = discriminant(c, params);
    if (d < -1e-12 * scale)
        throw NoRealMotion("conic_params: E below the effective-potential floor");
    const double p = 1.0 / (1.0 - a);
    // eps = sqrt(D)/|1 - a|; collapse roundoff-level discriminants to a circle
    const double eps =
        (d <= 1e-12 * scale) ? 0.0 : std::sqrt(d) / std::abs(1.0 - a);
    return ConicParams{p, eps};
}

std::optional<double> orbit_tau_of_phi(const ConicParams& cp, double phi) {
    const double x = 1.0 - (1.0 + cp.eps * std::cos(phi)) / cp.p;
    if (!(x > -1.0 && x < 1.0)) return std::nullopt;
    return std::atanh(x);
}

double circle_radius(const OrbitConstants& c, const Params& params, double rel_tol) {
    require_positive_l2(c, "circle_radius");
    const double a = vertex(c, params);
    if (!(a < 1.0))
        throw NotACircle("circle_radius: requires L^2 > alpha*R");
    const double e_min = energy_minimum(c.l2, params);
    if (std::abs(c.energy - e_min) > rel_tol * std::max(1.0, std::abs(e_min))) {
        std::ostringstream msg;
        msg << "circle_radius: E = " << c.energy << " != E_min = " << e_min;
        throw NotACircle(msg.str());
    }
    return std::atanh(a);
}

EllipseAxes ellipse_axes(const OrbitConstants& c, const Params& params) {
    const OrbitClass klass = classify(c, params);
    if (klass.kind == OrbitKind::Circle) {
        const double tau0 = std::atanh(vertex(c, params));
        return EllipseAxes{tau0, 0.0, tau0, tau0};
    }
    if (klass.kind != OrbitKind::Ellipse) {
        std::ostringstream msg;
        msg << "ellipse_axes: orbit is not bound (E = " << c.energy
            << ", L^2 = " << c.l2 << ")";
        throw NotBounded(msg.str());
    }
    const TurningPoints tp = turning_points(c, params);
    const double tau_min = std::atanh(tp.x2);
    const double tau_max = std::atanh(tp.x1);
    return EllipseAxes{0.5 * (tau_max + tau_min), 0.5 * (tau_max - tau_min),
                       tau_min, tau_max};
}

double period(double energy, const Params& params) {
    const double w = params.alpha / (params.radius * std::abs(energy));
    if (!(energy < 0.0) || !(w < 1.0)) {
        std::ostringstream msg;
        msg << "period: requires R|E| > alpha with E < 0, got E = " << energy;
        throw OutOfRange(msg.str());
    }
    return kPi * params.radius / std::sqrt(8.0 * std::abs(energy)) *
           (1.0 / std::sqrt(1.0 + w) + 1.0 / std::sqrt(1.0 - w));
}

double period_from_axis(double a, const Params& params) {
    if (!(a > 0.0))
        throw OutOfRange("period_from_axis: requires a > 0");
    const double r3 = std::pow(params.radius, 3);
    return std::sqrt(kPi * kPi * r3 / params.alpha * std::sinh(a) *
                     std::pow(std::cosh(a), 3));
}

double time_of_flight(const OrbitConstants& c, const Params& params,
                      double x_from, double x_to) {
    require_positive_l2(c, "time_of_flight");
    const TurningPoints tp = turning_points(c, params);
    constexpr double kEdge = 1e-12;
    if (x_from > x_to || x_from < tp.x2 - kEdge || x_to > tp.x1 + kEdge ||
        std::abs(x_from) >= 1.0 || std::abs(x_to) >= 1.0) {
        std::ostringstream msg;
        msg << "time_of_flight: [" << x_from << ", " << x_to
            << "] not inside the allowed span [" << tp.x2 << ", " << tp.x1
            << "] intersected with (-1, 1)";
        throw OutOfRange(msg.str());
    }
    const double width = tp.x1 - tp.x2;
    if (width == 0.0 || x_from == x_to) return 0.0;

    // u-substitution X = X2 + (X1 - X2) sin^2 u turns
    // dX / sqrt((X - X2)(X1 - X)) into 2 du, leaving a smooth integrand.
    auto u_of_x = [&](double x) {
        const double s = std::sqrt(std::clamp((x - tp.x2) / width, 0.0, 1.0));
        return std::asin(std::min(s, 1.0));
    };
    auto integrand = [&](double u) {
        const double su = std::sin(u);
        const double x = tp.x2 + width * su * su;
        return 2.0 / (1.0 - x * x);
    };
    const double val =
        integrate_adaptive(integrand, u_of_x(x_from), u_of_x(x_to), 1e-12);
    return params.radius * params.radius / std::sqrt(c.l2) * val;
}

double hj_beta(double tau, double theta, const OrbitConstants& c,
               const Params& params) {
    require_positive_l2(c, "hj_beta");
    const auto [d, scale] = discriminant(c, params);
    if (d < -1e-12 * scale)
        throw NoRealMotion("hj_beta: E below the effective-potential floor");
    const double root = std::sqrt(std::max(d, 0.0));
    const double du = std::tanh(tau) - vertex(c, params);

    double radial_term;
    if (root < 1e-15 * scale) {
        // circular orbit: tanh(tau) pinned to the vertex
        if (std::abs(du) > 1e-12)
            throw OutOfRange("hj_beta: tau off the circular radius");
        radial_term = 0.0;
    } else {
        radial_term = clipped_asin(du / root, "hj_beta radial term");
    }

    const double k2 = 1.0 - c.p_phi * c.p_phi / c.l2;
    const double ct = std::cos(theta);
    double polar_term;
    if (k2 <= 1e-24) {
        // equatorial family p_phi^2 = L^2: cos(theta) pinned to 0
        if (std::abs(ct) > 1e-12)
            throw OutOfRange("hj_beta: theta off the equatorial plane");
        polar_term = 0.0;
    } else {
        polar_term = clipped_asin(ct / std::sqrt(k2), "hj_beta polar term");
    }
    return (radial_term + polar_term) / (2.0 * std::sqrt(c.l2));
}

double orbit_plane(const OrbitConstants& c, double phi0, double phi) {
    if (c.p_phi == 0.0)
        throw DegenerateAngularMomentum("orbit_plane: p_phi = 0");
    const double ratio = c.l2 / (c.p_phi * c.p_phi);
    if (ratio < 1.0 - 1e-12)
        throw OutOfRange("orbit_plane: requires p_phi^2 <= L^2");
    const double s = std::sqrt(std::max(ratio - 1.0, 0.0));
    // theta = arccot(s sin(phi0 - phi)) on (0, pi)
    return kPi / 2.0 - std::atan(s * std::sin(phi0 - phi));
}

double hj_phi0(const PhasePoint& s) {
    if (s.p_phi == 0.0)
        throw DegenerateAngularMomentum("hj_phi0: p_phi = 0");
    const double l2 = angular_momentum_sq(s);
    const double ratio = l2 / (s.p_phi * s.p_phi);
    if (ratio - 1.0 < 1e-12)
        throw DegenerateAngularMomentum(
            "hj_phi0: equatorial orbit, plane azimuth undefined");
    const double sv = std::sqrt(ratio - 1.0);
    const double sin_term = 1.0 / std::tan(s.q.theta) / sv;
    const double cos_term = s.p_theta / (sv * s.p_phi);
    return wrap_two_pi(s.q.phi + std::atan2(sin_term, cos_term));
}

HJConstants hj_constants(const PhasePoint& s, double t, const Params& params) {
    const OrbitConstants c = OrbitConstants::from_state(s, params);
    const OrbitClass klass = classify(c, params);
    if (klass.kind != OrbitKind::Ellipse && klass.kind != OrbitKind::Circle)
        throw NotBounded("hj_constants: requires a bound orbit");

    HJConstants out;
    out.beta = hj_beta(s.q.tau, s.q.theta, c, params);
    if (c.p_phi * c.p_phi < c.l2 * (1.0 - 1e-12)) {
        out.phi0 = hj_phi0(s);
    } else {
        // equatorial convention: pericenter at phi = 0
        out.phi0 = wrap_two_pi(2.0 * out.beta * std::sqrt(c.l2) + kPi / 2.0);
    }

    if (klass.kind == OrbitKind::Circle) {
        out.t0 = t; // no radial phase to anchor
        return out;
    }
    const TurningPoints tp = turning_points(c, params);
    const double x = std::clamp(std::tanh(s.q.tau), tp.x2, tp.x1);
    const double to_here = time_of_flight(c, params, tp.x2, x);
    const double full = time_of_flight(c, params, tp.x2, tp.x1);
    const double since_peri = (s.p_tau >= 0.0) ? to_here : 2.0 * full - to_here;
    out.t0 = t - since_peri;
    return out;
}

double asymptote_angle(const ConicParams& cp) {
    if (!(cp.eps > 1.0)) {
        std::ostringstream msg;
        msg << "asymptote_angle: eps = " << cp.eps << " <= 1, orbit not unbound";
        throw NotUnbound(msg.str());
    }
    return std::acos(-1.0 / cp.eps);
}

} // namespace hkep
