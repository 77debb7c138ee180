#pragma once

#include <optional>

#include "hkepler/dynamics.hpp"
#include "hkepler/params.hpp"

namespace hkep {

/** Roots of the radial subradical polynomial in X = tanh(tau), X1 >= X2.
 *  They satisfy X1 + X2 = 2*alpha*R/L^2 and X1*X2 = -(2*R^2*E/L^2 + 1). */
struct TurningPoints {
    double x1 = 0.0;
    double x2 = 0.0;
};

/** Shape parameters of the orbit equation
 *  1/(1 - tanh tau) = p / (1 + eps cos phi).
 *  p > 0 whenever L^2 > alpha*R; eps = 0 only for circular orbits. */
struct ConicParams {
    double p = 0.0;
    double eps = 0.0;
};

enum class OrbitKind { Circle, Ellipse, Parabola, Hyperbola, DoublyUnbounded };

/** Orbit class together with the energy window it belongs to (the window
 *  bounds are in energy units, +infinity for the open upper end). */
struct OrbitClass {
    OrbitKind kind = OrbitKind::Ellipse;
    double window_lo = 0.0;
    double window_hi = 0.0;
};

/** Elliptic axes in quasi-radial angle units: semi-major axis a and focal
 *  half-distance c, both >= 0, with tanh(2a) = alpha/(R|E|). */
struct EllipseAxes {
    double a = 0.0;
    double c = 0.0;
    double tau_min = 0.0;
    double tau_max = 0.0;
};

/** Trajectory constants of the separated solution: time offset t0,
 *  the conjugate beta of L^2 and the conjugate phi0 of p_phi. */
struct HJConstants {
    double t0 = 0.0;
    double beta = 0.0;
    double phi0 = 0.0;
};

/** Location and value of the effective-potential minimum. */
struct PotentialMinimum {
    double tau0 = 0.0;
    double value = 0.0;
};

/** A bound orbit returns to its initial phase point after two traversals
 *  of the pericenter-to-apocenter arc, i.e. after closure time 2*T where
 *  T = period(E). One traversal advances the azimuth by pi. */
inline constexpr double kClosurePeriodMultiple = 2.0;

/** Radial effective potential
 *  V_eff(tau) = -(alpha/R) tanh(tau) - L^2 / (2 R^2 cosh^2 tau).
 *  Both terms are attractive toward large tau. */
double effective_potential(double tau, double l2, const Params& params);

/** Floor of the admissible energies,
 *  E_min = -(L^2 + alpha^2 R^2 / L^2) / (2 R^2).
 *  Equals the effective-potential minimum when L^2 > alpha*R. */
double energy_minimum(double l2, const Params& params);

/** Minimum of the effective potential: tau0 = atanh(alpha*R/L^2) with value
 *  E_min, present only for L^2 > alpha*R (otherwise V_eff is strictly
 *  decreasing and no interior minimum exists). */
std::optional<PotentialMinimum> potential_minimum(double l2, const Params& params);

/** The subradical polynomial q(X) = -X^2 + 2(alpha R/L^2) X + 2R^2 E/L^2 + 1.
 *  p_tau^2 = L^2 q(tanh tau) along a trajectory with constants c. */
double radial_poly(double x, const OrbitConstants& c, const Params& params);

/** Roots of the subradical polynomial. Throws NoRealMotion when the
 *  discriminant is negative (E below energy_minimum). */
TurningPoints turning_points(const OrbitConstants& c, const Params& params);

/** Total classification of (E, L^2) into the orbit classes.
 *  For L^2 > alpha*R: Circle at E = E_min, Ellipse on (E_min, -alpha/R),
 *  Parabola at E = -alpha/R, Hyperbola on (-alpha/R, alpha/R),
 *  DoublyUnbounded for E >= alpha/R; NoRealMotion is thrown below E_min.
 *  For L^2 <= alpha*R the allowed X-interval leaves (-1, 1) at energies
 *  E <= -alpha/R, so those throw NoRealMotion as well. */
OrbitClass classify(const OrbitConstants& c, const Params& params,
                    double rel_tol = 1e-12);

/** Orbit-equation parameters p = (1 - alpha R/L^2)^(-1) and
 *  eps = sqrt(D)/|1 - alpha R/L^2| where D is the subradical discriminant;
 *  algebraically eps^2 = 1 + (2 alpha R/L^2)(1 + R E/alpha)/(1 - alpha R/L^2)^2.
 *  A discriminant within 1e-12 of zero is collapsed to eps = 0 (circle).
 *  Throws DegenerateLatus at L^2 = alpha*R and NoRealMotion below E_min. */
ConicParams conic_params(const OrbitConstants& c, const Params& params);

/** Solves the orbit equation for tau at azimuth phi (measured from
 *  pericenter). Absent where the implied tanh(tau) leaves (-1, 1), which
 *  encodes escape to infinity on unbound branches. */
std::optional<double> orbit_tau_of_phi(const ConicParams& cp, double phi);

/** Radius of the circular orbit, tau_circ = atanh(alpha*R/L^2); equivalently
 *  atanh(R|E|/alpha - sqrt(R^2E^2/alpha^2 - 1)), the conjugate-reciprocal
 *  root (the two sqrt branches multiply to 1 and only the smaller one lies
 *  inside the tanh range). Throws NotACircle unless E = E_min(L^2) within
 *  the relative tolerance, and that requires L^2 > alpha*R. */
double circle_radius(const OrbitConstants& c, const Params& params,
                     double rel_tol = 1e-10);

/** Axes of a bound orbit: a = (tau_max + tau_min)/2, c = (tau_max - tau_min)/2.
 *  tanh(2a) = alpha/(R|E|) and |tanh 2c| = |eps/(p - coth 2a)|; the focal
 *  half-distance is taken >= 0. Throws NotBounded for unbound inputs. */
EllipseAxes ellipse_axes(const OrbitConstants& c, const Params& params);

/** One pericenter-to-apocenter traversal time of elliptic motion,
 *  T = pi R / sqrt(8|E|) [ (1 + alpha/(R|E|))^(-1/2) + (1 - alpha/(R|E|))^(-1/2) ].
 *  Depends on E only. Requires R|E| > alpha with E < 0; throws OutOfRange
 *  otherwise (the second term diverges at the parabolic boundary). */
double period(double energy, const Params& params);

/** The same traversal time from the semi-major axis alone,
 *  T = sqrt(pi^2 R^3 / alpha * sinh(a) cosh^3(a)) (third-law form). */
double period_from_axis(double a, const Params& params);

/** Time of radial flight between X_from and X_to in X = tanh(tau):
 *  (R^2/L) Integral dX / ((1 - X^2) sqrt(q(X))). The inverse-square-root
 *  turning-point singularities are removed by X = X2 + (X1 - X2) sin^2 u
 *  before adaptive quadrature (absolute tolerance 1e-12).
 *  Limits must satisfy [X_from, X_to] within [X2, X1] and (-1, 1). */
double time_of_flight(const OrbitConstants& c, const Params& params,
                      double x_from, double x_to);

/** The conjugate of L^2,
 *  beta = (1/2L) [ asin((tanh tau - aR/L^2)/sqrt(D)) + asin(cos theta / k) ]
 *  with k = sqrt(1 - p_phi^2/L^2). Arguments at most 1e-12 outside [-1, 1]
 *  are clipped (turning-point roundoff); beyond that OutOfRange is thrown. */
double hj_beta(double tau, double theta, const OrbitConstants& c,
               const Params& params);

/** Polar angle of the orbit plane at azimuth phi:
 *  cot(theta) = sqrt(L^2/p_phi^2 - 1) sin(phi0 - phi).
 *  Throws DegenerateAngularMomentum when p_phi = 0. */
double orbit_plane(const OrbitConstants& c, double phi0, double phi);

/** Reconstructs the plane constant phi0 from a phase point, resolving the
 *  branch with the momenta: phi0 = phi + atan2(cot theta / s, p_theta/(s p_phi)),
 *  s = sqrt(L^2/p_phi^2 - 1). Wrapped to [0, 2 pi). Throws
 *  DegenerateAngularMomentum for p_phi = 0 or an equatorial orbit (s = 0). */
double hj_phi0(const PhasePoint& s);

/** All three trajectory constants for a bound state observed at time t.
 *  t0 is the most recent pericenter passage (constant modulo the closure
 *  time). For circles t0 degenerates to t itself. */
HJConstants hj_constants(const PhasePoint& s, double t, const Params& params);

/** Azimuth at which an unbound branch escapes, phi_inf = acos(-1/eps)
 *  (equivalently pi/2 + asin(1/eps)). Throws NotUnbound for eps <= 1. */
double asymptote_angle(const ConicParams& cp);

} // namespace hkep
