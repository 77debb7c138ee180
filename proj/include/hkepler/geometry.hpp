#pragma once

#include "hkepler/errors.hpp"
#include "hkepler/params.hpp"

namespace hkep {

/** Pseudo-spherical chart point on the single-sheeted hyperboloid
 *  -x0^2 + x1^2 + x2^2 + x3^2 = R^2.
 *
 *  tau is the unbounded quasi-radial angle, theta in [0, pi] the polar
 *  angle and phi in [0, 2*pi) the azimuth. tanh(tau) plays the role of a
 *  radial variable. */
struct PseudoSphericalPoint {
    double tau = 0.0;
    double theta = 0.0;
    double phi = 0.0;
};

/** Cartesian point of the 4D Minkowski ambient space (signature -+++). */
struct AmbientPoint {
    double x0 = 0.0;
    double x1 = 0.0;
    double x2 = 0.0;
    double x3 = 0.0;
};

/** Small coordinate displacement (or velocity) in the chart. */
struct CoordDelta {
    double dtau = 0.0;
    double dtheta = 0.0;
    double dphi = 0.0;
};

/** Returns a copy with phi wrapped to [0, 2*pi) and theta clamped to [0, pi]. */
PseudoSphericalPoint normalize_angles(const PseudoSphericalPoint& pt);

/** Wraps an angle to [0, 2*pi). */
double wrap_two_pi(double angle);

/** Wraps an angle difference to (-pi, pi]. */
double wrap_pi(double angle);

/** Embeds a chart point:
 *  x = (R sinh tau, R cosh tau sin theta cos phi,
 *       R cosh tau sin theta sin phi, R cosh tau cos theta). */
AmbientPoint to_embedding(const PseudoSphericalPoint& pt, const Params& params);

/** Relative defect of the hyperboloid constraint:
 *  (-x0^2 + x1^2 + x2^2 + x3^2) / R^2 - 1. Zero on the surface. */
double constraint_residual(const AmbientPoint& x, const Params& params);

/** Inverts the chart. Throws ConstraintViolation if the point is farther
 *  than `tol` (relative) from the surface, DegeneratePoint if
 *  x1 = x2 = x3 = 0. At the poles theta in {0, pi} the azimuth is set to 0. */
PseudoSphericalPoint from_embedding(const AmbientPoint& x, const Params& params,
                                    double tol = 1e-10);

/** Quadratic line element of the induced (indefinite) metric:
 *  R^2 [dtau^2 - cosh^2(tau) (dtheta^2 + sin^2(theta) dphi^2)].
 *  Negative for purely angular displacements. */
double line_element_sq(const PseudoSphericalPoint& pt, const CoordDelta& d,
                       const Params& params);

} // namespace hkep
