#pragma once

#include <stdexcept>
#include <string>

namespace hkep {

/** Base class of every domain error thrown by this library. */
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/** An ambient point does not lie on the hyperboloid within tolerance. */
struct ConstraintViolation : Error { using Error::Error; };

/** Chart inversion requested at a point where the angles are undefined. */
struct DegeneratePoint : Error { using Error::Error; };

/** sin(theta) = 0 with nonzero azimuthal momentum. */
struct SingularConfiguration : Error { using Error::Error; };

/** Energy below the effective-potential floor: no classically allowed motion. */
struct NoRealMotion : Error { using Error::Error; };

/** L^2 = alpha*R: the conic parameter p is undefined. */
struct DegenerateLatus : Error { using Error::Error; };

/** Circular-orbit quantity requested away from the minimum-energy case. */
struct NotACircle : Error { using Error::Error; };

/** Bound-orbit quantity requested for an unbound energy. */
struct NotBounded : Error { using Error::Error; };

/** Argument outside the admissible domain of the operation. */
struct OutOfRange : Error { using Error::Error; };

/** Asymptote quantity requested for a non-hyperbolic orbit (eps <= 1). */
struct NotUnbound : Error { using Error::Error; };

/** p_phi = 0 (or the orbit plane degenerates): plane angle undefined. */
struct DegenerateAngularMomentum : Error { using Error::Error; };

/** Trajectory is not confined to the equatorial section theta = pi/2. */
struct NotPlanar : Error { using Error::Error; };

/** Adaptive step control could not meet the requested tolerance. */
struct StepFailure : Error { using Error::Error; };

} // namespace hkep
