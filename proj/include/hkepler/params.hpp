#pragma once

#include <stdexcept>

namespace hkep {

/** Physical configuration of the problem: coupling strength alpha
 *  (energy*length) and curvature radius R (length), both positive. */
struct Params {
    double alpha;
    double radius;

    Params(double alpha_, double radius_) : alpha(alpha_), radius(radius_) {
        if (!(alpha > 0.0) || !(radius > 0.0))
            throw std::invalid_argument("Params: alpha and radius must be > 0");
    }
};

} // namespace hkep
