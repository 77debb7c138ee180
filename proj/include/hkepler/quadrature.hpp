#pragma once

#include <functional>

namespace hkep {

/** Adaptive Gauss-Kronrod (7, 15) quadrature of f over [a, b] to the given
 *  absolute tolerance. Bisects intervals until the local Kronrod error
 *  estimate fits within the tolerance share of the interval. Throws Error
 *  if the budget of subdivisions is exhausted. */
double integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, double abs_tol = 1e-12);

} // namespace hkep
