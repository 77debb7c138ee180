#pragma once

#include <array>

#include "hkepler/geometry.hpp"
#include "hkepler/params.hpp"

namespace hkep {

/** Point of the 6-dimensional phase space: chart coordinates plus the
 *  conjugate momenta (p_tau, p_theta, p_phi). */
struct PhasePoint {
    PseudoSphericalPoint q;
    double p_tau = 0.0;
    double p_theta = 0.0;
    double p_phi = 0.0;
};

/** Conjugate momenta returned by the Legendre transform. */
struct Momenta {
    double p_tau = 0.0;
    double p_theta = 0.0;
    double p_phi = 0.0;
};

/** Time derivative of a phase point under the canonical equations. */
struct PhaseVelocity {
    double tau_dot = 0.0;
    double theta_dot = 0.0;
    double phi_dot = 0.0;
    double p_tau_dot = 0.0;
    double p_theta_dot = 0.0;
    double p_phi_dot = 0.0;
};

/** Separation constants shared by a whole family of trajectories:
 *  total energy E, squared angular momentum L^2 and azimuthal momentum
 *  p_phi, with 0 <= p_phi^2 <= L^2. */
struct OrbitConstants {
    double energy = 0.0;
    double l2 = 0.0;
    double p_phi = 0.0;

    static OrbitConstants from_state(const PhasePoint& s, const Params& params);
};

/** H = (1/2R^2) [p_tau^2 - (p_theta^2 + p_phi^2/sin^2 theta)/cosh^2 tau]
 *      - (alpha/R) tanh tau.
 *  The angular block enters with a minus sign (indefinite metric).
 *  Throws SingularConfiguration if sin(theta) = 0 while p_phi != 0. */
double hamiltonian(const PhasePoint& s, const Params& params);

/** (R^2/2) [tau_dot^2 - cosh^2 tau (theta_dot^2 + sin^2 theta phi_dot^2)].
 *  Negative for purely angular motion. */
double kinetic_energy(const PseudoSphericalPoint& q, const CoordDelta& qdot,
                      const Params& params);

/** p_tau = R^2 tau_dot, p_theta = -R^2 cosh^2 tau theta_dot,
 *  p_phi = -R^2 cosh^2 tau sin^2 theta phi_dot. */
Momenta legendre_momenta(const PseudoSphericalPoint& q, const CoordDelta& qdot,
                         const Params& params);

/** Exact canonical equations q_dot = dH/dp, p_dot = -dH/dq.
 *  phi is cyclic, so p_phi_dot = 0 identically. */
PhaseVelocity equations_of_motion(const PhasePoint& s, const Params& params);

/** Squared angular momentum p_theta^2 + p_phi^2/sin^2 theta (>= 0).
 *  The 0/0 form at sin(theta) = 0 with p_phi = 0 exactly evaluates to
 *  p_theta^2 (removable singularity). */
double angular_momentum_sq(const PhasePoint& s);

/** Component order used when a phase point is flattened to an array:
 *  (tau, theta, phi, p_tau, p_theta, p_phi). */
std::array<double, 6> pack(const PhasePoint& s);
PhasePoint unpack(const std::array<double, 6>& y);

/** Canonical Poisson bracket {f, g} evaluated by second-order central
 *  differences, with the step scaled per coordinate as
 *  step * max(1, |coordinate|). Intended as a verification tool. */
template <class F, class G>
double poisson_bracket(const F& f, const G& g, const PhasePoint& s,
                       double step = 1e-5) {
    const std::array<double, 6> y0 = pack(s);
    std::array<double, 6> df{}, dg{};
    for (int i = 0; i < 6; ++i) {
        const double h = step * std::max(1.0, std::abs(y0[i]));
        std::array<double, 6> yp = y0, ym = y0;
        yp[i] += h;
        ym[i] -= h;
        df[i] = (f(unpack(yp)) - f(unpack(ym))) / (2.0 * h);
        dg[i] = (g(unpack(yp)) - g(unpack(ym))) / (2.0 * h);
    }
    double sum = 0.0;
    for (int i = 0; i < 3; ++i)
        sum += df[i] * dg[i + 3] - dg[i] * df[i + 3];
    return sum;
}

} // namespace hkep
