#include "hkepler/dynamics.hpp"

#include <cmath>

#include "hkepler/errors.hpp"

namespace hkep {

namespace {

constexpr double kSinThetaFloor = 1e-300; // only exact zero is singular

// p_theta^2 + p_phi^2/sin^2(theta), with the p_phi = 0 case defined as
// p_theta^2 even at the poles.
double angular_block(double theta, double p_theta, double p_phi) {
    if (p_phi == 0.0) return p_theta * p_theta;
    const double st = std::sin(theta);
    if (std::abs(st) < kSinThetaFloor)
        throw SingularConfiguration(
            "sin(theta) = 0 with nonzero p_phi: Hamiltonian undefined");
    return p_theta * p_theta + p_phi * p_phi / (st * st);
}

} // namespace

OrbitConstants OrbitConstants::from_state(const PhasePoint& s, const Params& params) {
    return OrbitConstants{hamiltonian(s, params), angular_momentum_sq(s), s.p_phi};
}

double hamiltonian(const PhasePoint& s, const Params& params) {
    const double R = params.radius;
    const double ch = std::cosh(s.q.tau);
    const double ang = angular_block(s.q.theta, s.p_theta, s.p_phi);
    return (s.p_tau * s.p_tau - ang / (ch * ch)) / (2.0 * R * R) -
           (params.alpha / R) * std::tanh(s.q.tau);
}

double kinetic_energy(const PseudoSphericalPoint& q, const CoordDelta& qdot,
                      const Params& params) {
    const double R2 = params.radius * params.radius;
    const double ch2 = std::pow(std::cosh(q.tau), 2);
    const double st2 = std::pow(std::sin(q.theta), 2);
    return 0.5 * R2 *
           (qdot.dtau * qdot.dtau -
            ch2 * (qdot.dtheta * qdot.dtheta + st2 * qdot.dphi * qdot.dphi));
}

Momenta legendre_momenta(const PseudoSphericalPoint& q, const CoordDelta& qdot,
                         const Params& params) {
    const double R2 = params.radius * params.radius;
    const double ch2 = std::pow(std::cosh(q.tau), 2);
    const double st2 = std::pow(std::sin(q.theta), 2);
    return Momenta{R2 * qdot.dtau, -R2 * ch2 * qdot.dtheta,
                   -R2 * ch2 * st2 * qdot.dphi};
}

PhaseVelocity equations_of_motion(const PhasePoint& s, const Params& params) {
    const double R = params.radius;
    const double R2 = R * R;
    const double ch = std::cosh(s.q.tau);
    const double ch2 = ch * ch;
    const double th = std::tanh(s.q.tau);
    const double st = std::sin(s.q.theta);
    const double ang = angular_block(s.q.theta, s.p_theta, s.p_phi);

    PhaseVelocity v;
    v.tau_dot = s.p_tau / R2;
    v.theta_dot = -s.p_theta / (R2 * ch2);
    v.phi_dot = (s.p_phi == 0.0) ? 0.0 : -s.p_phi / (R2 * ch2 * st * st);
    // dH/dtau = (ang/R^2) sech^2 tanh - (alpha/R) sech^2
    v.p_tau_dot = (params.alpha / R) / ch2 - ang * th / (R2 * ch2);
    // dH/dtheta = p_phi^2 cos(theta) / (R^2 cosh^2 sin^3)
    v.p_theta_dot = (s.p_phi == 0.0)
                        ? 0.0
                        : -s.p_phi * s.p_phi * std::cos(s.q.theta) /
                              (R2 * ch2 * st * st * st);
    v.p_phi_dot = 0.0; // phi is cyclic
    return v;
}

double angular_momentum_sq(const PhasePoint& s) {
    return angular_block(s.q.theta, s.p_theta, s.p_phi);
}

std::array<double, 6> pack(const PhasePoint& s) {
    return {s.q.tau, s.q.theta, s.q.phi, s.p_tau, s.p_theta, s.p_phi};
}

PhasePoint unpack(const std::array<double, 6>& y) {
    return PhasePoint{PseudoSphericalPoint{y[0], y[1], y[2]}, y[3], y[4], y[5]};
}

} // namespace hkep
