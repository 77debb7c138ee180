#include "hkepler/quadrature.hpp"

#include <cmath>
#include <vector>

#include "hkepler/errors.hpp"

namespace hkep {

namespace {

// 15-point Kronrod rule with embedded 7-point Gauss rule on [-1, 1].
// Rows: abscissa, Gauss weight (0 for Kronrod-only nodes), Kronrod weight.
constexpr double kNodes[8][3] = {
    {0.000000000000000, 0.417959183673469, 0.209482141084728},
    {0.405845151377397, 0.381830050505119, 0.190350578064785},
    {0.741531185599394, 0.279705391489277, 0.140653259715525},
    {0.949107912342759, 0.129484966168870, 0.063092092629979},
    {0.207784955007898, 0.0, 0.204432940075298},
    {0.586087235467691, 0.0, 0.169004726639267},
    {0.864864423359769, 0.0, 0.104790010322250},
    {0.991455371120813, 0.0, 0.022935322010529},
};

struct Panel {
    double a;
    double b;
};

// Kronrod value plus error estimate on [a, b].
double gauss_kronrod(const std::function<double(double)>& f, double a, double b,
                     double& err) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    const double f0 = f(mid);
    double gauss = kNodes[0][1] * f0;
    double kron = kNodes[0][2] * f0;
    for (int i = 1; i < 8; ++i) {
        const double dx = half * kNodes[i][0];
        const double fi = f(mid + dx) + f(mid - dx);
        gauss += kNodes[i][1] * fi;
        kron += kNodes[i][2] * fi;
    }
    gauss *= half;
    kron *= half;

    err = std::pow(200.0 * std::abs(kron - gauss), 1.5);
    return kron;
}

} // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, double abs_tol) {
    if (a == b) return 0.0;
    const double sign = (b > a) ? 1.0 : -1.0;
    if (b < a) std::swap(a, b);
    const double total = b - a;

    constexpr int kMaxPanels = 4000;
    std::vector<Panel> stack{{a, b}};
    stack.reserve(64);
    double sum = 0.0;
    int used = 1;
    while (!stack.empty()) {
        const Panel p = stack.back();
        stack.pop_back();
        double err = 0.0;
        const double val = gauss_kronrod(f, p.a, p.b, err);
        const double share = abs_tol * (p.b - p.a) / total;
        // do not split below the resolution of the abscissa
        const double width_floor = 1e-15 * std::max(1.0, std::abs(p.a) + std::abs(p.b));
        if (err <= share || (p.b - p.a) < width_floor) {
            sum += val;
            continue;
        }
        if (used + 2 > kMaxPanels)
            throw Error("integrate_adaptive: subdivision budget exhausted");
        const double mid = 0.5 * (p.a + p.b);
        stack.push_back({p.a, mid});
        stack.push_back({mid, p.b});
        used += 2;
    }
    return sign * sum;
}

} // namespace hkep
