#include "surface_tension.hpp"

#include <cmath>

namespace b2p1 {

Field2D st_exact(const Field2D& eta, const SmallParams& p) {
    const Grid2D& g = eta.grid();
    if (p.tau == 0.0) return Field2D(g);
    const Field2D ex = deriv(eta, 1, 0), ey = deriv(eta, 0, 1);
    const Field2D exx = deriv(eta, 2, 0), eyy = deriv(eta, 0, 2), exy = deriv(eta, 1, 1);

    const double a2b = p.alpha * p.alpha * p.beta;
    const double a2g = p.alpha * p.alpha * p.gamma;
    Field2D out(g);
    for (size_t i = 0; i < out.size(); ++i) {
        const double Ex = ex.data()[i], Ey = ey.data()[i];
        const double den = 1.0 + a2b * Ex * Ex + a2g * Ey * Ey;
        if (den < 0.5)
            throw SlopeTooLarge("surface slope outside the model's validity (denominator < 0.5)");
        // The asymmetric alpha^2*beta weight on eta_x^2 in the eta_yy factor
        // is deliberate; the unexpanded form is kept verbatim.
        const double num = p.beta * (1.0 + a2b * Ey * Ey) * exx.data()[i] +
                           p.gamma * (1.0 + a2b * Ex * Ex) * eyy.data()[i] -
                           2.0 * a2b * p.gamma * Ex * Ey * exy.data()[i];
        out.data()[i] = -p.tau * num / (den * std::sqrt(den));
    }
    return dealias(out);
}

Field2D st_approx(const Field2D& eta, const SmallParams& p) {
    if (p.tau == 0.0) return Field2D(eta.grid());
    Field2D out = deriv(eta, 2, 0) * (-p.tau * p.beta);
    out += deriv(eta, 0, 2) * (-p.tau * p.gamma);
    return out;
}

Field2D surface_tension(const Field2D& eta, const SmallParams& p, SurfaceTensionMode mode) {
    return mode == SurfaceTensionMode::Exact ? st_exact(eta, p) : st_approx(eta, p);
}

}  // namespace b2p1
