#include "params.hpp"

#include <algorithm>
#include <cmath>

namespace b2p1 {

SmallParams::SmallParams(double a, double b, double g, double d, double t)
    : alpha(a), beta(b), gamma(g), delta(d), tau(t) {
    auto in_unit = [](double x) { return x > 0.0 && x < 1.0; };
    if (!in_unit(alpha) || !in_unit(beta) || !in_unit(gamma) || !(delta >= 0.0 && delta < 1.0))
        throw Error("small parameters alpha, beta, gamma must lie in (0,1), delta in [0,1)");
    if (!(tau >= 0.0)) throw Error("Bond number tau must be >= 0");
    if (!std::isfinite(gamma / beta) || gamma / beta <= 0.0)
        throw Error("gamma/beta must be finite and positive");
}

SmallParams nondimensionalize(double a, double H, double L, double l, double a_h, double T,
                              double rho, double g) {
    if (!(a > 0) || !(H > 0) || !(L > 0) || !(l > 0))
        throw Error("lengths a, H, L, l must be positive");
    if (a_h < 0) throw Error("bottom amplitude a_h must be >= 0");
    if (!(rho > 0) || !(g > 0)) throw Error("rho and g must be positive");
    if (T < 0) throw Error("surface tension T must be >= 0");
    return SmallParams(a / H, (H / L) * (H / L), (H / l) * (H / l), a_h / H,
                       T / (rho * g * H * H));
}

const char* regime_name(Regime r) {
    switch (r) {
        case Regime::Case1: return "case1";
        case Regime::Case2: return "case2";
        case Regime::Case3: return "case3";
        case Regime::Case3ST: return "case3st";
        case Regime::Case4: return "case4";
    }
    return "?";
}

Regime regime_from_case(int n, bool with_surface_tension) {
    switch (n) {
        case 1: return Regime::Case1;
        case 2: return Regime::Case2;
        case 3: return with_surface_tension ? Regime::Case3ST : Regime::Case3;
        case 4: return Regime::Case4;
    }
    throw Error("case number must be 1..4");
}

namespace {
void check_band(RegimeDiagnostics& d, const char* name, double ratio) {
    if (!std::isfinite(ratio) || ratio == 0.0)
        throw Error(std::string("regime ratio ") + name + " is zero or non-finite");
    if (ratio < 1.0 / 3.0 || ratio > 3.0)
        d.warnings.push_back(std::string("ratio ") + name + " = " + std::to_string(ratio) +
                             " outside [1/3, 3] (local convention for 'comparable magnitude')");
}
}  // namespace

RegimeDiagnostics validate_regime(const SmallParams& p, Regime r) {
    RegimeDiagnostics d;
    const double b = p.beta, b2 = p.beta * p.beta;
    switch (r) {
        case Regime::Case1:
            d.A = p.alpha / b;
            d.G = p.gamma / b;
            d.D = p.delta / b;
            break;
        case Regime::Case2:
            d.A = p.alpha / b;
            d.G = p.gamma / b;
            d.D = p.delta / b2;
            break;
        case Regime::Case3:
        case Regime::Case3ST:
            d.A = p.alpha / b2;
            d.G = p.gamma / b2;
            d.D = p.delta / b2;
            break;
        case Regime::Case4: {
            const double a2 = p.alpha * p.alpha;
            d.A = p.beta / a2;   // leading parameter is alpha here, so the roles flip
            d.G = p.gamma / a2;
            d.D = p.delta / a2;
            break;
        }
    }
    check_band(d, r == Regime::Case4 ? "B" : "A", d.A);
    check_band(d, "G", d.G);
    if (d.D != 0.0) check_band(d, "D", d.D);  // delta = 0 means a flat bottom, no ordering to check
    if (r == Regime::Case3 && p.tau * std::max(p.beta, p.gamma) > 1e-3)
        d.warnings.push_back("surface tension not negligible (tau*max(beta,gamma) > 1e-3); "
                             "consider case3st");
    return d;
}

Bathymetry Bathymetry::flat(const Grid2D& grid, double h0) {
    BathymetrySpec s;
    s.kind = BathymetryKind::Flat;
    s.h0 = h0;
    return make(s, grid);
}

Bathymetry Bathymetry::make(const BathymetrySpec& spec, const Grid2D& grid) {
    Bathymetry b;
    b.kind_ = spec.kind;
    b.h_ = Field2D(grid);
    b.hx_ = Field2D(grid);
    b.hy_ = Field2D(grid);
    switch (spec.kind) {
        case BathymetryKind::Flat: {
            double h0 = std::clamp(spec.h0, -1.0, 1.0);
            b.h_ = Field2D(grid, h0);
            break;
        }
        case BathymetryKind::PiecewiseLinearX: {
            // Periodic tent: rises linearly to 1 at the peak, falls back to 0
            // at the periodic seam. Slope is exact a.e.; kinks carry the mean.
            const double xp = spec.tent_peak_x < 0 ? grid.Lx / 2 : spec.tent_peak_x;
            if (!(xp > 0) || !(xp < grid.Lx))
                throw Error("tent peak must lie strictly inside (0, Lx)");
            const double up = 1.0 / xp, down = 1.0 / (grid.Lx - xp);
            for (int j = 0; j < grid.ny; ++j)
                for (int i = 0; i < grid.nx; ++i) {
                    const double x = grid.x(i);
                    if (x <= xp) {
                        b.h_.at(i, j) = x * up;
                        b.hx_.at(i, j) = up;
                    } else {
                        b.h_.at(i, j) = (grid.Lx - x) * down;
                        b.hx_.at(i, j) = -down;
                    }
                }
            break;
        }
        case BathymetryKind::TrigPolynomial: {
            const int jcut = grid.nx / 3, mcut = grid.ny / 3;
            for (const TrigMode& m : spec.modes) {
                if (std::abs(m.jx) > jcut || std::abs(m.jy) > mcut)
                    throw Error("trigonometric bathymetry mode outside the 2/3 band");
                const double kx = grid.kx(m.jx), ky = grid.ky(m.jy);
                for (int j = 0; j < grid.ny; ++j)
                    for (int i = 0; i < grid.nx; ++i) {
                        const double th = kx * grid.x(i) + ky * grid.y(j) + m.phase;
                        b.h_.at(i, j) += m.amplitude * std::cos(th);
                        b.hx_.at(i, j) -= m.amplitude * kx * std::sin(th);
                        b.hy_.at(i, j) -= m.amplitude * ky * std::sin(th);
                    }
            }
            break;
        }
        case BathymetryKind::GridSampled: {
            if (!spec.samples || spec.samples->grid() != grid)
                throw Error("grid-sampled bathymetry requires samples on the target grid");
            b.h_ = *spec.samples;
            b.hx_ = deriv(b.h_, 1, 0);
            b.hy_ = deriv(b.h_, 0, 1);
            break;
        }
    }
    // Normalize so max|h| <= 1; delta carries the physical amplitude.
    const double m = b.h_.max_abs();
    if (m > 1.0) {
        b.h_ *= 1.0 / m;
        b.hx_ *= 1.0 / m;
        b.hy_ *= 1.0 / m;
    }
    return b;
}

Field2D Bathymetry::h_deriv(int a, int bb) const {
    if (a == 0 && bb == 0) return h_;
    if (a == 1 && bb == 0) return hx_;
    if (a == 0 && bb == 1) return hy_;
    if (kind_ == BathymetryKind::Flat) return Field2D(h_.grid());
    if (a >= 1) return deriv(hx_, a - 1, bb);
    return deriv(hy_, a, bb - 1);
}

}  // namespace b2p1
