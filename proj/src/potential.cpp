#include "potential.hpp"

#include <cmath>

namespace b2p1 {

Field2D bottom_F(const Field2D& f, const Bathymetry& bath, const SmallParams& p, Regime r) {
    const Grid2D& g = f.grid();
    if (p.delta == 0.0) return Field2D(g);
    const double bd = p.beta * p.delta;
    const double rat = p.ratio();
    const Field2D fx = deriv(f, 1, 0), fy = deriv(f, 0, 1);

    auto div_x = [&](void) { return deriv(dealias(pointwise(bath.h(), fx)), 1, 0); };
    auto div_y = [&](void) { return deriv(dealias(pointwise(bath.h(), fy)), 0, 1); };

    Field2D F(g);
    switch (r) {
        case Regime::Case1: {
            F = dealias(pointwise(bath.hx(), fx));
            F += rat * dealias(pointwise(bath.hy(), fy));
            F += dealias(pointwise(bath.h(), deriv(f, 2, 0) + rat * deriv(f, 0, 2)));
            F *= bd;
            break;
        }
        case Regime::Case2:
            F = bd * (div_x() + rat * div_y());
            break;
        case Regime::Case3:
        case Regime::Case3ST:
            F = bd * div_x();
            break;
        case Regime::Case4:
            // The section's display form; its inline text swaps an x for a y,
            // see the derivation oracle for the cross-check.
            F = bd * div_x() + (p.gamma * p.delta) * div_y();
            break;
    }
    F.require_finite("bottom_F");
    return F;
}

PotentialSeries::PotentialSeries(Field2D f_, Field2D F_, int M_, const SmallParams& p)
    : f(std::move(f_)), F(std::move(F_)), M(M_), params(p) {
    if (M < 0 || M > 3) throw Error("potential series truncation M must be in [0, 3]");
    if (f.grid() != F.grid()) throw Error("f and F must share a grid");
}

namespace {

double fact(int n) {
    double r = 1.0;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

// L^m applied to u, L = beta dxx + gamma dyy.
std::vector<Field2D> l_powers(const Field2D& u, const SmallParams& p, int mmax) {
    std::vector<Field2D> out;
    out.push_back(u);
    for (int m = 1; m <= mmax; ++m)
        out.push_back(p.beta * deriv(out.back(), 2, 0) + p.gamma * deriv(out.back(), 0, 2));
    return out;
}

}  // namespace

Field2D phi_eval(const PotentialSeries& ps, double z) {
    const auto A = l_powers(ps.f, ps.params, ps.M);
    const auto B = l_powers(ps.F, ps.params, ps.M);
    Field2D phi(ps.f.grid());
    for (int m = 0; m <= ps.M; ++m) {
        const double se = (m % 2 ? -1.0 : 1.0);
        phi += (se * std::pow(z, 2 * m) / fact(2 * m)) * A[m];
        phi += (se * std::pow(z, 2 * m + 1) / fact(2 * m + 1)) * B[m];
    }
    return phi;
}

Field2D phi_z(const PotentialSeries& ps, double z) {
    const auto A = l_powers(ps.f, ps.params, ps.M);
    const auto B = l_powers(ps.F, ps.params, ps.M);
    Field2D out(ps.f.grid());
    for (int m = 0; m <= ps.M; ++m) {
        const double se = (m % 2 ? -1.0 : 1.0);
        if (m >= 1) out += (se * std::pow(z, 2 * m - 1) / fact(2 * m - 1)) * A[m];
        out += (se * std::pow(z, 2 * m) / fact(2 * m)) * B[m];
    }
    return out;
}

PotentialResiduals potential_residuals(const PotentialSeries& ps, const Bathymetry& bath,
                                       const std::vector<double>& z_samples) {
    const SmallParams& p = ps.params;
    const Grid2D& g = ps.f.grid();
    const auto A = l_powers(ps.f, p, ps.M + 1);
    const auto B = l_powers(ps.F, p, ps.M + 1);

    PotentialResiduals res;
    for (double z : z_samples) {
        // beta phi_xx + gamma phi_yy promotes each L^m to L^{m+1};
        // phi_zz differentiates the z powers analytically.
        Field2D r(g);
        for (int m = 0; m <= ps.M; ++m) {
            const double se = (m % 2 ? -1.0 : 1.0);
            r += (se * std::pow(z, 2 * m) / fact(2 * m)) * A[m + 1];
            r += (se * std::pow(z, 2 * m + 1) / fact(2 * m + 1)) * B[m + 1];
            if (m >= 2) r += (se * std::pow(z, 2 * m - 2) / fact(2 * m - 2)) * A[m];
            if (m >= 1) r += (se * std::pow(z, 2 * m - 1) / fact(2 * m - 1)) * B[m];
        }
        // m = 1 of the even z-family contributes -A[1] to phi_zz.
        r -= A[1];
        res.laplace = std::max(res.laplace, r.max_abs());
    }

    // Bottom condition at z = delta*h(x,y), pointwise polynomial in z.
    std::vector<Field2D> Ax, Ay, Bx, By;
    for (int m = 0; m <= ps.M; ++m) {
        Ax.push_back(deriv(A[m], 1, 0));
        Ay.push_back(deriv(A[m], 0, 1));
        Bx.push_back(deriv(B[m], 1, 0));
        By.push_back(deriv(B[m], 0, 1));
    }
    const Field2D& h = bath.h();
    const Field2D& hx = bath.hx();
    const Field2D& hy = bath.hy();
    double worst = 0.0;
    for (size_t i = 0; i < h.size(); ++i) {
        const double z = p.delta * h.data()[i];
        double pz = 0.0, px = 0.0, py = 0.0;
        for (int m = 0; m <= ps.M; ++m) {
            const double se = (m % 2 ? -1.0 : 1.0);
            const double ze = std::pow(z, 2 * m), zo = std::pow(z, 2 * m + 1);
            if (m >= 1) pz += se * std::pow(z, 2 * m - 1) / fact(2 * m - 1) * A[m].data()[i];
            pz += se * ze / fact(2 * m) * B[m].data()[i];
            px += se * ze / fact(2 * m) * Ax[m].data()[i] + se * zo / fact(2 * m + 1) * Bx[m].data()[i];
            py += se * ze / fact(2 * m) * Ay[m].data()[i] + se * zo / fact(2 * m + 1) * By[m].data()[i];
        }
        const double r = pz - p.beta * p.delta * hx.data()[i] * px -
                         p.gamma * p.delta * hy.data()[i] * py;
        worst = std::max(worst, std::abs(r));
    }
    res.bottom = worst;
    return res;
}

}  // namespace b2p1
