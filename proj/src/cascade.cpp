#include "cascade.hpp"

#include <cmath>

#include "plan_eval.hpp"
#include "series.hpp"

namespace b2p1 {

namespace {

using Poly = HarmonicField::Poly;

Poly poly_add(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), 0.0);
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return r;
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0.0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

Poly poly_scale(Poly a, std::complex<double> s) {
    for (auto& c : a) c *= s;
    return a;
}

Poly poly_ddt(const Poly& a) {
    Poly r;
    for (size_t i = 1; i < a.size(); ++i) r.push_back(double(i) * a[i]);
    return r;
}

std::complex<double> poly_eval(const Poly& a, double t) {
    std::complex<double> v = 0.0;
    for (size_t i = a.size(); i-- > 0;) v = v * t + a[i];
    return v;
}

bool poly_zero(const Poly& a) {
    for (const auto& c : a)
        if (std::abs(c) != 0.0) return false;
    return true;
}

}  // namespace

bool HarmonicField::empty() const {
    for (const auto& [k, a] : h_)
        if (!poly_zero(a)) return false;
    return true;
}

void HarmonicField::trim() {
    for (auto it = h_.begin(); it != h_.end();) {
        Poly& a = it->second;
        while (!a.empty() && std::abs(a.back()) == 0.0) a.pop_back();
        if (a.empty()) it = h_.erase(it);
        else ++it;
    }
}

void HarmonicField::add(int jx, int jy, double omega, std::complex<double> amp, int tpow) {
    if (grid_.nx == 0) throw Error("harmonic field has no grid");
    if (std::abs(jx) > grid_.nx / 2 || std::abs(jy) > grid_.ny / 2)
        throw Error("harmonic mode (" + std::to_string(jx) + "," + std::to_string(jy) +
                    ") off the grid");
    Poly& a = h_[Key{jx, jy, omega}];
    if (int(a.size()) <= tpow) a.resize(tpow + 1, 0.0);
    a[tpow] += amp;
}

HarmonicField HarmonicField::operator+(const HarmonicField& o) const {
    if (grid_ != o.grid_) throw Error("harmonic grids differ");
    HarmonicField r = *this;
    for (const auto& [k, a] : o.h_) {
        auto it = r.h_.find(k);
        if (it == r.h_.end()) r.h_[k] = a;
        else it->second = poly_add(it->second, a);
    }
    r.trim();
    return r;
}

HarmonicField HarmonicField::operator*(const HarmonicField& o) const {
    if (grid_ != o.grid_) throw Error("harmonic grids differ");
    HarmonicField r(grid_);
    for (const auto& [ka, a] : h_)
        for (const auto& [kb, b] : o.h_) {
            const int jx = std::get<0>(ka) + std::get<0>(kb);
            const int jy = std::get<1>(ka) + std::get<1>(kb);
            const double om = std::get<2>(ka) + std::get<2>(kb);
            Poly prod = poly_mul(a, b);
            for (size_t p = 0; p < prod.size(); ++p) r.add(jx, jy, om, prod[p], int(p));
        }
    r.trim();
    return r;
}

HarmonicField HarmonicField::scaled(std::complex<double> s) const {
    HarmonicField r = *this;
    for (auto& [k, a] : r.h_) a = poly_scale(a, s);
    r.trim();
    return r;
}

HarmonicField HarmonicField::dx() const {
    HarmonicField r = *this;
    for (auto& [k, a] : r.h_)
        a = poly_scale(a, std::complex<double>(0.0, grid_.kx(std::get<0>(k))));
    r.trim();
    return r;
}

HarmonicField HarmonicField::dy() const {
    HarmonicField r = *this;
    for (auto& [k, a] : r.h_)
        a = poly_scale(a, std::complex<double>(0.0, grid_.ky(std::get<1>(k))));
    r.trim();
    return r;
}

HarmonicField HarmonicField::dt() const {
    // d/dt [A(t) e^{-i omega t}] = (A' - i omega A) e^{-i omega t}.
    HarmonicField r = *this;
    for (auto& [k, a] : r.h_)
        a = poly_add(poly_ddt(a), poly_scale(a, std::complex<double>(0.0, -std::get<2>(k))));
    r.trim();
    return r;
}

HarmonicField HarmonicField::derivative(int a, int b, int c) const {
    HarmonicField r = *this;
    for (int i = 0; i < a; ++i) r = r.dx();
    for (int i = 0; i < b; ++i) r = r.dy();
    for (int i = 0; i < c; ++i) r = r.dt();
    return r;
}

HarmonicField HarmonicField::wave_operator(double ratio) const {
    // L[A e^{i theta}] = [(omega^2 - kx^2 - ratio ky^2) A + 2 i omega A' - A''] e^{i theta}.
    HarmonicField r(grid_);
    for (const auto& [k, a] : h_) {
        const double kx = grid_.kx(std::get<0>(k)), ky = grid_.ky(std::get<1>(k));
        const double om = std::get<2>(k);
        const double D = om * om - kx * kx - ratio * ky * ky;
        Poly out = poly_scale(a, D);
        out = poly_add(out, poly_scale(poly_ddt(a), std::complex<double>(0.0, 2.0 * om)));
        out = poly_add(out, poly_scale(poly_ddt(poly_ddt(a)), -1.0));
        for (size_t p = 0; p < out.size(); ++p)
            r.add(std::get<0>(k), std::get<1>(k), om, out[p], int(p));
    }
    r.trim();
    return r;
}

Field2D HarmonicField::evaluate(double t, double* max_imag) const {
    Field2D out(grid_);
    Field2D imag(grid_);
    for (const auto& [k, a] : h_) {
        const double kx = grid_.kx(std::get<0>(k)), ky = grid_.ky(std::get<1>(k));
        const double om = std::get<2>(k);
        const std::complex<double> amp = poly_eval(a, t);
        for (int j = 0; j < grid_.ny; ++j) {
            const double py = ky * grid_.y(j) - om * t;
            for (int i = 0; i < grid_.nx; ++i) {
                const double th = kx * grid_.x(i) + py;
                const std::complex<double> e(std::cos(th), std::sin(th));
                const std::complex<double> v = amp * e;
                out.at(i, j) += v.real();
                imag.at(i, j) += v.imag();
            }
        }
    }
    if (max_imag) *max_imag = imag.max_abs();
    return out;
}

namespace {

void check_band(const PlaneWaveSpec& spec, const Grid2D& g) {
    for (const auto& c : spec.comps)
        if (std::abs(c.jx) > g.nx / 3 || std::abs(c.jy) > g.ny / 3)
            throw Error("mode (" + std::to_string(c.jx) + "," + std::to_string(c.jy) +
                        ") outside the dealias band");
}

// Harmonic content of the bottom profile; exact for flat and trigonometric
// kinds, refused otherwise.
HarmonicField bath_harmonics(const Bathymetry& bath, const Grid2D& g) {
    HarmonicField H(g);
    if (bath.is_flat() || bath.h().empty()) {
        const double h0 = bath.h().empty() ? 0.0 : bath.h().mean();
        if (h0 != 0.0) H.add(0, 0, 0.0, h0);
        return H;
    }
    if (bath.kind() != BathymetryKind::TrigPolynomial)
        throw NonHarmonicBathymetry(
            "bottom profile is not a trigonometric polynomial; use the time-stepped fallback");
    const auto spec = spectrum(bath.h());
    const int nk = g.nx / 2 + 1;
    for (int m = 0; m < g.ny; ++m) {
        const int sm = (m <= g.ny / 2) ? m : m - g.ny;
        for (int j = 0; j < nk; ++j) {
            const std::complex<double> c = spec[size_t(m) * nk + j];
            if (std::abs(c) < 1e-13) continue;
            if (j > g.nx / 3 || std::abs(sm) > g.ny / 3)
                throw NonHarmonicBathymetry("bottom spectrum reaches outside the dealias band");
            H.add(j, sm, 0.0, c);
            // Interior kx columns stand for a conjugate pair.
            if (j > 0 && j < g.nx / 2) H.add(-j, -sm, 0.0, std::conj(c));
        }
    }
    return H;
}

}  // namespace

PlaneWaveJet zeroth_solution(const PlaneWaveSpec& spec, const Grid2D& g, double ratio, double t) {
    check_band(spec, g);
    return PlaneWaveJet(g, spec.comps, ratio, t);
}

HarmonicField zeroth_harmonics(const PlaneWaveSpec& spec, const Grid2D& g, double ratio) {
    check_band(spec, g);
    HarmonicField F(g);
    for (const auto& c : spec.comps) {
        const double kx = g.kx(c.jx), ky = g.ky(c.jy);
        const double om = double(c.branch) * std::sqrt(kx * kx + ratio * ky * ky);
        // amp cos(theta + phase) = (amp/2) e^{i phase} e^{i theta} + conj.
        const std::complex<double> half =
            0.5 * c.amp * std::complex<double>(std::cos(c.phase), std::sin(c.phase));
        F.add(c.jx, c.jy, om, half);
        F.add(-c.jx, -c.jy, -om, std::conj(half));
    }
    return F;
}

CorrectionSources correction_sources(const PlaneWaveSpec& spec, const Grid2D& g,
                                     const Bathymetry& bath, const SmallParams& p) {
    const double r = p.ratio();
    const HarmonicField F = zeroth_harmonics(spec, g, r);
    const HarmonicField Fx = F.dx(), Fy = F.dy(), Ft = F.dt();

    CorrectionSources S{HarmonicField(g), HarmonicField(g), HarmonicField(g), HarmonicField(g)};
    S.Sa = (Fx * Fx.dt()).scaled(2.0) + Ft * Fx.dx() +
           ((Fy * Fy.dt()).scaled(2.0) + Ft * Fy.dy()).scaled(r);
    S.Sb = F.derivative(2, 0, 2).scaled(-0.5) + F.derivative(4, 0, 0).scaled(1.0 / 6.0);
    // The gamma-channel share of the first-order dispersive group,
    // -(1/6)(f_4x + 2 r f_xxyy + r^2 f_4y) + (1/2)(f_xxtt + r f_yytt):
    // the fourth-derivative bracket keeps its 1/6 weight, so that
    // beta Sb + gamma Sg cancels the equation's first-order terms exactly on
    // zeroth-order solutions.
    S.Sg = F.derivative(0, 4, 0).scaled(r / 6.0) + F.derivative(0, 2, 2).scaled(-0.5) +
           F.derivative(2, 2, 0).scaled(1.0 / 3.0);
    const HarmonicField H = bath_harmonics(bath, g);
    S.Sd = ((H * Fy).dy()).scaled(r) + (H * Fx).dx();
    return S;
}

HarmonicField solve_correction(const HarmonicField& source, const SmallParams& p, double tol_res,
                               ResonancePolicy policy, std::vector<std::string>* warnings) {
    const Grid2D& g = source.grid();
    const double r = p.ratio();
    HarmonicField u(g);
    for (const auto& [k, a] : source.harmonics()) {
        const int jx = std::get<0>(k), jy = std::get<1>(k);
        const double om = std::get<2>(k);
        const double kx = g.kx(jx), ky = g.ky(jy);
        const double D = om * om - kx * kx - r * ky * ky;
        const double tol = (tol_res > 0.0) ? tol_res : 1e-8 * std::max(1.0, om * om);
        if (a.size() > 1) throw Error("correction source has a secular amplitude");
        if (std::abs(D) >= tol) {
            if (warnings && std::abs(D) < 1e-3 * std::max(1.0, om * om))
                warnings->push_back("near-resonant harmonic (" + std::to_string(jx) + "," +
                                    std::to_string(jy) + "), amplification " +
                                    std::to_string(1.0 / std::abs(D)));
            u.add(jx, jy, om, a[0] / D);
            continue;
        }
        if (policy == ResonancePolicy::Error) throw ResonantForcing(jx, jy, om);
        if (warnings)
            warnings->push_back("resonant harmonic (" + std::to_string(jx) + "," +
                                std::to_string(jy) + ", omega=" + std::to_string(om) +
                                ") accepted as a secular term; the expansion is no longer "
                                "uniformly ordered in t");
        // Secular particular solutions: L[t e^{i th}] = 2 i omega e^{i th},
        // L[t^2/2] = -1 at the zero harmonic.
        if (om != 0.0)
            u.add(jx, jy, om, a[0] / std::complex<double>(0.0, 2.0 * om), 1);
        else if (jx == 0 && jy == 0)
            u.add(0, 0, 0.0, -0.5 * a[0], 2);
        else
            throw ResonantForcing(jx, jy, om);  // static on-surface harmonic, no clean form
    }
    return u;
}

HarmonicField compose(const PlaneWaveSpec& spec, const Grid2D& g, const Corrections& corr,
                      const SmallParams& p) {
    HarmonicField f = zeroth_harmonics(spec, g, p.ratio());
    if (!corr.a.harmonics().empty()) f = f + corr.a.scaled(p.alpha);
    if (!corr.b.harmonics().empty()) f = f + corr.b.scaled(p.beta);
    if (!corr.g.harmonics().empty()) f = f + corr.g.scaled(p.gamma);
    if (!corr.d.harmonics().empty()) f = f + corr.d.scaled(p.delta);
    return f;
}

Field2D surface_from_harmonics(const HarmonicField& f, const SmallParams& p, double t) {
    HarmonicJet jet(f, t);
    auto lookup = [&jet](const series::Monomial& m) -> Field2D {
        if (m.base != series::Base::F) throw Error("surface recovery expects only f factors");
        return jet.get(m.a, m.b, m.c);
    };
    return detail::eval_plan(series::emit_evaluator(series::eta_recovery(Regime::Case1)),
                             f.grid(), lookup, p, false);
}

}  // namespace b2p1
