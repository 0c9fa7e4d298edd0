#include "grid.hpp"

#include <fftw3.h>

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

namespace b2p1 {

Grid2D::Grid2D(int nx_, int ny_, double Lx_, double Ly_) : nx(nx_), ny(ny_), Lx(Lx_), Ly(Ly_) {
    if (nx < 16 || ny < 16 || nx % 2 != 0 || ny % 2 != 0)
        throw Error("grid sizes must be even and >= 16, got " + std::to_string(nx) + "x" +
                    std::to_string(ny));
    if (!(Lx > 0.0) || !(Ly > 0.0)) throw Error("grid lengths must be positive");
}

Field2D Field2D::sample(const Grid2D& g, const std::function<double(double, double)>& fn) {
    Field2D f(g);
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) f.at(i, j) = fn(g.x(i), g.y(j));
    return f;
}

bool Field2D::finite() const {
    for (double x : v_)
        if (!std::isfinite(x)) return false;
    return true;
}

void Field2D::require_finite(const char* where) const {
    if (!finite()) throw NonFiniteField(std::string("non-finite field in ") + where);
}

double Field2D::max_abs() const {
    double m = 0.0;
    for (double x : v_) m = std::max(m, std::abs(x));
    return m;
}

double Field2D::mean() const {
    double s = 0.0;
    for (double x : v_) s += x;
    return v_.empty() ? 0.0 : s / double(v_.size());
}

Field2D& Field2D::operator+=(const Field2D& o) {
    if (grid_ != o.grid_) throw Error("field grids differ");
    for (size_t i = 0; i < v_.size(); ++i) v_[i] += o.v_[i];
    return *this;
}
Field2D& Field2D::operator-=(const Field2D& o) {
    if (grid_ != o.grid_) throw Error("field grids differ");
    for (size_t i = 0; i < v_.size(); ++i) v_[i] -= o.v_[i];
    return *this;
}
Field2D& Field2D::operator*=(double s) {
    for (double& x : v_) x *= s;
    return *this;
}

Field2D pointwise(const Field2D& a, const Field2D& b) {
    if (a.grid() != b.grid()) throw Error("field grids differ");
    Field2D r(a.grid());
    const double* pa = a.data();
    const double* pb = b.data();
    double* pr = r.data();
    for (size_t i = 0; i < a.size(); ++i) pr[i] = pa[i] * pb[i];
    return r;
}

namespace {

// Per-thread cache of FFTW plans and buffers, keyed by grid size.
// FFTW's planner is not thread-safe, so creation is serialized globally;
// execution happens on thread-local buffers.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

struct Transform {
    int nx, ny, nk;
    double* real;
    fftw_complex* cplx;
    fftw_plan fwd, bwd;

    Transform(int nx_, int ny_) : nx(nx_), ny(ny_), nk(nx_ / 2 + 1) {
        real = fftw_alloc_real(size_t(nx) * ny);
        cplx = fftw_alloc_complex(size_t(nk) * ny);
        std::lock_guard<std::mutex> lock(planner_mutex());
        // x index fastest => FFTW dims are {ny, nx}.
        fwd = fftw_plan_dft_r2c_2d(ny, nx, real, cplx, FFTW_ESTIMATE);
        bwd = fftw_plan_dft_c2r_2d(ny, nx, cplx, real, FFTW_ESTIMATE);
    }
    ~Transform() {
        std::lock_guard<std::mutex> lock(planner_mutex());
        fftw_destroy_plan(fwd);
        fftw_destroy_plan(bwd);
        fftw_free(real);
        fftw_free(cplx);
    }
    Transform(const Transform&) = delete;
    Transform& operator=(const Transform&) = delete;
};

Transform& transform_for(const Grid2D& g) {
    thread_local std::map<std::pair<int, int>, std::unique_ptr<Transform>> cache;
    auto key = std::make_pair(g.nx, g.ny);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, std::make_unique<Transform>(g.nx, g.ny)).first;
    return *it->second;
}

// Forward transform into the thread-local buffer; caller reads t.cplx.
Transform& forward(const Field2D& f) {
    Transform& t = transform_for(f.grid());
    std::copy(f.data(), f.data() + f.size(), t.real);
    fftw_execute(t.fwd);
    return t;
}

Field2D inverse(Transform& t, const Grid2D& g) {
    fftw_execute(t.bwd);
    Field2D out(g);
    const double scale = 1.0 / (double(g.nx) * g.ny);
    for (size_t i = 0; i < out.size(); ++i) out.data()[i] = t.real[i] * scale;
    return out;
}

inline int signed_ky_index(int m, int ny) { return (m <= ny / 2) ? m : m - ny; }

}  // namespace

Field2D deriv(const Field2D& f, int ox, int oy) {
    if (ox < 0 || oy < 0 || ox + oy > 8)
        throw Error("derivative order (" + std::to_string(ox) + "," + std::to_string(oy) +
                    ") out of range");
    f.require_finite("deriv");
    const Grid2D& g = f.grid();
    if (ox == 0 && oy == 0) return f;

    Transform& t = forward(f);
    for (int m = 0; m < g.ny; ++m) {
        const int sm = signed_ky_index(m, g.ny);
        const std::complex<double> iky(0.0, g.ky(sm));
        for (int j = 0; j < t.nk; ++j) {
            std::complex<double> c(t.cplx[size_t(m) * t.nk + j][0],
                                   t.cplx[size_t(m) * t.nk + j][1]);
            std::complex<double> mul(1.0, 0.0);
            const std::complex<double> ikx(0.0, g.kx(j));
            for (int p = 0; p < ox; ++p) mul *= ikx;
            for (int p = 0; p < oy; ++p) mul *= iky;
            // The Nyquist mode has no well-defined sign under odd derivatives.
            if ((ox % 2 == 1 && j == g.nx / 2) || (oy % 2 == 1 && m == g.ny / 2)) mul = 0.0;
            c *= mul;
            t.cplx[size_t(m) * t.nk + j][0] = c.real();
            t.cplx[size_t(m) * t.nk + j][1] = c.imag();
        }
    }
    Field2D out = inverse(t, g);
    out.require_finite("deriv output");
    return out;
}

Field2D invert_symbol(const Field2D& f, const OperatorSymbol& sym, double tol_denom) {
    f.require_finite("invert_symbol");
    if (tol_denom < 0.0) tol_denom = sym.default_tol();
    const Grid2D& g = f.grid();
    Transform& t = forward(f);
    const double norm = 1.0 / (double(g.nx) * g.ny);
    for (int m = 0; m < g.ny; ++m) {
        const int sm = signed_ky_index(m, g.ny);
        for (int j = 0; j < t.nk; ++j) {
            double* c = t.cplx[size_t(m) * t.nk + j];
            const double P = sym.eval(g.kx(j), g.ky(sm));
            if (std::abs(P) < tol_denom) {
                const double amp = std::hypot(c[0], c[1]) * norm;
                if (amp >= tol_denom) throw SingularSymbol(j, sm, std::abs(P));
                c[0] = c[1] = 0.0;
            } else {
                c[0] /= P;
                c[1] /= P;
            }
        }
    }
    Field2D out = inverse(t, g);
    out.require_finite("invert_symbol output");
    return out;
}

Field2D apply_symbol(const Field2D& f, const OperatorSymbol& sym) {
    const Grid2D& g = f.grid();
    Transform& t = forward(f);
    for (int m = 0; m < g.ny; ++m) {
        const int sm = signed_ky_index(m, g.ny);
        for (int j = 0; j < t.nk; ++j) {
            const double P = sym.eval(g.kx(j), g.ky(sm));
            t.cplx[size_t(m) * t.nk + j][0] *= P;
            t.cplx[size_t(m) * t.nk + j][1] *= P;
        }
    }
    return inverse(t, g);
}

Field2D dealias(const Field2D& f) {
    const Grid2D& g = f.grid();
    const int jcut = g.nx / 3, mcut = g.ny / 3;
    Transform& t = forward(f);
    for (int m = 0; m < g.ny; ++m) {
        const int sm = signed_ky_index(m, g.ny);
        for (int j = 0; j < t.nk; ++j) {
            if (j > jcut || std::abs(sm) > mcut) {
                t.cplx[size_t(m) * t.nk + j][0] = 0.0;
                t.cplx[size_t(m) * t.nk + j][1] = 0.0;
            }
        }
    }
    return inverse(t, g);
}

double integral(const Field2D& f) {
    const Grid2D& g = f.grid();
    double s = 0.0;
    for (size_t i = 0; i < f.size(); ++i) s += f.data()[i];
    return s * g.dx() * g.dy();
}

double spectrum_tail_fraction(const Field2D& f) {
    const Grid2D& g = f.grid();
    const int jcut = g.nx / 3, mcut = g.ny / 3;
    Transform& t = forward(f);
    double tail = 0.0, total = 0.0;
    for (int m = 0; m < g.ny; ++m) {
        const int sm = signed_ky_index(m, g.ny);
        for (int j = 0; j < t.nk; ++j) {
            const double* c = t.cplx[size_t(m) * t.nk + j];
            // Half-plane storage: interior kx columns represent two modes.
            const double w = (j == 0 || j == g.nx / 2) ? 1.0 : 2.0;
            const double e = w * (c[0] * c[0] + c[1] * c[1]);
            total += e;
            if (j > jcut || std::abs(sm) > mcut) tail += e;
        }
    }
    return total > 0.0 ? tail / total : 0.0;
}

Field2D spectral_filter(const Field2D& f, const std::function<double(int, int)>& factor) {
    const Grid2D& g = f.grid();
    Transform& t = forward(f);
    for (int m = 0; m < g.ny; ++m) {
        const int sm = signed_ky_index(m, g.ny);
        for (int j = 0; j < t.nk; ++j) {
            const double s = factor(j, sm);
            t.cplx[size_t(m) * t.nk + j][0] *= s;
            t.cplx[size_t(m) * t.nk + j][1] *= s;
        }
    }
    return inverse(t, g);
}

std::vector<std::complex<double>> spectrum(const Field2D& f) {
    const Grid2D& g = f.grid();
    Transform& t = forward(f);
    const double norm = 1.0 / (double(g.nx) * g.ny);
    std::vector<std::complex<double>> out(size_t(t.nk) * g.ny);
    for (size_t i = 0; i < out.size(); ++i)
        out[i] = std::complex<double>(t.cplx[i][0], t.cplx[i][1]) * norm;
    return out;
}

}  // namespace b2p1
