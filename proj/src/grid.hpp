#ifndef B2P1_GRID_HPP_
#define B2P1_GRID_HPP_

#include <cmath>
#include <complex>
#include <functional>
#include <vector>

#include "errors.hpp"

namespace b2p1 {

// Periodic rectangular grid. Immutable after construction; cheap to copy.
// Points sit at x_i = i*dx, y_j = j*dy with no duplicated endpoint.
struct Grid2D {
    int nx = 0, ny = 0;
    double Lx = 0.0, Ly = 0.0;

    Grid2D() = default;
    Grid2D(int nx_, int ny_, double Lx_, double Ly_);

    double dx() const { return Lx / nx; }
    double dy() const { return Ly / ny; }
    double x(int i) const { return i * dx(); }
    double y(int j) const { return j * dy(); }
    // Wavenumber for signed mode index j (|j| <= n/2).
    double kx(int j) const { return 2.0 * M_PI * j / Lx; }
    double ky(int m) const { return 2.0 * M_PI * m / Ly; }

    bool operator==(const Grid2D& o) const {
        return nx == o.nx && ny == o.ny && Lx == o.Lx && Ly == o.Ly;
    }
    bool operator!=(const Grid2D& o) const { return !(*this == o); }
};

// Real scalar field sampled on a Grid2D, x index fastest in memory.
class Field2D {
  public:
    Field2D() = default;
    explicit Field2D(const Grid2D& g) : grid_(g), v_(size_t(g.nx) * g.ny, 0.0) {}
    Field2D(const Grid2D& g, double fill) : grid_(g), v_(size_t(g.nx) * g.ny, fill) {}

    static Field2D sample(const Grid2D& g, const std::function<double(double, double)>& fn);

    const Grid2D& grid() const { return grid_; }
    double& at(int i, int j) { return v_[size_t(j) * grid_.nx + i]; }
    double at(int i, int j) const { return v_[size_t(j) * grid_.nx + i]; }
    double* data() { return v_.data(); }
    const double* data() const { return v_.data(); }
    size_t size() const { return v_.size(); }
    bool empty() const { return v_.empty(); }

    bool finite() const;
    void require_finite(const char* where) const;

    double max_abs() const;
    double mean() const;

    Field2D& operator+=(const Field2D& o);
    Field2D& operator-=(const Field2D& o);
    Field2D& operator*=(double s);

    friend Field2D operator+(Field2D a, const Field2D& b) { return a += b; }
    friend Field2D operator-(Field2D a, const Field2D& b) { return a -= b; }
    friend Field2D operator*(Field2D a, double s) { return a *= s; }
    friend Field2D operator*(double s, Field2D a) { return a *= s; }

  private:
    Grid2D grid_;
    std::vector<double> v_;
};

// Pointwise product (no dealiasing).
Field2D pointwise(const Field2D& a, const Field2D& b);

// Constant-coefficient operator c0 + c20 dxx + c02 dyy + c40 dx4 + c22 dxxyy + c04 dy4.
// Symbol value on mode (kx,ky): P = c0 - c20 kx^2 - c02 ky^2 + c40 kx^4 + c22 kx^2 ky^2 + c04 ky^4.
struct OperatorSymbol {
    double c0 = 0, c20 = 0, c02 = 0, c40 = 0, c22 = 0, c04 = 0;

    static OperatorSymbol identity() { return {1.0, 0, 0, 0, 0, 0}; }

    double eval(double kx, double ky) const {
        const double kx2 = kx * kx, ky2 = ky * ky;
        return c0 - c20 * kx2 - c02 * ky2 + c40 * kx2 * kx2 + c22 * kx2 * ky2 + c04 * ky2 * ky2;
    }
    double default_tol() const { return 1e-12 * std::max(1.0, std::abs(c0)); }
};

// Exact Fourier differentiation; Nyquist mode of odd-order derivatives zeroed.
Field2D deriv(const Field2D& f, int ox, int oy);

// Solve (c0 + c20 dxx + ...) u = f mode by mode. Modes where |P| < tol_denom
// are zeroed when the numerator is below tol_denom, otherwise SingularSymbol.
Field2D invert_symbol(const Field2D& f, const OperatorSymbol& sym, double tol_denom = -1.0);

// Apply the operator (built from the same symbol values) spectrally.
Field2D apply_symbol(const Field2D& f, const OperatorSymbol& sym);

// 2/3-rule truncation: zero modes with |j| > floor(n/3) in either direction.
Field2D dealias(const Field2D& f);

// Periodic trapezoidal quadrature (== spectral): sum * dx * dy.
double integral(const Field2D& f);

// Energy fraction carried by modes outside the 2/3 band (instability warning).
double spectrum_tail_fraction(const Field2D& f);

// Multiply each spectral mode by factor(jx, jy) with signed indices.
Field2D spectral_filter(const Field2D& f, const std::function<double(int, int)>& factor);

// Complex spectrum access for diagnostics (Hermitian half-plane, ny x (nx/2+1),
// normalized so a single cos mode of amplitude A reads A/2).
std::vector<std::complex<double>> spectrum(const Field2D& f);

}  // namespace b2p1

#endif  // B2P1_GRID_HPP_
