#ifndef B2P1_REDUCTION1D_HPP_
#define B2P1_REDUCTION1D_HPP_

#include <functional>
#include <string>
#include <vector>

#include "dynamics.hpp"
#include "grid.hpp"
#include "params.hpp"

namespace b2p1 {

struct Grid1D {
    int n = 0;
    double L = 0.0;

    Grid1D() = default;
    Grid1D(int n_, double L_);

    double dx() const { return L / n; }
    double x(int i) const { return i * dx(); }
    double kx(int j) const { return 2.0 * M_PI * j / L; }

    bool operator==(const Grid1D& o) const { return n == o.n && L == o.L; }
    bool operator!=(const Grid1D& o) const { return !(*this == o); }
};

class Field1D {
  public:
    Field1D() = default;
    explicit Field1D(const Grid1D& g) : grid_(g), v_(size_t(g.n), 0.0) {}

    static Field1D sample(const Grid1D& g, const std::function<double(double)>& fn);

    const Grid1D& grid() const { return grid_; }
    double& at(int i) { return v_[size_t(i)]; }
    double at(int i) const { return v_[size_t(i)]; }
    double* data() { return v_.data(); }
    const double* data() const { return v_.data(); }
    size_t size() const { return v_.size(); }
    bool empty() const { return v_.empty(); }

    bool finite() const;
    double max_abs() const;

    Field1D& operator+=(const Field1D& o);
    Field1D& operator-=(const Field1D& o);
    Field1D& operator*=(double s);
    friend Field1D operator+(Field1D a, const Field1D& b) { return a += b; }
    friend Field1D operator-(Field1D a, const Field1D& b) { return a -= b; }
    friend Field1D operator*(Field1D a, double s) { return a *= s; }
    friend Field1D operator*(double s, Field1D a) { return a *= s; }

  private:
    Grid1D grid_;
    std::vector<double> v_;
};

Field1D pointwise(const Field1D& a, const Field1D& b);
Field1D deriv(const Field1D& f, int order);
// Solve (c0 + c20 dxx + c40 dx4) u = f; symbol P = c0 - c20 k^2 + c40 k^4.
Field1D invert_symbol(const Field1D& f, double c0, double c20, double c40);
Field1D dealias(const Field1D& f);
double integral(const Field1D& f);

struct Bathymetry1D {
    Field1D h, hx;

    static Bathymetry1D flat(const Grid1D& g, double h0);
    static Bathymetry1D from_profile(const Grid1D& g, const std::function<double(double)>& fn);
    // Piecewise-linear tent peaking at x_peak, height 1, feet at 0 and L.
    static Bathymetry1D tent(const Grid1D& g, double x_peak);

    Field1D h_deriv(int a) const;
    bool empty() const { return h.empty(); }
};

// 1D pair state: elevation and w = f_x.
struct State1D {
    Field1D eta, w;
    double t = 0.0;

    State1D(Field1D eta_, Field1D w_, double t_ = 0.0);
};

struct Rhs1DResult {
    Field1D eta_t, w_t;
    int picard_iters = 0;
};

// The y-invariant restriction of the 2D pair, expressed in (eta, w). Built
// from the same term plans as the 2D module, so y-invariant 2D runs and 1D
// runs agree to round-off.
Rhs1DResult rhs1d(const State1D& s, const Bathymetry1D& bath, const SmallParams& p, Regime r,
                  SurfaceTensionMode st_mode = SurfaceTensionMode::Approx,
                  const StepperConfig& cfg = {});

State1D step_rk4_1d(const State1D& s, const StepperConfig& cfg, const Bathymetry1D& bath,
                    const SmallParams& p, Regime r,
                    SurfaceTensionMode st_mode = SurfaceTensionMode::Approx);

// Single-equation model over a gently varying bottom:
//   eta_t = -[eta_x + (3/2) a eta eta_x + c_disp eta_xxx - (d/4)(2 h eta_x + h_x eta)].
// c_disp defaults to beta/6; the bare printed coefficient 1/6 is available
// via as_printed.
double kdv_c_disp(const SmallParams& p, bool as_printed);
Field1D kdv_rhs(const Field1D& eta, const Bathymetry1D& bath, const SmallParams& p,
                double c_disp, bool dealias_products = true);
Field1D step_rk4_kdv(const Field1D& eta, double dt, const Bathymetry1D& bath,
                     const SmallParams& p, double c_disp, bool dealias_products = true);

// Right-moving sech^2 pulse with the compatibility w for a clean
// unidirectional launch. Throws when the tail is not negligible at the seam.
State1D soliton_init(const Grid1D& g, double amp, const SmallParams& p, double x0);
Field1D soliton_eta(const Grid1D& g, double amp, const SmallParams& p, double x0);

struct ReductionReport {
    double max_diff = 0.0;       // max |eta_2D - eta_1D| over the horizon
    double max_y_variance = 0.0; // departure of the 2D field from y-invariance
    bool reducible = true;       // initial data and bottom y-invariant
    std::vector<std::string> notes;
};

// Runs matched 2D and 1D evolutions from the x-profile of the given 2D state
// and compares surfaces along the way.
ReductionReport reduction_check(const WaveState& s2d, const Bathymetry& bath2d,
                                const SmallParams& p, Regime r, int steps,
                                const StepperConfig& cfg,
                                SurfaceTensionMode st_mode = SurfaceTensionMode::Approx);

}  // namespace b2p1

#endif  // B2P1_REDUCTION1D_HPP_
