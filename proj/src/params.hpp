#ifndef B2P1_PARAMS_HPP_
#define B2P1_PARAMS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "grid.hpp"

namespace b2p1 {

// The four expansion parameters plus the Bond number.
// alpha = a/H, beta = (H/L)^2, gamma = (H/l)^2, delta = a_h/H, tau = T/(rho g H^2).
struct SmallParams {
    double alpha = 0, beta = 0, gamma = 0, delta = 0, tau = 0;

    SmallParams() = default;
    SmallParams(double a, double b, double g, double d, double t = 0.0);

    double ratio() const { return gamma / beta; }  // gamma/beta, kept order-one
};

SmallParams nondimensionalize(double a, double H, double L, double l, double a_h, double T,
                              double rho, double g);

enum class Regime { Case1, Case2, Case3, Case3ST, Case4 };

const char* regime_name(Regime r);
Regime regime_from_case(int n, bool with_surface_tension = false);

struct RegimeDiagnostics {
    // Ratio constants relating the non-leading parameters to the leading one.
    double A = 0, G = 0, D = 0;
    std::vector<std::string> warnings;
    bool ok() const { return warnings.empty(); }
};

// Checks the parameter ordering against the selected case. "Comparable
// magnitude" has no canonical band; [1/3, 3] is a local convention and the
// warning text says so.
RegimeDiagnostics validate_regime(const SmallParams& p, Regime r);

enum class BathymetryKind { Flat, PiecewiseLinearX, TrigPolynomial, GridSampled };

struct TrigMode {
    int jx = 0, jy = 0;
    double amplitude = 0.0, phase = 0.0;
};

struct BathymetrySpec {
    BathymetryKind kind = BathymetryKind::Flat;
    double h0 = 0.0;                    // flat level
    double tent_peak_x = -1.0;          // PiecewiseLinearX: peak position (< 0 => Lx/2)
    std::vector<TrigMode> modes;        // TrigPolynomial
    const Field2D* samples = nullptr;   // GridSampled (borrowed)
};

// Bottom profile sampled on a grid, with derivatives analytic where the kind
// permits (flat, trig, tent a.e.) and spectral otherwise. Normalized to
// max|h| <= 1.
class Bathymetry {
  public:
    Bathymetry() = default;  // flat zero bottom

    static Bathymetry make(const BathymetrySpec& spec, const Grid2D& grid);
    static Bathymetry flat(const Grid2D& grid, double h0);

    BathymetryKind kind() const { return kind_; }
    bool is_flat() const { return kind_ == BathymetryKind::Flat; }
    const Field2D& h() const { return h_; }
    const Field2D& hx() const { return hx_; }
    const Field2D& hy() const { return hy_; }
    // h differentiated (a,b) times; uses stored analytic first derivatives
    // and spectral differentiation beyond them.
    Field2D h_deriv(int a, int b) const;

  private:
    BathymetryKind kind_ = BathymetryKind::Flat;
    Field2D h_, hx_, hy_;
};

}  // namespace b2p1

#endif  // B2P1_PARAMS_HPP_
