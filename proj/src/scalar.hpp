#ifndef B2P1_SCALAR_HPP_
#define B2P1_SCALAR_HPP_

#include <functional>
#include <memory>
#include <vector>

#include "grid.hpp"
#include "params.hpp"
#include "series.hpp"

namespace b2p1 {

// Supplies mixed derivatives dx^a dy^b dt^c f on the grid at one instant.
// a+b+c <= 8; time order limited by the backing.
class JetProvider {
  public:
    virtual ~JetProvider() = default;
    virtual Field2D get(int a, int b, int c) const = 0;
    virtual const Grid2D& grid() const = 0;
};

// Analytic plane-wave sum: f = sum amp * cos(kx x + ky y - omega t + phase).
struct PlaneWaveComponent {
    int jx = 1, jy = 0;     // integer mode numbers
    double amp = 1.0;
    double phase = 0.0;
    int branch = +1;        // sign of omega
};

class PlaneWaveJet : public JetProvider {
  public:
    // omega per component = branch * sqrt(kx^2 + (gamma/beta) ky^2).
    PlaneWaveJet(const Grid2D& g, std::vector<PlaneWaveComponent> comps, double ratio, double t);
    Field2D get(int a, int b, int c) const override;
    const Grid2D& grid() const override { return grid_; }
    double omega(size_t i) const { return omegas_[i]; }

  private:
    Grid2D grid_;
    std::vector<PlaneWaveComponent> comps_;
    std::vector<double> omegas_;
    double t_;
};

// Backed by arbitrary per-request evaluation (tests).
class CallbackJet : public JetProvider {
  public:
    CallbackJet(const Grid2D& g, std::function<Field2D(int, int, int)> fn)
        : grid_(g), fn_(std::move(fn)) {}
    Field2D get(int a, int b, int c) const override { return fn_(a, b, c); }
    const Grid2D& grid() const override { return grid_; }

  private:
    Grid2D grid_;
    std::function<Field2D(int, int, int)> fn_;
};

// First-order-in-time state for the single-f formulations: q = f_t.
struct ScalarState {
    Field2D f;
    Field2D q;
    double t = 0.0;

    ScalarState(Field2D f_, Field2D q_, double t_ = 0.0);
};

enum class EquationForm { Printed, Consistent };

// Pointwise residual of the regime's single-f equation on the supplied jet.
// Evaluates the committed derivation-oracle plan (Consistent) or the
// verbatim-typeset plan (Printed); the two coincide for Case1 and Case3.
Field2D scalar_residual(const JetProvider& jet, const Bathymetry& bath, const SmallParams& p,
                        Regime r, EquationForm form);

// The committed evaluation plan for a regime/form.
const series::TermSum& scalar_plan(Regime r, EquationForm form);

struct ScalarStepConfig {
    double dt = 1e-2;
    bool dealias_products = true;
};

// RK4 advance of (f, q) with q_t = f_tt obtained from the governing
// equation: explicit for Case1, constant-symbol inversion for Case3/Case4.
// Case2's f_tt enters nonlinearly and is not steppable here.
ScalarState scalar_step(const ScalarState& s, const ScalarStepConfig& cfg, const Bathymetry& bath,
                        const SmallParams& p, Regime r);

// f_tt from the governing equation at the given (f, q); the closure used by
// numeric jets and by scalar_step stages.
Field2D scalar_ftt(const Field2D& f, const Field2D& q, const Bathymetry& bath,
                   const SmallParams& p, Regime r, bool dealias_products = true);

// Jet over an evolved scalar state: c<=1 from (f, q), c==2 via the equation
// closure; higher time orders unavailable.
class NumericJet : public JetProvider {
  public:
    NumericJet(ScalarState s, Bathymetry bath, SmallParams p, Regime r);
    Field2D get(int a, int b, int c) const override;
    const Grid2D& grid() const override { return state_.f.grid(); }

  private:
    ScalarState state_;
    Bathymetry bath_;
    SmallParams p_;
    Regime r_;
    mutable std::unique_ptr<Field2D> ftt_;
};

// Surface recovery from (f, q) per the regime's printed formula.
Field2D eta_from_f(const ScalarState& s, const SmallParams& p, Regime r);

}  // namespace b2p1

#endif  // B2P1_SCALAR_HPP_
