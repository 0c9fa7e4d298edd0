#ifndef B2P1_CASCADE_HPP_
#define B2P1_CASCADE_HPP_

#include <complex>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "grid.hpp"
#include "params.hpp"
#include "scalar.hpp"

namespace b2p1 {

// Modes for the exact zeroth-order solution: a sum of plane waves on the
// dispersion surface omega^2 = kx^2 + (gamma/beta) ky^2.
struct PlaneWaveSpec {
    std::vector<PlaneWaveComponent> comps;
};

// Finite sum of space-time harmonics A(t) e^{i(kx x + ky y - omega t)} on
// grid-commensurate wavenumbers, with amplitudes polynomial in t (the t
// powers only appear for secular particular solutions). Real fields are
// represented conjugate-closed; evaluate() takes the real part and reports
// the imaginary residue.
class HarmonicField {
  public:
    using Poly = std::vector<std::complex<double>>;  // amp[p] * t^p
    using Key = std::tuple<int, int, double>;        // (jx, jy, omega)

    HarmonicField() = default;
    explicit HarmonicField(const Grid2D& g) : grid_(g) {}

    const Grid2D& grid() const { return grid_; }
    const std::map<Key, Poly>& harmonics() const { return h_; }
    bool empty() const;

    void add(int jx, int jy, double omega, std::complex<double> amp, int tpow = 0);

    HarmonicField operator+(const HarmonicField& o) const;
    HarmonicField operator*(const HarmonicField& o) const;
    HarmonicField scaled(std::complex<double> s) const;

    HarmonicField dx() const;
    HarmonicField dy() const;
    HarmonicField dt() const;
    HarmonicField derivative(int a, int b, int c) const;

    // u_xx + ratio u_yy - u_tt applied exactly (polynomial amplitudes
    // included).
    HarmonicField wave_operator(double ratio) const;

    Field2D evaluate(double t, double* max_imag = nullptr) const;

  private:
    void trim();
    Grid2D grid_;
    std::map<Key, Poly> h_;
};

// Analytic jet for the zeroth-order solution; modes must sit inside the
// dealias band.
PlaneWaveJet zeroth_solution(const PlaneWaveSpec& spec, const Grid2D& g, double ratio,
                             double t = 0.0);

// The same solution as a conjugate-closed harmonic sum.
HarmonicField zeroth_harmonics(const PlaneWaveSpec& spec, const Grid2D& g, double ratio);

// Right-hand sides of the four first-order correction equations, as exact
// harmonic sums. The bottom profile must be flat or a trigonometric
// polynomial for harmonic closure.
struct CorrectionSources {
    HarmonicField Sa, Sb, Sg, Sd;
};
CorrectionSources correction_sources(const PlaneWaveSpec& spec, const Grid2D& g,
                                     const Bathymetry& bath, const SmallParams& p);

// Resonant harmonics (on the dispersion surface) abort by default; the
// secular policy instead returns the t-growing particular solution, which
// still satisfies the correction equation exactly but breaks the uniform
// ordering of the expansion.
enum class ResonancePolicy { Error, Secular };

HarmonicField solve_correction(const HarmonicField& source, const SmallParams& p,
                               double tol_res = -1.0,
                               ResonancePolicy policy = ResonancePolicy::Error,
                               std::vector<std::string>* warnings = nullptr);

struct Corrections {
    HarmonicField a, b, g, d;
};

// f = f0 + alpha a + beta b + gamma g + delta d.
HarmonicField compose(const PlaneWaveSpec& spec, const Grid2D& g, const Corrections& corr,
                      const SmallParams& p);

// Jet backed by a harmonic sum frozen at one instant.
class HarmonicJet : public JetProvider {
  public:
    HarmonicJet(HarmonicField hf, double t) : hf_(std::move(hf)), t_(t) {}
    Field2D get(int a, int b, int c) const override { return hf_.derivative(a, b, c).evaluate(t_); }
    const Grid2D& grid() const override { return hf_.grid(); }

  private:
    HarmonicField hf_;
    double t_;
};

// Surface elevation recovered from a composite jet by the first-order
// recovery formula.
Field2D surface_from_harmonics(const HarmonicField& f, const SmallParams& p, double t);

}  // namespace b2p1

#endif  // B2P1_CASCADE_HPP_
