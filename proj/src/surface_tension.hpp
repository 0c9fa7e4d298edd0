#ifndef B2P1_SURFACE_TENSION_HPP_
#define B2P1_SURFACE_TENSION_HPP_

#include "grid.hpp"
#include "params.hpp"

namespace b2p1 {

enum class SurfaceTensionMode { Exact, Approx };

// Full nondimensional surface-tension pressure term:
//   -tau * [ beta(1+a2b eta_y^2) eta_xx + gamma(1+a2b eta_x^2) eta_yy
//            - 2 a2b*gamma eta_x eta_y eta_xy ] / (1 + a2b eta_x^2 + a2g eta_y^2)^{3/2}
// with a2b = alpha^2 beta, a2g = alpha^2 gamma. The (...)^{-3/2} factor is
// evaluated pointwise, then the product is dealiased once.
// Throws SlopeTooLarge when the denominator field drops below 0.5.
Field2D st_exact(const Field2D& eta, const SmallParams& p);

// Second-order truncation: -tau (beta eta_xx + gamma eta_yy).
Field2D st_approx(const Field2D& eta, const SmallParams& p);

Field2D surface_tension(const Field2D& eta, const SmallParams& p, SurfaceTensionMode mode);

}  // namespace b2p1

#endif  // B2P1_SURFACE_TENSION_HPP_
