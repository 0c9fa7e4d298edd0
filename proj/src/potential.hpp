#ifndef B2P1_POTENTIAL_HPP_
#define B2P1_POTENTIAL_HPP_

#include <vector>

#include "grid.hpp"
#include "params.hpp"

namespace b2p1 {

// Bottom-slaved odd-series coefficient F for the selected regime, expressed
// in the original parameters:
//   case1:          beta*delta*[h_x f_x + (g/b) h_y f_y + h(f_xx + (g/b) f_yy)]
//   case2:          beta*delta*[(h f_x)_x + (g/b)(h f_y)_y]
//   case3/case3st:  beta*delta*(h f_x)_x
//   case4:          beta*delta*(h f_x)_x + gamma*delta*(h f_y)_y
// Flat bottom with delta = 0 gives F == 0.
Field2D bottom_F(const Field2D& f, const Bathymetry& bath, const SmallParams& p, Regime r);

// Truncated velocity-potential series: M+1 retained terms in each of the
// even (f) and odd (F) z-families.
struct PotentialSeries {
    Field2D f;
    Field2D F;
    int M = 1;
    SmallParams params;

    PotentialSeries(Field2D f_, Field2D F_, int M_, const SmallParams& p);
};

// phi(x,y,z) = sum_{m<=M} (-1)^m z^{2m}/(2m)! L^m f
//            + sum_{m<=M} (-1)^m z^{2m+1}/(2m+1)! L^m F,  L = beta dxx + gamma dyy.
Field2D phi_eval(const PotentialSeries& ps, double z);

// d(phi)/dz at height z, term-wise analytic in z.
Field2D phi_z(const PotentialSeries& ps, double z);

struct PotentialResiduals {
    double laplace = 0.0;  // max over z samples of |beta phi_xx + gamma phi_yy + phi_zz|
    double bottom = 0.0;   // max |phi_z - beta delta h_x phi_x - gamma delta h_y phi_y| at z = delta h
};

PotentialResiduals potential_residuals(const PotentialSeries& ps, const Bathymetry& bath,
                                       const std::vector<double>& z_samples);

}  // namespace b2p1

#endif  // B2P1_POTENTIAL_HPP_
