#pragma once

#include <array>

#include "osslab/linalg.hpp"
#include "osslab/report.hpp"
#include "osslab/tensor.hpp"

namespace osslab {

/// Everything specific to dimension 4: the Weyl tensor, the Hodge star on
/// bivectors, the self-dual/anti-self-dual split, the exact Osserman
/// criterion, adapted bases and their eigenvalue-structure classification,
/// and the canonical anti-self-dual model builder.

/// Weyl tensor of a 4-dimensional model:
///   W = A + (tau/6) (<x,w><y,z> - <x,z><y,w>)
///         - (1/2) (rho(x,w)<y,z> + rho(y,z)<x,w> - rho(x,z)<y,w> - rho(y,w)<x,z>).
/// The result carries all curvature symmetries and is Ricci trace-free.
CurvatureTensor weyl(const CurvatureTensor& r);

/// Hodge star on bivectors in the basis
/// (e1^e2, e1^e3, e1^e4, e2^e3, e2^e4, e3^e4), standard orientation:
/// an involutive symmetric 6x6 matrix with entries in {0, +-1}.
Matrix hodge_star();

/// The Lambda+- bases of the star eigenspaces together with the 3x3 blocks
/// of the Weyl operator on them. Bivectors use the inner product
/// <u^v, s^t> = <u,s><v,t> - <u,t><v,s>, which makes the E_i^+- unit.
struct HodgeSplit {
  int orientation = +1;
  std::array<Matrix, 3> lambdaPlusBasis;   // antisymmetric 4x4 matrices
  std::array<Matrix, 3> lambdaMinusBasis;
  Matrix weylPlus;   // symmetric, trace-free 3x3
  Matrix weylMinus;
};

/// W acting on bivectors restricted to Lambda+ and Lambda-:
/// weylPlus[i][j] = <W(E_i^+), E_j^+> with W(u^v) = sum_{k<l} W(u,v,e_k,e_l) e_k^e_l.
/// orientation -1 builds the split for the reversed orientation (frame with
/// e3 and e4 exchanged), which swaps the roles of the two chiralities.
HodgeSplit weyl_pm(const CurvatureTensor& r, int orientation = +1);

enum class SelfDualVerdict { selfDual, antiSelfDual, both, neither };

/// Compares ||W-||_inf and ||W+||_inf against tol * max(1, ||W||_inf).
/// "both" means conformally flat. Self-dual: W- = 0; anti-self-dual: W+ = 0.
SelfDualVerdict self_dual_check(const CurvatureTensor& r, double tol = kDefaultTol);

/// CheckReport form of self_dual_check: residual min(||W+||, ||W-||).
CheckReport self_dual_report(const CurvatureTensor& r, double tol = kDefaultTol);

/// Exact 4-dimensional Osserman criterion: Einstein and self-dual or
/// anti-self-dual. maxResidual is the worse of the two sub-check residuals
/// normalized by their thresholds (threshold 1).
CheckReport osserman_check_exact(const CurvatureTensor& r, double tol = kDefaultTol);

/// Orthonormal basis {x,y,z,w} realizing the six mutual Jacobi eigenvalues
///   J(x)y = l1 y, J(x)z = l2 z, J(x)w = l3 w,
///   J(y)z = l4 z, J(y)w = l5 w, J(z)w = l6 w.
struct AdaptedBasis {
  Vec x, y, z, w;
  std::array<double, 6> lambda{};
  double maxResidual = 0.0;  // worst of the six eigenvector residuals
};

/// Diagonalizes J(x) on x^perp to obtain y,z,w and l1..l3, rotates within
/// degenerate J(x) eigenspaces to diagonalize the restriction of J(y), then
/// reads l4..l6 and verifies all six residuals against tol * max(1, ||R||).
/// Throws NotAdapted when a residual exceeds the bound, which signals that
/// R fails the duality hypothesis at x.
AdaptedBasis adapted_basis(const CurvatureTensor& r, const Vec& x, double tol = kDefaultTol);

/// Eigenvalue-structure cases for the six adapted-basis eigenvalues:
///   a) all equal
///   b) l1=l6,  l2=l3=l4=l5
///   c) l2=l5,  l1=l3=l4=l6
///   d) l3=l4,  l1=l2=l5=l6
///   e) l1=l6, l2=l5, l3=l4
enum class EigStructureCase { a, b, c, d, e, none };

/// Most specific case matched within tol * max(1, max |l_i|): a beats b-d,
/// which beat e.
EigStructureCase classify_structure(const std::array<double, 6>& lambda,
                                    double tol = kDefaultTol);

const char* to_string(EigStructureCase c);
const char* to_string(SelfDualVerdict v);

/// The dimension-4 tensor with, on the standard basis (x,y,z,w) = (e1..e4),
///   A(x,y,y,x)=A(z,w,w,z)=l1, A(x,z,z,x)=A(y,w,w,y)=l2, A(x,w,w,x)=A(y,z,z,y)=l3,
///   A(x,z,w,y)=(-l1+2l2-l3)/3, A(x,w,z,y)=(l1+l2-2l3)/3, A(x,y,w,z)=(-2l1+l2+l3)/3,
/// completed by symmetry. It is Einstein and anti-self-dual for every
/// (l1,l2,l3), hence Osserman with Jacobi spectrum {l1,l2,l3} in every
/// direction.
CurvatureTensor canonical_osserman(double l1, double l2, double l3);

}  // namespace osslab
