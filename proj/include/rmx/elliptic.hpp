#pragma once

#include <stdexcept>
#include <vector>

#include "rmx/jet.hpp"

namespace rmx {

// Thrown when an evaluation lands on (or numerically underneath) a pole of
// theta-quotients or their trigonometric degenerations.
struct PoleProximity : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Half-period ratio tau. The Im(tau) floor keeps the q-series truncation
// depth bounded (see theta_taylor); it is a construction-time guard.
struct ModularParam {
  cplx tau;
  static constexpr double kImFloor = 0.2;

  explicit ModularParam(cplx t, double im_floor = kImFloor) : tau(t) {
    if (!(t.imag() >= im_floor))
      throw std::invalid_argument("ModularParam: Im(tau) below floor");
  }
};

struct EllipticConfig {
  double series_tol = 1e-18;  // absolute tail bound for the q-series
  double pole_guard = 1e-3;   // minimal distance to lattice points when sampling
};

// --- odd Jacobi theta -------------------------------------------------------
//
// Convention used throughout:
//   theta(z|tau) = -sum_{k in Z} exp(pi*i*tau*(k+1/2)^2 + 2*pi*i*(k+1/2)*(z+1/2))
// It is odd, theta(z+1) = -theta(z), theta(z+tau) = -exp(-pi*i*tau-2*pi*i*z)*theta(z).

cplx theta(cplx z, const ModularParam& tau, const EllipticConfig& cfg = {});

// Taylor coefficients theta^(j)(z0)/j! for j = 0..order.
std::vector<cplx> theta_taylor(cplx z0, const ModularParam& tau, int order,
                               const EllipticConfig& cfg = {});

cplx theta_d1_at_zero(const ModularParam& tau, const EllipticConfig& cfg = {});

// --- Kronecker function phi(z,mu|tau) = theta'(0) theta(z+mu) / (theta(z) theta(mu))

cplx kronecker_phi(cplx z, cplx mu, const ModularParam& tau, const EllipticConfig& cfg = {});

// Two-variable jet of phi at (z0, mu0): variables (dz, dmu), triangular
// truncation at total order `order`.
jets::MJet phi_taylor2(cplx z0, cplx mu0, const ModularParam& tau, int order,
                       const EllipticConfig& cfg = {});

// Laurent data at mu0 = 0:  phi(z,mu) = 1/mu + A(z,mu)  with A analytic.
// Returns the jet of A at (z0, 0); the residue is identically 1.
jets::MJet phi_laurent_mu(cplx z0, const ModularParam& tau, int order,
                          const EllipticConfig& cfg = {});

// --- Weierstrass p-function with periods (1, tau) ---------------------------
//
// Computed from the theta quotient  wp(z) = -d^2/dz^2 log theta(z) + c(tau),
// with c(tau) = theta'''(0) / (3 theta'(0)) fixing the z^-2 normalisation.

cplx weierstrass_p(cplx z, const ModularParam& tau, const EllipticConfig& cfg = {});

// Taylor coefficients wp^(j)(z0)/j!.
std::vector<cplx> wp_taylor(cplx z0, const ModularParam& tau, int order,
                            const EllipticConfig& cfg = {});

// --- trigonometric degenerations --------------------------------------------
//
// trig_phi is normalised so that its residue at mu=0 is 1 and
//   trig_phi(z,mu) trig_phi(-z,mu) = trig_wp(mu) - trig_wp(z),
// i.e. trig_phi(z,mu) = (cot(z/2) + cot(mu/2)) / 2.

cplx trig_phi(cplx z, cplx mu);
cplx trig_wp(cplx z);  // 1 / (4 sin^2(z/2))

jets::MJet trig_phi_taylor2(cplx z0, cplx mu0, int order);
jets::MJet trig_phi_laurent_mu(cplx z0, int order);
std::vector<cplx> trig_wp_taylor(cplx z0, int order);
std::vector<cplx> cot_taylor(cplx w0, int order);

// --- pole-set distances (used by samplers) -----------------------------------

double lattice_distance(cplx z, cplx tau);  // distance to Z + tau Z
double trig_pole_distance(cplx z);          // distance to 2 pi Z

}  // namespace rmx
