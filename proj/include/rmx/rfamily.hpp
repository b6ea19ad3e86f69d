#pragma once

#include <memory>
#include <optional>
#include <string>

#include "rmx/elliptic.hpp"
#include "rmx/report.hpp"
#include "rmx/rng.hpp"
#include "rmx/tensor.hpp"

namespace rmx {

enum class RKind {
  ScalarElliptic,       // d=1, R = phi(z,mu|tau)
  BaxterBelavin,        // general d, theta-shifted Kronecker entries
  EightVertexExplicit,  // d=2, Baxter's matrix written out
  KroneckerTimesP,      // R = phi(z,mu) P; residue P at mu=0 and z=0
  ScalarTrig,           // d=1, R = (cot(z/2)+cot(mu/2))/2
  TrigTimesP,           // trig phi times P
};

std::string kind_name(RKind k);

// An evaluable R-matrix family together with its unitarity factor, residue
// data and quasi-periodicity data. Immutable; all evaluation is const.
class RFamily {
 public:
  RFamily(RKind kind, int d, std::optional<ModularParam> tau = std::nullopt,
          EllipticConfig cfg = {});

  RKind kind() const { return kind_; }
  int d() const { return d_; }
  int dim() const { return d_ * d_; }
  bool elliptic() const;
  const ModularParam& tau() const { return *tau_; }
  const EllipticConfig& config() const { return cfg_; }
  std::string name() const { return kind_name(kind_); }

  Mat evaluate(cplx z, cplx mu) const;

  // Two-variable jet in (dz, dmu) at (z0, mu0), triangular total order.
  jets::MJet evaluate_jet2(cplx z0, cplx mu0, int order) const;

  // Laurent data at mu = 0:  R(z,mu) = residue/mu + A(z,mu), A analytic.
  struct MuLaurent {
    Mat residue;
    jets::MJet analytic;  // jet of A at (z0, 0)
  };
  MuLaurent laurent_mu(cplx z0, int order) const;

  // Classical r-matrix data from the mu-expansion (expansion coefficients of
  // the analytic part): r(z), m(z) and their z-derivatives.
  Mat r_mat(cplx z) const;
  Mat m_mat(cplx z) const;
  Mat rp_mat(cplx z) const;   // r'(z)
  Mat mp_mat(cplx z) const;   // m'(z)
  // Taylor coefficients r^(j)(z0)/j! (column b=0 of the analytic part).
  std::vector<Mat> r_taylor(cplx z0, int order) const;
  std::vector<Mat> m_taylor(cplx z0, int order) const;
  // dR/dz as a function of (z, mu), regular at mu=0; dR(z,0) = r'(z).
  Mat dz_mat(cplx z, cplx mu) const;

  cplx unitarity_factor(cplx z, cplx mu) const;
  Mat residue_mu0() const;  // Id, or P for the *TimesP kinds
  Mat perm_matrix() const;  // P on C^d x C^d

  // Quasi-periodicity: R(z, mu+period_re) = (Q^-1 x Id) R (Id x Q) and, in the
  // elliptic case, R(z, mu+tau) = exp(-2 pi i z/d_eff) (L^-1 x Id) R (Id x L).
  Mat q_matrix() const;
  Mat lambda_matrix() const;
  int tau_shift_denom() const;  // d for BaxterBelavin, else 1
  cplx mu_period() const;       // 1 (elliptic) or 2 pi (trig)

  double pole_distance(cplx w) const;  // distance of an argument to the pole set

  // Draw an argument from the 0.8-scaled fundamental cell, rejecting points
  // within the pole guard.
  cplx sample_arg(Rng& rng) const;

 private:
  RKind kind_;
  int d_;
  std::optional<ModularParam> tau_;
  EllipticConfig cfg_;
};

// Residual suite over the full identity set: skew symmetry, AYBE, unitarity,
// QYBE, symmetry R(z,mu)=R(mu,z)P, quasi-periodicity (mu-shifts, derived
// z-shifts), Heisenberg-pair commutation and regularity of the mu-residue.
Report identity_suite(const RFamily& fam, int samples, std::uint64_t seed, double tol);

// Relative residual convention used across all suites.
double rel_residual(const Mat& lhs, const Mat& rhs);

}  // namespace rmx
