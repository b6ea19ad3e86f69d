#include "rmx/elliptic.hpp"

#include <cmath>

namespace rmx {

using jets::JetTable;
using jets::MJet;

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
const cplx kI(0.0, 1.0);

// |theta(z)| below this (relative to |theta'(0)|) counts as sitting on a pole
// of a theta quotient.
constexpr double kThetaPoleEps = 1e-10;

std::vector<cplx> sin_taylor(cplx w0, int order) {
  std::vector<cplx> c(order + 1);
  cplx vals[4] = {std::sin(w0), std::cos(w0), -std::sin(w0), -std::cos(w0)};
  double f = 1.0;
  for (int k = 0; k <= order; ++k) {
    if (k > 0) f *= k;
    c[k] = vals[k % 4] / f;
  }
  return c;
}

std::vector<cplx> cos_taylor(cplx w0, int order) {
  std::vector<cplx> c(order + 1);
  cplx vals[4] = {std::cos(w0), -std::sin(w0), -std::cos(w0), std::sin(w0)};
  double f = 1.0;
  for (int k = 0; k <= order; ++k) {
    if (k > 0) f *= k;
    c[k] = vals[k % 4] / f;
  }
  return c;
}

MJet univariate(const std::vector<cplx>& series, const JetTable& tab) {
  MJet j(tab, 1);
  std::vector<int> m(1, 0);
  for (int k = 0; k < static_cast<int>(series.size()); ++k) {
    m[0] = k;
    int p = tab.find(m);
    if (p >= 0) j.coeff(p)(0, 0) = series[k];
  }
  return j;
}

std::vector<cplx> to_series(const MJet& j) {
  std::vector<cplx> s(j.order() + 1);
  std::vector<int> m(1, 0);
  for (int k = 0; k <= j.order(); ++k) {
    m[0] = k;
    s[k] = j.scalar_coeff(j.table().find(m));
  }
  return s;
}

}  // namespace

std::vector<cplx> theta_taylor(cplx z0, const ModularParam& tau, int order,
                               const EllipticConfig& cfg) {
  std::vector<cplx> c(order + 1, 0.0);
  const double imt = tau.tau.imag();
  const double imz = std::abs(z0.imag());
  for (int k = 0;; ++k) {
    const double m = k + 0.5;
    // max_j (2 pi m)^j / j! over j<=order controls the derivative factors
    double deriv_factor = 1.0, pw = 1.0;
    for (int j = 1; j <= order; ++j) {
      pw *= 2.0 * kPi * m / j;
      deriv_factor = std::max(deriv_factor, pw);
    }
    const double bound = std::exp(-kPi * imt * m * m + 2.0 * kPi * m * imz) * deriv_factor;
    if (k >= 2 && bound < cfg.series_tol) break;
    for (double sgn : {1.0, -1.0}) {
      const cplx mm = sgn * m;
      const cplx term = -std::exp(kPi * kI * tau.tau * mm * mm + 2.0 * kPi * kI * mm * (z0 + 0.5));
      cplx dk = term;
      double fact = 1.0;
      for (int j = 0; j <= order; ++j) {
        if (j > 0) {
          fact *= j;
          dk *= 2.0 * kPi * kI * mm;
        }
        c[j] += dk / fact;
      }
    }
    if (k > 4000) throw std::runtime_error("theta_taylor: series failed to converge");
  }
  return c;
}

cplx theta(cplx z, const ModularParam& tau, const EllipticConfig& cfg) {
  return theta_taylor(z, tau, 0, cfg)[0];
}

cplx theta_d1_at_zero(const ModularParam& tau, const EllipticConfig& cfg) {
  return theta_taylor(0.0, tau, 1, cfg)[1];
}

cplx kronecker_phi(cplx z, cplx mu, const ModularParam& tau, const EllipticConfig& cfg) {
  const cplx tz = theta(z, tau, cfg);
  const cplx tm = theta(mu, tau, cfg);
  const cplx d1 = theta_d1_at_zero(tau, cfg);
  if (std::abs(tz) < kThetaPoleEps * std::abs(d1) || std::abs(tm) < kThetaPoleEps * std::abs(d1))
    throw PoleProximity("kronecker_phi: argument on the lattice");
  return d1 * theta(z + mu, tau, cfg) / (tz * tm);
}

jets::MJet phi_taylor2(cplx z0, cplx mu0, const ModularParam& tau, int order,
                       const EllipticConfig& cfg) {
  const JetTable& tab = JetTable::get(2, order);
  const cplx d1 = theta_d1_at_zero(tau, cfg);

  // theta(z+mu) as a 2-var jet: compose the univariate expansion with dz+dmu.
  MJet zj = MJet::variable(tab, 0, z0);
  MJet mj = MJet::variable(tab, 1, mu0);
  MJet num = jets::compose_univariate(theta_taylor(z0 + mu0, tau, order, cfg), zj + mj);
  MJet dz = jets::compose_univariate(theta_taylor(z0, tau, order, cfg), zj);
  MJet dm = jets::compose_univariate(theta_taylor(mu0, tau, order, cfg), mj);
  if (std::abs(dz.scalar_value()) < kThetaPoleEps * std::abs(d1) ||
      std::abs(dm.scalar_value()) < kThetaPoleEps * std::abs(d1))
    throw PoleProximity("phi_taylor2: argument on the lattice");
  return num.scaled(d1) * dz.recip() * dm.recip();
}

jets::MJet phi_laurent_mu(cplx z0, const ModularParam& tau, int order,
                          const EllipticConfig& cfg) {
  const int ord = order + 1;
  const JetTable& tab = JetTable::get(2, ord);
  const cplx d1 = theta_d1_at_zero(tau, cfg);

  MJet zj = MJet::variable(tab, 0, z0);
  MJet mj = MJet::variable(tab, 1, 0.0);
  MJet num = jets::compose_univariate(theta_taylor(z0, tau, ord, cfg), zj + mj);
  MJet dz = jets::compose_univariate(theta_taylor(z0, tau, ord, cfg), zj);
  if (std::abs(dz.scalar_value()) < kThetaPoleEps * std::abs(d1))
    throw PoleProximity("phi_laurent_mu: z on the lattice");

  // g(mu) = theta'(0) mu / theta(mu), analytic with g(0)=1
  std::vector<cplx> tm = theta_taylor(0.0, tau, ord + 1, cfg);
  std::vector<cplx> over_mu(tm.begin() + 1, tm.end());  // theta(mu)/mu
  MJet g = jets::compose_univariate(over_mu, mj).recip().scaled(d1);

  // G := theta(z+mu)/theta(z) * g(mu);  phi = G/mu, so the analytic part is
  // (G - 1)/mu realised as a coefficient shift.
  MJet G = num * dz.recip() * g;
  return G.shift_var_down(1, JetTable::get(2, order));
}

cplx weierstrass_p(cplx z, const ModularParam& tau, const EllipticConfig& cfg) {
  return wp_taylor(z, tau, 0, cfg)[0];
}

std::vector<cplx> wp_taylor(cplx z0, const ModularParam& tau, int order,
                            const EllipticConfig& cfg) {
  const JetTable& tab = JetTable::get(1, order);
  std::vector<cplx> th = theta_taylor(z0, tau, order + 2, cfg);
  const cplx d1 = theta_d1_at_zero(tau, cfg);
  if (std::abs(th[0]) < kThetaPoleEps * std::abs(d1))
    throw PoleProximity("wp_taylor: z on the lattice");

  std::vector<cplx> t0(order + 1), t1(order + 1), t2(order + 1);
  for (int k = 0; k <= order; ++k) {
    t0[k] = th[k];
    t1[k] = th[k + 1] * static_cast<double>(k + 1);
    t2[k] = th[k + 2] * static_cast<double>((k + 1) * (k + 2));
  }
  MJet a0 = univariate(t0, tab), a1 = univariate(t1, tab), a2 = univariate(t2, tab);
  // -d^2 log theta = (theta'^2 - theta'' theta)/theta^2
  MJet wp = (a1 * a1 - a2 * a0) * (a0 * a0).recip();

  std::vector<cplx> t4 = theta_taylor(0.0, tau, 3, cfg);
  const cplx c_tau = t4[3] * 6.0 / (3.0 * t4[1]);  // theta'''(0)/(3 theta'(0))
  std::vector<cplx> out = to_series(wp);
  out[0] += c_tau;
  return out;
}

cplx trig_phi(cplx z, cplx mu) {
  const cplx sz = std::sin(z / 2.0), sm = std::sin(mu / 2.0);
  if (std::abs(sz) < kThetaPoleEps || std::abs(sm) < kThetaPoleEps)
    throw PoleProximity("trig_phi: argument in 2 pi Z");
  return 0.5 * (std::cos(z / 2.0) / sz + std::cos(mu / 2.0) / sm);
}

cplx trig_wp(cplx z) {
  const cplx s = std::sin(z / 2.0);
  if (std::abs(s) < kThetaPoleEps) throw PoleProximity("trig_wp: argument in 2 pi Z");
  return 1.0 / (4.0 * s * s);
}

std::vector<cplx> cot_taylor(cplx w0, int order) {
  const JetTable& tab = JetTable::get(1, order);
  MJet s = univariate(sin_taylor(w0, order), tab);
  MJet c = univariate(cos_taylor(w0, order), tab);
  if (std::abs(s.scalar_value()) < kThetaPoleEps)
    throw PoleProximity("cot_taylor: argument in pi Z");
  return to_series(c * s.recip());
}

jets::MJet trig_phi_taylor2(cplx z0, cplx mu0, int order) {
  const JetTable& tab = JetTable::get(2, order);
  MJet zj = MJet::variable(tab, 0, z0).scaled(0.5);
  MJet mj = MJet::variable(tab, 1, mu0).scaled(0.5);
  MJet cz = jets::compose_univariate(cot_taylor(z0 / 2.0, order), zj);
  MJet cm = jets::compose_univariate(cot_taylor(mu0 / 2.0, order), mj);
  return (cz + cm).scaled(0.5);
}

jets::MJet trig_phi_laurent_mu(cplx z0, int order) {
  const int ord = order + 1;
  const JetTable& tab = JetTable::get(2, ord);
  MJet zj = MJet::variable(tab, 0, z0).scaled(0.5);
  MJet mj = MJet::variable(tab, 1, 0.0);

  MJet cz = jets::compose_univariate(cot_taylor(z0 / 2.0, ord), zj).scaled(0.5);
  // (mu/2) cot(mu/2) = cos(w)/(sin(w)/w), w = mu/2; analytic, value 1 at 0
  std::vector<cplx> sw = sin_taylor(0.0, ord + 1);
  std::vector<cplx> sw_over_w(sw.begin() + 1, sw.end());
  MJet w = mj.scaled(0.5);
  MJet u = jets::compose_univariate(cos_taylor(0.0, ord), w) *
           jets::compose_univariate(sw_over_w, w).recip();
  // trig_phi = cz + u/mu; analytic part = cz + (u-1)/mu
  MJet G = u + cz * mj;  // = mu * trig_phi
  return G.shift_var_down(1, JetTable::get(2, order));
}

std::vector<cplx> trig_wp_taylor(cplx z0, int order) {
  const JetTable& tab = JetTable::get(1, order);
  MJet zj = MJet::variable(tab, 0, z0).scaled(0.5);
  MJet s = jets::compose_univariate(sin_taylor(z0 / 2.0, order), zj);
  if (std::abs(s.scalar_value()) < kThetaPoleEps)
    throw PoleProximity("trig_wp_taylor: argument in 2 pi Z");
  return to_series((s * s).recip().scaled(0.25));
}

double lattice_distance(cplx z, cplx tau) {
  // coordinates of z in the (1, tau) basis
  const double b = z.imag() / tau.imag();
  const double a = z.real() - b * tau.real();
  double best = 1e300;
  for (int m = static_cast<int>(std::floor(a)) - 1; m <= static_cast<int>(std::ceil(a)) + 1; ++m)
    for (int n = static_cast<int>(std::floor(b)) - 1; n <= static_cast<int>(std::ceil(b)) + 1; ++n)
      best = std::min(best, std::abs(z - (static_cast<double>(m) + static_cast<double>(n) * tau)));
  return best;
}

double trig_pole_distance(cplx z) {
  const double k = std::round(z.real() / (2.0 * kPi));
  double best = 1e300;
  for (double kk : {k - 1.0, k, k + 1.0})
    best = std::min(best, std::abs(z - 2.0 * kPi * kk));
  return best;
}

}  // namespace rmx
