#include "rmx/rfamily.hpp"

#include <cmath>

namespace rmx {

using jets::JetTable;
using jets::MJet;

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
const cplx kI(0.0, 1.0);

Mat perm_d2(int d) {
  Mat p = Mat::Zero(d * d, d * d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) p(a * d + b, b * d + a) = 1.0;
  return p;
}

// jet of exp(c0 + a*dz + b*dmu) over the 2-var table
MJet exp_affine_jet(const JetTable& tab, cplx c0, cplx a, cplx b) {
  MJet j(tab, 1);
  const cplx v = std::exp(c0);
  for (int p = 0; p < tab.size(); ++p) {
    const int x = tab.mi[p][0], y = tab.mi[p][1];
    cplx f = v;
    for (int t = 1; t <= x; ++t) f *= a / static_cast<double>(t);
    for (int t = 1; t <= y; ++t) f *= b / static_cast<double>(t);
    j.coeff(p)(0, 0) = f;
  }
  return j;
}

// assemble a matrix-valued jet from per-entry scalar jets
void add_entry(MJet& out, int row, int col, const MJet& scalar, cplx weight = 1.0) {
  for (int p = 0; p < out.table().size(); ++p)
    out.coeff(p)(row, col) += weight * scalar.scalar_coeff(p);
}

}  // namespace

std::string kind_name(RKind k) {
  switch (k) {
    case RKind::ScalarElliptic: return "scalar";
    case RKind::BaxterBelavin: return "bb";
    case RKind::EightVertexExplicit: return "8vx";
    case RKind::KroneckerTimesP: return "kronp";
    case RKind::ScalarTrig: return "trig";
    case RKind::TrigTimesP: return "trigp";
  }
  return "?";
}

RFamily::RFamily(RKind kind, int d, std::optional<ModularParam> tau, EllipticConfig cfg)
    : kind_(kind), d_(d), tau_(tau), cfg_(cfg) {
  switch (kind_) {
    case RKind::ScalarElliptic:
      if (d_ != 1) throw std::invalid_argument("ScalarElliptic requires d=1");
      break;
    case RKind::EightVertexExplicit:
      if (d_ != 2) throw std::invalid_argument("EightVertexExplicit requires d=2");
      break;
    case RKind::ScalarTrig:
      if (d_ != 1) throw std::invalid_argument("ScalarTrig requires d=1");
      break;
    default:
      if (d_ < 1) throw std::invalid_argument("RFamily: d >= 1 required");
  }
  if (elliptic() && !tau_) throw std::invalid_argument("RFamily: elliptic kind needs tau");
}

bool RFamily::elliptic() const {
  return kind_ != RKind::ScalarTrig && kind_ != RKind::TrigTimesP;
}

Mat RFamily::perm_matrix() const { return perm_d2(d_); }

Mat RFamily::residue_mu0() const {
  if (kind_ == RKind::KroneckerTimesP || kind_ == RKind::TrigTimesP) return perm_matrix();
  return Mat::Identity(dim(), dim());
}

Mat RFamily::q_matrix() const { return q_lambda_matrices(d_).first; }
Mat RFamily::lambda_matrix() const { return q_lambda_matrices(d_).second; }

int RFamily::tau_shift_denom() const {
  return (kind_ == RKind::BaxterBelavin || kind_ == RKind::EightVertexExplicit) ? d_ : 1;
}

cplx RFamily::mu_period() const { return elliptic() ? cplx(1.0) : cplx(2.0 * kPi); }

double RFamily::pole_distance(cplx w) const {
  return elliptic() ? lattice_distance(w, tau_->tau) : trig_pole_distance(w);
}

cplx RFamily::sample_arg(Rng& rng) const {
  for (int tries = 0; tries < 4000; ++tries) {
    cplx w;
    if (elliptic()) {
      const double a = rng.uniform(-0.4, 0.4), b = rng.uniform(-0.4, 0.4);
      w = a + b * tau_->tau;
    } else {
      w = cplx(rng.uniform(-2.4, 2.4), rng.uniform(-0.5, 0.5));
    }
    if (pole_distance(w) > cfg_.pole_guard) return w;
  }
  throw std::runtime_error("sample_arg: rejection sampling failed");
}

Mat RFamily::evaluate(cplx z, cplx mu) const {
  switch (kind_) {
    case RKind::ScalarElliptic: {
      Mat r(1, 1);
      r(0, 0) = kronecker_phi(z, mu, *tau_, cfg_);
      return r;
    }
    case RKind::ScalarTrig: {
      Mat r(1, 1);
      r(0, 0) = trig_phi(z, mu);
      return r;
    }
    case RKind::KroneckerTimesP:
      return kronecker_phi(z, mu, *tau_, cfg_) * perm_matrix();
    case RKind::TrigTimesP:
      return trig_phi(z, mu) * perm_matrix();
    case RKind::EightVertexExplicit: {
      const cplx t = tau_->tau;
      const cplx f00 = kronecker_phi(z, mu / 2.0, *tau_, cfg_);
      const cplx f10 = kronecker_phi(z, 0.5 + mu / 2.0, *tau_, cfg_);
      const cplx ez = std::exp(kPi * kI * z);
      const cplx f01 = ez * kronecker_phi(z, t / 2.0 + mu / 2.0, *tau_, cfg_);
      const cplx f11 = ez * kronecker_phi(z, (1.0 + t) / 2.0 + mu / 2.0, *tau_, cfg_);
      Mat r = Mat::Zero(4, 4);
      r(0, 0) = r(3, 3) = 0.5 * (f00 + f10);
      r(1, 1) = r(2, 2) = 0.5 * (f00 - f10);
      r(1, 2) = r(2, 1) = 0.5 * (f01 + f11);
      r(0, 3) = r(3, 0) = 0.5 * (f01 - f11);
      return r;
    }
    case RKind::BaxterBelavin: {
      const cplx t = tau_->tau;
      const ModularParam dtau(static_cast<double>(d_) * t);
      Mat r = Mat::Zero(dim(), dim());
      for (int al = 1; al <= d_; ++al)
        for (int be = 1; be <= d_; ++be)
          for (int ga = 1; ga <= d_; ++ga) {
            int de = ((al + ga - be) % d_ + d_) % d_;
            if (de == 0) de = d_;
            const double gb = ga - be, ba = be - al;
            const cplx phase = std::exp(2.0 * kPi * kI / static_cast<double>(d_) *
                                        (gb * ba * t + gb * mu + ba * z));
            const cplx val =
                phase * kronecker_phi(z + gb * t, mu + ba * t, dtau, cfg_);
            r((al - 1) * d_ + (ga - 1), (be - 1) * d_ + (de - 1)) += val;
          }
      return r;
    }
  }
  throw std::logic_error("unreachable");
}

MJet RFamily::evaluate_jet2(cplx z0, cplx mu0, int order) const {
  const JetTable& tab = JetTable::get(2, order);
  switch (kind_) {
    case RKind::ScalarElliptic:
      return phi_taylor2(z0, mu0, *tau_, order, cfg_);
    case RKind::ScalarTrig:
      return trig_phi_taylor2(z0, mu0, order);
    case RKind::KroneckerTimesP: {
      MJet s = phi_taylor2(z0, mu0, *tau_, order, cfg_);
      return MJet::constant(tab, perm_matrix()) * s;
    }
    case RKind::TrigTimesP: {
      MJet s = trig_phi_taylor2(z0, mu0, order);
      return MJet::constant(tab, perm_matrix()) * s;
    }
    case RKind::EightVertexExplicit: {
      const cplx t = tau_->tau;
      auto half = [&](cplx shift) {
        return phi_taylor2(z0, shift + mu0 / 2.0, *tau_, order, cfg_)
            .scale_var_powers(1, 0.5);
      };
      MJet f00 = half(0.0), f10 = half(0.5);
      MJet ez = exp_affine_jet(tab, kPi * kI * z0, kPi * kI, 0.0);
      MJet f01 = ez * half(t / 2.0), f11 = ez * half((1.0 + t) / 2.0);
      MJet r(tab, 4);
      add_entry(r, 0, 0, f00 + f10, 0.5);
      add_entry(r, 3, 3, f00 + f10, 0.5);
      add_entry(r, 1, 1, f00 - f10, 0.5);
      add_entry(r, 2, 2, f00 - f10, 0.5);
      add_entry(r, 1, 2, f01 + f11, 0.5);
      add_entry(r, 2, 1, f01 + f11, 0.5);
      add_entry(r, 0, 3, f01 - f11, 0.5);
      add_entry(r, 3, 0, f01 - f11, 0.5);
      return r;
    }
    case RKind::BaxterBelavin: {
      const cplx t = tau_->tau;
      const ModularParam dtau(static_cast<double>(d_) * t);
      MJet r(tab, dim());
      for (int al = 1; al <= d_; ++al)
        for (int be = 1; be <= d_; ++be)
          for (int ga = 1; ga <= d_; ++ga) {
            int de = ((al + ga - be) % d_ + d_) % d_;
            if (de == 0) de = d_;
            const double gb = ga - be, ba = be - al;
            const cplx w = 2.0 * kPi * kI / static_cast<double>(d_);
            MJet phase = exp_affine_jet(tab, w * (gb * ba * t + gb * mu0 + ba * z0),
                                        w * ba, w * gb);
            MJet entry =
                phase * phi_taylor2(z0 + gb * t, mu0 + ba * t, dtau, order, cfg_);
            add_entry(r, (al - 1) * d_ + (ga - 1), (be - 1) * d_ + (de - 1), entry);
          }
      return r;
    }
  }
  throw std::logic_error("unreachable");
}

RFamily::MuLaurent RFamily::laurent_mu(cplx z0, int order) const {
  const JetTable& tab = JetTable::get(2, order);
  MuLaurent out;
  out.residue = residue_mu0();
  switch (kind_) {
    case RKind::ScalarElliptic:
      out.analytic = phi_laurent_mu(z0, *tau_, order, cfg_);
      return out;
    case RKind::ScalarTrig:
      out.analytic = trig_phi_laurent_mu(z0, order);
      return out;
    case RKind::KroneckerTimesP:
      out.analytic = MJet::constant(tab, perm_matrix()) * phi_laurent_mu(z0, *tau_, order, cfg_);
      return out;
    case RKind::TrigTimesP:
      out.analytic = MJet::constant(tab, perm_matrix()) * trig_phi_laurent_mu(z0, order);
      return out;
    case RKind::EightVertexExplicit: {
      const cplx t = tau_->tau;
      // f00 = phi(z, mu/2) = 2/mu + A(z, mu/2); the others are regular at mu=0.
      MJet a00 = phi_laurent_mu(z0, *tau_, order, cfg_).scale_var_powers(1, 0.5);
      auto half = [&](cplx shift) {
        return phi_taylor2(z0, shift, *tau_, order, cfg_).scale_var_powers(1, 0.5);
      };
      MJet f10 = half(0.5);
      MJet ez = exp_affine_jet(tab, kPi * kI * z0, kPi * kI, 0.0);
      MJet f01 = ez * half(t / 2.0), f11 = ez * half((1.0 + t) / 2.0);
      MJet r(tab, 4);
      add_entry(r, 0, 0, a00 + f10, 0.5);
      add_entry(r, 3, 3, a00 + f10, 0.5);
      add_entry(r, 1, 1, a00 - f10, 0.5);
      add_entry(r, 2, 2, a00 - f10, 0.5);
      add_entry(r, 1, 2, f01 + f11, 0.5);
      add_entry(r, 2, 1, f01 + f11, 0.5);
      add_entry(r, 0, 3, f01 - f11, 0.5);
      add_entry(r, 3, 0, f01 - f11, 0.5);
      out.analytic = r;
      return out;
    }
    case RKind::BaxterBelavin: {
      const cplx t = tau_->tau;
      const ModularParam dtau(static_cast<double>(d_) * t);
      const JetTable& tab1 = JetTable::get(2, order + 1);
      MJet r(tab, dim());
      for (int al = 1; al <= d_; ++al)
        for (int be = 1; be <= d_; ++be)
          for (int ga = 1; ga <= d_; ++ga) {
            int de = ((al + ga - be) % d_ + d_) % d_;
            if (de == 0) de = d_;
            const double gb = ga - be, ba = be - al;
            const cplx w = 2.0 * kPi * kI / static_cast<double>(d_);
            const int row = (al - 1) * d_ + (ga - 1), col = (be - 1) * d_ + (de - 1);
            if (be == al) {
              // pole term: E(mu) (1/mu + A) = 1/mu + (E A + (E-1)/mu)
              MJet a = phi_laurent_mu(z0 + gb * t, dtau, order + 1, cfg_).retable(tab);
              MJet e1 = exp_affine_jet(tab1, 0.0, 0.0, w * gb);
              MJet e = e1.retable(tab);
              MJet edm = e1.shift_var_down(1, tab);  // (E-1)/mu; E(0)=1
              add_entry(r, row, col, e * a + edm);
            } else {
              MJet phase = exp_affine_jet(tab, w * (gb * ba * t + ba * z0), w * ba, w * gb);
              add_entry(r, row, col,
                        phase * phi_taylor2(z0 + gb * t, ba * t, dtau, order, cfg_));
            }
          }
      out.analytic = r;
      return out;
    }
  }
  throw std::logic_error("unreachable");
}

Mat RFamily::r_mat(cplx z) const {
  const auto L = laurent_mu(z, 0);
  return L.analytic.coeff(0);
}

Mat RFamily::m_mat(cplx z) const {
  const auto L = laurent_mu(z, 1);
  return L.analytic.coeff(L.analytic.table().find({0, 1}));
}

Mat RFamily::rp_mat(cplx z) const {
  const auto L = laurent_mu(z, 1);
  return L.analytic.coeff(L.analytic.table().find({1, 0}));
}

Mat RFamily::mp_mat(cplx z) const {
  const auto L = laurent_mu(z, 2);
  return L.analytic.coeff(L.analytic.table().find({1, 1}));
}

std::vector<Mat> RFamily::r_taylor(cplx z0, int order) const {
  const auto L = laurent_mu(z0, order);
  std::vector<Mat> out(order + 1);
  for (int a = 0; a <= order; ++a)
    out[a] = L.analytic.coeff(L.analytic.table().find({a, 0}));
  return out;
}

std::vector<Mat> RFamily::m_taylor(cplx z0, int order) const {
  const auto L = laurent_mu(z0, order + 1);
  std::vector<Mat> out(order + 1);
  for (int a = 0; a <= order; ++a)
    out[a] = L.analytic.coeff(L.analytic.table().find({a, 1}));
  return out;
}

Mat RFamily::dz_mat(cplx z, cplx mu) const {
  MJet j = evaluate_jet2(z, mu, 1);
  return j.coeff(j.table().find({1, 0}));
}

cplx RFamily::unitarity_factor(cplx z, cplx mu) const {
  if (elliptic()) return weierstrass_p(mu, *tau_, cfg_) - weierstrass_p(z, *tau_, cfg_);
  return trig_wp(mu) - trig_wp(z);
}

double rel_residual(const Mat& lhs, const Mat& rhs) {
  const double scale = std::max({1.0, lhs.norm(), rhs.norm()});
  return (lhs - rhs).norm() / scale;
}

namespace {

// polynomial extrapolation of matrix samples f(t_k) to t=0 (Neville)
Mat neville_to_zero(const std::vector<double>& ts, std::vector<Mat> f) {
  const int n = static_cast<int>(ts.size());
  for (int level = 1; level < n; ++level)
    for (int i = 0; i < n - level; ++i)
      f[i] = (f[i] * (-ts[i + level]) - f[i + 1] * (-ts[i])) / (ts[i] - ts[i + level]);
  return f[0];
}

struct SuiteSampler {
  const RFamily& fam;
  Rng rng;

  cplx arg() { return fam.sample_arg(rng); }

  // tuple with all derived arguments guarded
  void aybe(cplx& z, cplx& zp, cplx& mu, cplx& mup) {
    for (int tries = 0; tries < 2000; ++tries) {
      z = arg(); zp = arg(); mu = arg(); mup = arg();
      const double g = fam.config().pole_guard;
      if (fam.pole_distance(z + zp) > g && fam.pole_distance(mu - mup) > g &&
          fam.pole_distance(mup - mu) > g)
        return;
    }
    throw std::runtime_error("aybe sampling failed");
  }
};

}  // namespace

Report identity_suite(const RFamily& fam, int samples, std::uint64_t seed, double tol) {
  Report rep;
  const int d = fam.d();
  const Mat P = fam.perm_matrix();
  const Mat id = Mat::Identity(d * d, d * d);
  const SpinSpace triple(d, 3, 32768);
  auto leg = [&](const Mat& m, int i, int j) { return embed_two_leg(m, i, j, triple); };

  // The *TimesP kinds have residue P; they satisfy plain z<->mu symmetry and
  // their period shifts conjugate trivially, unlike the Baxter-Belavin form.
  const bool residue_p =
      fam.kind() == RKind::KroneckerTimesP || fam.kind() == RKind::TrigTimesP;

  auto run = [&](const std::string& name, auto&& body) {
    SuiteSampler s{fam, Rng(seed).fork(stable_hash(name.c_str()))};
    double worst = 0.0;
    for (int k = 0; k < samples; ++k) worst = std::max(worst, body(s));
    rep.add({fam.name(), name, samples, worst, seed, tol});
  };

  run("skew_symmetry", [&](SuiteSampler& s) {
    const cplx z = s.arg(), mu = s.arg();
    return rel_residual(fam.evaluate(-z, -mu), -(P * fam.evaluate(z, mu) * P));
  });

  run("aybe", [&](SuiteSampler& s) {
    cplx z, zp, mu, mup;
    s.aybe(z, zp, mu, mup);
    const Mat lhs = leg(fam.evaluate(z, mu), 0, 1) * leg(fam.evaluate(zp, mup), 1, 2);
    const Mat rhs = leg(fam.evaluate(z + zp, mup), 0, 2) * leg(fam.evaluate(z, mu - mup), 0, 1) +
                    leg(fam.evaluate(zp, mup - mu), 1, 2) * leg(fam.evaluate(z + zp, mu), 0, 2);
    return rel_residual(lhs, rhs);
  });

  run("unitarity", [&](SuiteSampler& s) {
    const cplx z = s.arg(), mu = s.arg();
    const Mat lhs = fam.evaluate(z, mu) * (P * fam.evaluate(-z, mu) * P);
    return rel_residual(lhs, fam.unitarity_factor(z, mu) * id);
  });

  run("qybe", [&](SuiteSampler& s) {
    cplx z, zp, mu, mup;
    s.aybe(z, zp, mu, mup);  // reuses the z+zp guard
    const Mat r12 = leg(fam.evaluate(z, mu), 0, 1);
    const Mat r13 = leg(fam.evaluate(z + zp, mu), 0, 2);
    const Mat r23 = leg(fam.evaluate(zp, mu), 1, 2);
    return rel_residual(r12 * r13 * r23, r23 * r13 * r12);
  });

  run("symmetry", [&](SuiteSampler& s) {
    const cplx z = s.arg(), mu = s.arg();
    const Mat rhs = residue_p ? fam.evaluate(mu, z) : Mat(fam.evaluate(mu, z) * P);
    return rel_residual(fam.evaluate(z, mu), rhs);
  });

  const Mat Q = fam.q_matrix(), L = fam.lambda_matrix();
  const Mat Qi = Q.inverse(), Li = L.inverse();
  const Mat I_d = Mat::Identity(d, d);

  run("quasi_mu_period", [&](SuiteSampler& s) {
    const cplx z = s.arg(), mu = s.arg();
    const Mat lhs = fam.evaluate(z, mu + fam.mu_period());
    return rel_residual(lhs, kron(Qi, I_d) * fam.evaluate(z, mu) * kron(I_d, Q));
  });

  run("quasi_z_period", [&](SuiteSampler& s) {
    const cplx z = s.arg(), mu = s.arg();
    const Mat lhs = fam.evaluate(z + fam.mu_period(), mu);
    const Mat right = residue_p ? kron(I_d, Q) : kron(Q, I_d);
    return rel_residual(lhs, kron(Qi, I_d) * fam.evaluate(z, mu) * right);
  });

  if (fam.elliptic()) {
    const cplx t = fam.tau().tau;
    const double de = fam.tau_shift_denom();
    run("quasi_mu_tau", [&](SuiteSampler& s) {
      const cplx z = s.arg(), mu = s.arg();
      const cplx f = std::exp(-2.0 * kPi * kI * z / de);
      const Mat lhs = fam.evaluate(z, mu + t);
      return rel_residual(lhs, f * kron(Li, I_d) * fam.evaluate(z, mu) * kron(I_d, L));
    });
    run("quasi_z_tau", [&](SuiteSampler& s) {
      const cplx z = s.arg(), mu = s.arg();
      const cplx f = std::exp(-2.0 * kPi * kI * mu / de);
      const Mat lhs = fam.evaluate(z + t, mu);
      const Mat right = residue_p ? kron(I_d, L) : kron(L, I_d);
      return rel_residual(lhs, f * kron(Li, I_d) * fam.evaluate(z, mu) * right);
    });
    run("heisenberg_commute", [&](SuiteSampler& s) {
      const cplx z = s.arg(), mu = s.arg();
      const Mat R = fam.evaluate(z, mu);
      const double a = rel_residual(kron(Q, Q) * R, R * kron(Q, Q));
      const double b = rel_residual(kron(L, L) * R, R * kron(L, L));
      return std::max(a, b);
    });
  }

  run("regularity_residue", [&](SuiteSampler& s) {
    const cplx z = s.arg();
    const cplx dir = cplx(1.0, 0.37) / std::abs(cplx(1.0, 0.37));
    const std::vector<double> ts = {8e-3, 4e-3, 2e-3, 1e-3};
    std::vector<Mat> vals;
    for (double tt : ts) {
      const cplx mu = tt * dir;
      vals.push_back(mu * fam.evaluate(z, mu));
    }
    const Mat res = neville_to_zero(ts, std::move(vals));
    return rel_residual(res, fam.residue_mu0());
  });

  return rep;
}

}  // namespace rmx
