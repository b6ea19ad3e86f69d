#pragma once

#include <Eigen/Dense>
#include <complex>
#include <map>
#include <vector>

namespace rmx {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;

namespace jets {

// Shared multi-index bookkeeping for truncated Taylor expansions in `nvars`
// variables up to total degree `order`. Positions are sorted by total degree;
// position 0 is the constant term.
struct JetTable {
  int nvars = 0;
  int order = 0;
  std::vector<std::vector<int>> mi;        // position -> multi-index
  std::vector<int> degree;                 // position -> |multi-index|
  std::vector<int> prod;                   // [i*size+j] -> position of mi[i]+mi[j], -1 if truncated
  std::vector<std::vector<std::pair<int, int>>> decomp;  // k -> all (i,j) with mi[i]+mi[j]=mi[k]

  int size() const { return static_cast<int>(mi.size()); }
  int find(const std::vector<int>& m) const;  // -1 if absent

  // Cached, thread-safe registry.
  static const JetTable& get(int nvars, int order);
};

// Matrix-valued jet: coefficients of a truncated Taylor expansion around some
// base point. dim==1 doubles as the scalar case. Mixed scalar*matrix products
// are allowed; matrix*matrix multiplies do not commute.
class MJet {
 public:
  MJet() = default;
  MJet(const JetTable& tab, int dim)
      : tab_(&tab), dim_(dim), c_(tab.size(), Mat::Zero(dim, dim)) {}

  static MJet constant(const JetTable& tab, const Mat& value);
  static MJet constant_scalar(const JetTable& tab, cplx value);
  // value + (variable var); requires order >= 1 unless order==0
  static MJet variable(const JetTable& tab, int var, cplx value);

  const JetTable& table() const { return *tab_; }
  int dim() const { return dim_; }
  int order() const { return tab_->order; }
  bool is_scalar() const { return dim_ == 1; }

  const Mat& coeff(int pos) const { return c_[pos]; }
  Mat& coeff(int pos) { return c_[pos]; }
  const Mat& value() const { return c_[0]; }
  cplx scalar_value() const { return c_[0](0, 0); }
  cplx scalar_coeff(int pos) const { return c_[pos](0, 0); }

  MJet operator+(const MJet& o) const;
  MJet operator-(const MJet& o) const;
  MJet operator*(const MJet& o) const;  // jet product (Cauchy convolution)
  MJet scaled(cplx s) const;
  MJet recip() const;  // scalar jets only; constant term must not vanish

  // Partial-derivative coefficient: coeff(mi) * mi!  (the actual derivative value).
  cplx derivative(const std::vector<int>& mi) const;

  // Jet of the |gamma|-th partial derivative, truncated to a lower-order table.
  MJet derivative_shift(const std::vector<int>& gamma, const JetTable& out_tab) const;

  // Re-expand in the same table with variables permuted: variable i of *this
  // becomes variable perm[i] of the result.
  MJet permute_vars(const std::vector<int>& perm) const;

  // Divide by the given variable: c'[..,k,..] = c[..,k+1,..], dropping the
  // constant slice (which the caller asserts is zero or handles separately).
  MJet shift_var_down(int var, const JetTable& out_tab) const;

  // Substitute var -> s*var: coefficients scale by s^power.
  MJet scale_var_powers(int var, cplx s) const;

  // Truncate/embed into another table over the same variables.
  MJet retable(const JetTable& out_tab) const;

  double max_abs() const;

 private:
  const JetTable* tab_ = nullptr;
  int dim_ = 0;
  std::vector<Mat> c_;
};

// f composed with a scalar argument jet: series[k] = f^(k)(arg.value)/k!.
// The argument's constant term is the expansion point, so composition uses
// (arg - arg0), which is nilpotent at fixed truncation order.
MJet compose_univariate(const std::vector<Mat>& series, const MJet& arg);
MJet compose_univariate(const std::vector<cplx>& series, const MJet& arg);

double factorial(int n);

}  // namespace jets
}  // namespace rmx
