#include "rmx/jet.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace rmx::jets {

namespace {

void enumerate(std::vector<std::vector<int>>& out, std::vector<int>& cur, int var, int left) {
  if (var == static_cast<int>(cur.size())) {
    out.push_back(cur);
    return;
  }
  for (int k = 0; k <= left; ++k) {
    cur[var] = k;
    enumerate(out, cur, var + 1, left - k);
  }
  cur[var] = 0;
}

}  // namespace

int JetTable::find(const std::vector<int>& m) const {
  for (int p = 0; p < size(); ++p)
    if (mi[p] == m) return p;
  return -1;
}

const JetTable& JetTable::get(int nvars, int order) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, JetTable> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(nvars, order);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  JetTable t;
  t.nvars = nvars;
  t.order = order;
  std::vector<std::vector<int>> all;
  std::vector<int> cur(nvars, 0);
  enumerate(all, cur, 0, order);
  // sort by total degree, then lexicographic, so position 0 is the constant
  std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
    int da = 0, db = 0;
    for (int x : a) da += x;
    for (int x : b) db += x;
    if (da != db) return da < db;
    return a < b;
  });
  t.mi = std::move(all);
  t.degree.resize(t.size());
  for (int p = 0; p < t.size(); ++p) {
    int d = 0;
    for (int x : t.mi[p]) d += x;
    t.degree[p] = d;
  }
  const int n = t.size();
  t.prod.assign(static_cast<size_t>(n) * n, -1);
  t.decomp.resize(n);
  std::map<std::vector<int>, int> lookup;
  for (int p = 0; p < n; ++p) lookup[t.mi[p]] = p;
  std::vector<int> sum(nvars);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (t.degree[i] + t.degree[j] > order) continue;
      for (int v = 0; v < nvars; ++v) sum[v] = t.mi[i][v] + t.mi[j][v];
      int k = lookup.at(sum);
      t.prod[static_cast<size_t>(i) * n + j] = k;
      t.decomp[k].push_back({i, j});
    }
  }
  return cache.emplace(key, std::move(t)).first->second;
}

MJet MJet::constant(const JetTable& tab, const Mat& value) {
  MJet j(tab, static_cast<int>(value.rows()));
  j.c_[0] = value;
  return j;
}

MJet MJet::constant_scalar(const JetTable& tab, cplx value) {
  MJet j(tab, 1);
  j.c_[0](0, 0) = value;
  return j;
}

MJet MJet::variable(const JetTable& tab, int var, cplx value) {
  MJet j(tab, 1);
  j.c_[0](0, 0) = value;
  if (tab.order >= 1) {
    std::vector<int> e(tab.nvars, 0);
    e[var] = 1;
    int p = tab.find(e);
    j.c_[p](0, 0) = 1.0;
  }
  return j;
}

MJet MJet::operator+(const MJet& o) const {
  const MJet *a = this, *b = &o;
  if (a->dim_ == 1 && b->dim_ != 1) std::swap(a, b);
  MJet r = *a;
  if (b->dim_ == a->dim_) {
    for (int p = 0; p < tab_->size(); ++p) r.c_[p] += b->c_[p];
  } else {
    // scalar broadcast onto the diagonal
    Mat id = Mat::Identity(a->dim_, a->dim_);
    for (int p = 0; p < tab_->size(); ++p) r.c_[p] += b->c_[p](0, 0) * id;
  }
  return r;
}

MJet MJet::operator-(const MJet& o) const { return *this + o.scaled(-1.0); }

MJet MJet::scaled(cplx s) const {
  MJet r = *this;
  for (auto& m : r.c_) m *= s;
  return r;
}

MJet MJet::operator*(const MJet& o) const {
  const int n = tab_->size();
  const int dim = std::max(dim_, o.dim_);
  MJet r(*tab_, dim);
  const bool ls = (dim_ == 1), rs = (o.dim_ == 1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      int k = tab_->prod[static_cast<size_t>(i) * n + j];
      if (k < 0) continue;
      if (ls && rs)
        r.c_[k](0, 0) += c_[i](0, 0) * o.c_[j](0, 0);
      else if (ls)
        r.c_[k] += c_[i](0, 0) * o.c_[j];
      else if (rs)
        r.c_[k] += o.c_[j](0, 0) * c_[i];
      else
        r.c_[k] += c_[i] * o.c_[j];
    }
  }
  return r;
}

MJet MJet::recip() const {
  if (dim_ != 1) throw std::logic_error("MJet::recip: matrix jets not supported");
  cplx b0 = c_[0](0, 0);
  if (std::abs(b0) == 0.0) throw std::domain_error("MJet::recip: vanishing constant term");
  MJet r(*tab_, 1);
  r.c_[0](0, 0) = 1.0 / b0;
  // power-series inversion, positions processed in degree order
  for (int k = 1; k < tab_->size(); ++k) {
    cplx acc = 0.0;
    for (auto [i, j] : tab_->decomp[k]) {
      if (i == 0) continue;  // needs deg(i) > 0, deg(j) < deg(k)
      acc += c_[i](0, 0) * r.c_[j](0, 0);
    }
    r.c_[k](0, 0) = -acc / b0;
  }
  return r;
}

cplx MJet::derivative(const std::vector<int>& mi) const {
  int p = tab_->find(mi);
  if (p < 0) throw std::out_of_range("MJet::derivative: index beyond truncation order");
  double f = 1.0;
  for (int x : mi) f *= factorial(x);
  return c_[p](0, 0) * f;
}

MJet MJet::derivative_shift(const std::vector<int>& gamma, const JetTable& out_tab) const {
  MJet r(out_tab, dim_);
  std::vector<int> src(tab_->nvars);
  for (int p = 0; p < out_tab.size(); ++p) {
    const auto& beta = out_tab.mi[p];
    double ratio = 1.0;
    for (int v = 0; v < tab_->nvars; ++v) {
      src[v] = beta[v] + gamma[v];
      for (int t = beta[v] + 1; t <= src[v]; ++t) ratio *= t;  // (beta+gamma)!/beta!
    }
    int q = tab_->find(src);
    if (q < 0) throw std::out_of_range("MJet::derivative_shift: parent order too low");
    r.coeff(p) = c_[q] * ratio;
  }
  return r;
}

MJet MJet::shift_var_down(int var, const JetTable& out_tab) const {
  MJet r(out_tab, dim_);
  for (int p = 0; p < out_tab.size(); ++p) {
    std::vector<int> m = out_tab.mi[p];
    m[var] += 1;
    int q = tab_->find(m);
    if (q >= 0) r.coeff(p) = c_[q];
  }
  return r;
}

MJet MJet::scale_var_powers(int var, cplx s) const {
  MJet r = *this;
  for (int p = 0; p < tab_->size(); ++p) {
    cplx f = 1.0;
    for (int t = 0; t < tab_->mi[p][var]; ++t) f *= s;
    r.c_[p] *= f;
  }
  return r;
}

MJet MJet::permute_vars(const std::vector<int>& perm) const {
  MJet r(*tab_, dim_);
  std::vector<int> target(tab_->nvars);
  for (int p = 0; p < tab_->size(); ++p) {
    for (int v = 0; v < tab_->nvars; ++v) target[perm[v]] = tab_->mi[p][v];
    r.coeff(tab_->find(target)) = c_[p];
  }
  return r;
}

MJet MJet::retable(const JetTable& out_tab) const {
  MJet r(out_tab, dim_);
  for (int p = 0; p < out_tab.size(); ++p) {
    int q = tab_->find(out_tab.mi[p]);
    if (q >= 0) r.coeff(p) = c_[q];
  }
  return r;
}

double MJet::max_abs() const {
  double m = 0.0;
  for (const auto& mat : c_) m = std::max(m, mat.cwiseAbs().maxCoeff());
  return m;
}

MJet compose_univariate(const std::vector<Mat>& series, const MJet& arg) {
  if (!arg.is_scalar()) throw std::logic_error("compose_univariate: argument must be scalar");
  const JetTable& tab = arg.table();
  MJet delta = arg;
  delta.coeff(0)(0, 0) = 0.0;  // arg - arg0
  int dim = series.empty() ? 1 : static_cast<int>(series[0].rows());
  MJet acc(tab, dim);
  for (int k = static_cast<int>(series.size()) - 1; k >= 0; --k) {
    acc = acc * delta;
    acc = acc + MJet::constant(tab, series[k]);
  }
  return acc;
}

MJet compose_univariate(const std::vector<cplx>& series, const MJet& arg) {
  std::vector<Mat> s(series.size());
  for (size_t k = 0; k < series.size(); ++k) {
    s[k] = Mat::Zero(1, 1);
    s[k](0, 0) = series[k];
  }
  return compose_univariate(s, arg);
}

double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace rmx::jets
