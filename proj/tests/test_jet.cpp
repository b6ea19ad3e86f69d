#include "doctest.h"
#include "rmx/jet.hpp"
#include "rmx/rng.hpp"

#include <cmath>

using namespace rmx;
using jets::JetTable;
using jets::MJet;

namespace {

MJet random_scalar_jet(const JetTable& tab, Rng& rng) {
  MJet j(tab, 1);
  for (int p = 0; p < tab.size(); ++p)
    j.coeff(p)(0, 0) = cplx(rng.uniform(-1, 1), rng.uniform(-1, 1));
  return j;
}

// direct convolution over raw multi-indices, independent of the prod table
MJet convolve_oracle(const MJet& a, const MJet& b) {
  const JetTable& tab = a.table();
  MJet r(tab, 1);
  for (int i = 0; i < tab.size(); ++i)
    for (int j = 0; j < tab.size(); ++j) {
      std::vector<int> sum(tab.nvars);
      int deg = 0;
      for (int v = 0; v < tab.nvars; ++v) {
        sum[v] = tab.mi[i][v] + tab.mi[j][v];
        deg += sum[v];
      }
      if (deg > tab.order) continue;
      r.coeff(tab.find(sum))(0, 0) += a.scalar_coeff(i) * b.scalar_coeff(j);
    }
  return r;
}

double jdist(const MJet& a, const MJet& b) { return (a - b).max_abs(); }

}  // namespace

TEST_CASE("x*x has coefficient 1 at order 2") {
  const JetTable& tab = JetTable::get(1, 2);
  MJet x = MJet::variable(tab, 0, 0.0);
  MJet xx = x * x;
  CHECK(std::abs(xx.scalar_coeff(tab.find({2})) - 1.0) < 1e-15);
  CHECK(std::abs(xx.derivative({2}) - 2.0) < 1e-15);  // d^2/dx^2 x^2 = 2
}

TEST_CASE("1/(1-x) is the geometric series") {
  const JetTable& tab = JetTable::get(1, 3);
  MJet one = MJet::constant_scalar(tab, 1.0);
  MJet d = one - MJet::variable(tab, 0, 0.0);
  MJet g = d.recip();
  for (int k = 0; k <= 3; ++k) CHECK(std::abs(g.scalar_coeff(tab.find({k})) - 1.0) < 1e-14);
}

TEST_CASE("product matches convolution oracle") {
  const JetTable& tab = JetTable::get(3, 3);
  Rng rng(42);
  for (int rep = 0; rep < 20; ++rep) {
    MJet a = random_scalar_jet(tab, rng), b = random_scalar_jet(tab, rng);
    CHECK(jdist(a * b, convolve_oracle(a, b)) < 1e-13);
  }
}

TEST_CASE("ring axioms on random jet triples") {
  const JetTable& tab = JetTable::get(2, 4);
  Rng rng(7);
  for (int rep = 0; rep < 100; ++rep) {
    MJet a = random_scalar_jet(tab, rng), b = random_scalar_jet(tab, rng),
         c = random_scalar_jet(tab, rng);
    CHECK(jdist((a * b) * c, a * (b * c)) < 1e-12);
    CHECK(jdist(a * (b + c), a * b + a * c) < 1e-12);
    CHECK(jdist(a * b, b * a) < 1e-13);  // scalar jets commute
    MJet r = a;
    r.coeff(0)(0, 0) += 3.0;  // keep the constant term away from 0
    CHECK(jdist(r * r.recip(), MJet::constant_scalar(tab, 1.0)) < 1e-12);
  }
}

TEST_CASE("exp composition has factorial coefficients") {
  const JetTable& tab = JetTable::get(1, 3);
  std::vector<cplx> exp_series = {1.0, 1.0, 0.5, 1.0 / 6.0};
  MJet x = MJet::variable(tab, 0, 0.0);
  MJet e = jets::compose_univariate(exp_series, x);
  CHECK(std::abs(e.scalar_coeff(tab.find({0})) - 1.0) < 1e-15);
  CHECK(std::abs(e.scalar_coeff(tab.find({1})) - 1.0) < 1e-15);
  CHECK(std::abs(e.scalar_coeff(tab.find({2})) - 0.5) < 1e-15);
  CHECK(std::abs(e.derivative({1}) - 1.0) < 1e-15);
}

TEST_CASE("chain rule at order 1 through composition") {
  // f = exp, g(x) = g0 + g1 x: (f.g)'(0) = f'(g0) g1
  const JetTable& tab = JetTable::get(1, 2);
  Rng rng(3);
  for (int rep = 0; rep < 10; ++rep) {
    cplx g0(rng.uniform(-1, 1), rng.uniform(-1, 1)), g1(rng.uniform(-1, 1), rng.uniform(-1, 1));
    MJet g = MJet::constant_scalar(tab, g0) + MJet::variable(tab, 0, 0.0) * MJet::constant_scalar(tab, g1);
    const cplx e0 = std::exp(g0);
    std::vector<cplx> series = {e0, e0, e0 / 2.0};
    MJet fg = jets::compose_univariate(series, g);
    CHECK(std::abs(fg.derivative({1}) - e0 * g1) < 1e-13);
  }
}

TEST_CASE("derivative_shift and permute_vars bookkeeping") {
  const JetTable& tab = JetTable::get(2, 3);
  Rng rng(11);
  MJet a = random_scalar_jet(tab, rng);
  const JetTable& low = JetTable::get(2, 1);
  MJet da = a.derivative_shift({1, 1}, low);
  // d^2/dxdy of sum c_ab x^a y^b at 0 is c_11 * 1!1!
  CHECK(std::abs(da.scalar_coeff(0) - a.scalar_coeff(tab.find({1, 1}))) < 1e-14);

  MJet p = a.permute_vars({1, 0});
  CHECK(std::abs(p.scalar_coeff(tab.find({2, 1})) - a.scalar_coeff(tab.find({1, 2}))) < 1e-15);
}

TEST_CASE("matrix jets multiply noncommutatively") {
  const JetTable& tab = JetTable::get(1, 2);
  Mat A = Mat::Zero(2, 2), B = Mat::Zero(2, 2);
  A(0, 1) = 1.0;
  B(1, 0) = 1.0;
  MJet ja = MJet::constant(tab, A) * MJet::variable(tab, 0, 0.0);
  MJet jb = MJet::constant(tab, B) * MJet::variable(tab, 0, 0.0);
  MJet ab = ja * jb, ba = jb * ja;
  CHECK((ab.coeff(tab.find({2})) - A * B).norm() < 1e-15);
  CHECK((ab.coeff(tab.find({2})) - ba.coeff(tab.find({2}))).norm() > 0.5);
}
