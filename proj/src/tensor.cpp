#include "rmx/tensor.hpp"

#include <algorithm>
#include <stdexcept>

namespace rmx {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
const cplx kI(0.0, 1.0);
}  // namespace

Perm Perm::transposition(int n, int i, int j) {
  Perm p(n);
  std::swap(p.map[i], p.map[j]);
  return p;
}

Perm Perm::cycle(int n, const std::vector<int>& orbit) {
  Perm p(n);
  for (size_t k = 0; k < orbit.size(); ++k)
    p.map[orbit[k]] = orbit[(k + 1) % orbit.size()];
  return p;
}

std::vector<Perm> all_permutations(int n) {
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  std::vector<Perm> out;
  do {
    out.push_back(Perm(idx));
  } while (std::next_permutation(idx.begin(), idx.end()));
  return out;
}

SpinSpace::SpinSpace(int d_, int n_, long budget) : d(d_), n(n_) {
  if (d < 1 || n < 2) throw std::invalid_argument("SpinSpace: need d >= 1, n >= 2");
  long D = 1;
  for (int k = 0; k < n; ++k) {
    D *= d;
    if (D > budget) throw std::length_error("SpinSpace: d^n exceeds memory budget");
  }
}

Mat kron(const Mat& a, const Mat& b) {
  Mat r(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      r.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return r;
}

Mat embed_two_leg(const Mat& m, int i, int j, const SpinSpace& space) {
  const int d = space.d;
  if (m.rows() != d * d || m.cols() != d * d)
    throw std::invalid_argument("embed_two_leg: operator must be d^2 x d^2");
  if (i == j || i < 0 || j < 0 || i >= space.n || j >= space.n)
    throw std::invalid_argument("embed_two_leg: bad leg indices");
  if (i > j) {
    Mat p = Mat::Zero(d * d, d * d);
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) p(a * d + b, b * d + a) = 1.0;
    return embed_two_leg(p * m * p, j, i, space);
  }
  const long D = space.dim();
  Mat r = Mat::Zero(D, D);
  // strides of the site digits in the flattened index
  std::vector<long> stride(space.n, 1);
  for (int s = space.n - 2; s >= 0; --s) stride[s] = stride[s + 1] * d;
  for (long col = 0; col < D; ++col) {
    const int li = static_cast<int>(col / stride[i]) % d;
    const int lj = static_cast<int>(col / stride[j]) % d;
    const long base = col - li * stride[i] - lj * stride[j];
    for (int ki = 0; ki < d; ++ki)
      for (int kj = 0; kj < d; ++kj) {
        const cplx v = m(ki * d + kj, li * d + lj);
        if (v == cplx(0.0)) continue;
        r(base + ki * stride[i] + kj * stride[j], col) += v;
      }
  }
  return r;
}

Mat embed_one_leg(const Mat& m, int i, const SpinSpace& space) {
  const int d = space.d;
  if (m.rows() != d || m.cols() != d)
    throw std::invalid_argument("embed_one_leg: operator must be d x d");
  const long D = space.dim();
  std::vector<long> stride(space.n, 1);
  for (int s = space.n - 2; s >= 0; --s) stride[s] = stride[s + 1] * d;
  Mat r = Mat::Zero(D, D);
  for (long col = 0; col < D; ++col) {
    const int li = static_cast<int>(col / stride[i]) % d;
    const long base = col - li * stride[i];
    for (int ki = 0; ki < d; ++ki) {
      const cplx v = m(ki, li);
      if (v == cplx(0.0)) continue;
      r(base + ki * stride[i], col) += v;
    }
  }
  return r;
}

Mat permutation_op(const Perm& w, const SpinSpace& space) {
  const int d = space.d;
  const long D = space.dim();
  std::vector<long> stride(space.n, 1);
  for (int s = space.n - 2; s >= 0; --s) stride[s] = stride[s + 1] * d;
  Mat r = Mat::Zero(D, D);
  std::vector<int> dig(space.n);
  for (long col = 0; col < D; ++col) {
    for (int s = 0; s < space.n; ++s) dig[s] = static_cast<int>(col / stride[s]) % d;
    long row = 0;
    for (int s = 0; s < space.n; ++s) row += dig[s] * stride[w(s)];
    r(row, col) = 1.0;
  }
  return r;
}

std::pair<Mat, Mat> q_lambda_matrices(int d) {
  Mat q = Mat::Zero(d, d), lam = Mat::Zero(d, d);
  for (int r = 0; r < d; ++r) {
    q(r, r) = std::exp(2.0 * kPi * kI * static_cast<double>(r + 1) / static_cast<double>(d));
    lam(r, (r + 1) % d) = 1.0;
  }
  return {q, lam};
}

}  // namespace rmx
