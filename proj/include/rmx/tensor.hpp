#pragma once

#include <vector>

#include "rmx/jet.hpp"

namespace rmx {

// Permutation of {0,..,n-1} in one-line notation: map[i] is the image of i.
// Products compose like functions: (a*b)(i) = a(b(i)).
struct Perm {
  std::vector<int> map;

  Perm() = default;
  explicit Perm(int n) : map(n) {
    for (int i = 0; i < n; ++i) map[i] = i;
  }
  explicit Perm(std::vector<int> m) : map(std::move(m)) {}

  int n() const { return static_cast<int>(map.size()); }
  int operator()(int i) const { return map[i]; }
  bool is_identity() const {
    for (int i = 0; i < n(); ++i)
      if (map[i] != i) return false;
    return true;
  }
  Perm inverse() const {
    Perm r(n());
    for (int i = 0; i < n(); ++i) r.map[map[i]] = i;
    return r;
  }
  friend Perm operator*(const Perm& a, const Perm& b) {
    Perm r(a.n());
    for (int i = 0; i < a.n(); ++i) r.map[i] = a.map[b.map[i]];
    return r;
  }
  friend bool operator==(const Perm& a, const Perm& b) { return a.map == b.map; }
  friend bool operator<(const Perm& a, const Perm& b) { return a.map < b.map; }

  static Perm transposition(int n, int i, int j);
  static Perm cycle(int n, const std::vector<int>& orbit);  // orbit[0]->orbit[1]->...->orbit[0]
};

std::vector<Perm> all_permutations(int n);

// Tensor product space U = (C^d)^{x n}; site 0 carries the most significant digit.
struct SpinSpace {
  int d = 0;
  int n = 0;

  SpinSpace(int d_, int n_, long budget = 4096);
  long dim() const {
    long D = 1;
    for (int k = 0; k < n; ++k) D *= d;
    return D;
  }
};

Mat kron(const Mat& a, const Mat& b);

// m (d^2 x d^2) acting on legs (i, j) of U, identity elsewhere; 0-based sites.
// For i > j the embedding is P m P on the swapped pair, matching R_ji = P R_ij P.
Mat embed_two_leg(const Mat& m, int i, int j, const SpinSpace& space);

// m (d x d) acting on leg i of U.
Mat embed_one_leg(const Mat& m, int i, const SpinSpace& space);

// Unitary permutation representation: U_w (u_1 x..x u_n) places the factor
// from slot k into slot w(k).
Mat permutation_op(const Perm& w, const SpinSpace& space);

// The finite Heisenberg pair of the Baxter-Belavin construction:
//   Q = diag(exp(2 pi i k/d)), k = 1..d;  Lambda_{kl} = [k-l+1 = 0 mod d].
// They obey Lambda Q = exp(2 pi i/d) Q Lambda and Q^d = Lambda^d = Id.
std::pair<Mat, Mat> q_lambda_matrices(int d);

}  // namespace rmx
