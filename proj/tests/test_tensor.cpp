#include "doctest.h"
#include "rmx/rng.hpp"
#include "rmx/tensor.hpp"

using namespace rmx;

namespace {

Mat random_mat(int d, Rng& rng) {
  Mat m(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m(i, j) = cplx(rng.uniform(-1, 1), rng.uniform(-1, 1));
  return m;
}

Mat perm_mat_d(int d) {
  Mat p = Mat::Zero(d * d, d * d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) p(a * d + b, b * d + a) = 1.0;
  return p;
}

}  // namespace

TEST_CASE("spin space guards") {
  CHECK_THROWS(SpinSpace(2, 1));
  CHECK_THROWS(SpinSpace(0, 3));
  CHECK_THROWS(SpinSpace(2, 13));  // 8192 > default budget
  CHECK(SpinSpace(2, 5).dim() == 32);
  CHECK(SpinSpace(3, 4).dim() == 81);
}

TEST_CASE("kron basics") {
  Mat id2 = Mat::Identity(2, 2);
  CHECK((kron(id2, id2) - Mat::Identity(4, 4)).norm() < 1e-15);

  Mat e12 = Mat::Zero(2, 2), e21 = Mat::Zero(2, 2);
  e12(0, 1) = 1.0;
  e21(1, 0) = 1.0;
  Mat k = kron(e12, e21);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      CHECK(std::abs(k(r, c) - ((r == 0 * 2 + 1 && c == 1 * 2 + 0) ? 1.0 : 0.0)) < 1e-15);
}

TEST_CASE("kron is multiplicative and norm-multiplicative") {
  Rng rng(17);
  for (int rep = 0; rep < 20; ++rep) {
    Mat a = random_mat(2, rng), b = random_mat(2, rng), c = random_mat(2, rng),
        d = random_mat(2, rng);
    CHECK((kron(a, b) * kron(c, d) - kron(a * c, b * d)).norm() < 1e-13);
    CHECK(std::abs(kron(a, b).norm() - a.norm() * b.norm()) < 1e-13);
  }
}

TEST_CASE("embed_two_leg: identity, permutation, and swapped-leg convention") {
  SpinSpace sp(2, 3);
  CHECK((embed_two_leg(Mat::Identity(4, 4), 0, 1, sp) - Mat::Identity(8, 8)).norm() < 1e-15);

  Mat p = perm_mat_d(2);
  CHECK((embed_two_leg(p, 0, 2, sp) - permutation_op(Perm::transposition(3, 0, 2), sp)).norm() <
        1e-15);

  Rng rng(3);
  Mat m = random_mat(4, rng);
  CHECK((embed_two_leg(m, 1, 0, sp) - embed_two_leg(p * m * p, 0, 1, sp)).norm() < 1e-14);
}

TEST_CASE("embedded operators on disjoint legs commute") {
  SpinSpace sp(2, 4);
  Rng rng(23);
  Mat m1 = random_mat(4, rng), m2 = random_mat(4, rng);
  Mat a = embed_two_leg(m1, 0, 1, sp), b = embed_two_leg(m2, 2, 3, sp);
  CHECK((a * b - b * a).norm() < 1e-13);
}

TEST_CASE("permutation_op is a homomorphism") {
  SpinSpace sp2(3, 2), sp3(2, 3);
  CHECK((permutation_op(Perm(2), sp2) - Mat::Identity(9, 9)).norm() < 1e-15);
  Mat s = permutation_op(Perm::transposition(2, 0, 1), sp2);
  CHECK((s * s - Mat::Identity(9, 9)).norm() < 1e-15);

  // braid relation s12 s23 s12 = s23 s12 s23
  Mat s12 = permutation_op(Perm::transposition(3, 0, 1), sp3);
  Mat s23 = permutation_op(Perm::transposition(3, 1, 2), sp3);
  CHECK((s12 * s23 * s12 - s23 * s12 * s23).norm() < 1e-15);

  Rng rng(5);
  auto perms = all_permutations(3);
  for (int rep = 0; rep < 100; ++rep) {
    const Perm& a = perms[rng.next_u64() % perms.size()];
    const Perm& b = perms[rng.next_u64() % perms.size()];
    CHECK((permutation_op(a * b, sp3) - permutation_op(a, sp3) * permutation_op(b, sp3)).norm() <
          1e-14);
  }
}

TEST_CASE("q_lambda matrices") {
  auto [q3, l3] = q_lambda_matrices(3);
  CHECK(((q3 * q3 * q3) - Mat::Identity(3, 3)).norm() < 1e-14);
  CHECK(((l3 * l3 * l3) - Mat::Identity(3, 3)).norm() < 1e-14);

  auto [q2, l2] = q_lambda_matrices(2);
  CHECK(std::abs(l2(0, 1) - 1.0) < 1e-15);
  CHECK(std::abs(l2(1, 0) - 1.0) < 1e-15);
  CHECK(std::abs(l2(0, 0)) + std::abs(l2(1, 1)) < 1e-15);

  // Weyl pair: Lambda Q = exp(2 pi i/d) Q Lambda, i.e. Q L Q^-1 L^-1 = exp(-2 pi i/d) Id
  const cplx w = std::exp(cplx(0.0, -2.0 * 3.141592653589793 / 3.0));
  Mat weyl = q3 * l3 * q3.inverse() * l3.inverse();
  CHECK((weyl - w * Mat::Identity(3, 3)).norm() < 1e-13);
}
