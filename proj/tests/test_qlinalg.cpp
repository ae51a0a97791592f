#include <cmath>
#include <complex>
#include <numbers>

#include "core/antiunitary.hpp"
#include "core/cmat.hpp"
#include "core/errors.hpp"
#include "core/rng.hpp"
#include "core/su2.hpp"
#include "doctest.h"

using namespace ewl;

namespace {

constexpr double kPi = std::numbers::pi;

Vec2 random_vec2(Rng& rng) {
  return {{cplx(rng.gaussian(), rng.gaussian()), cplx(rng.gaussian(), rng.gaussian())}};
}

Mat2 random_mat2(Rng& rng) {
  Mat2 m;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) m(r, c) = cplx(rng.gaussian(), rng.gaussian());
  return m;
}

// Independent Kronecker oracle, written directly from the component
// convention (first factor's index varies fastest).
Vec4 kron_oracle(const Vec2& a, const Vec2& b) {
  Vec4 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out[i + 2 * j] = a[i] * b[j];
  return out;
}

Mat4 kron_oracle(const Mat2& a, const Mat2& b) {
  Mat4 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) out(i + 2 * j, k + 2 * l) = a(i, k) * b(j, l);
  return out;
}

}  // namespace

TEST_CASE("vector tensor product: first factor varies fastest") {
  Vec2 a = {{cplx(1.0, 0.0), cplx(0.0, 2.0)}};
  Vec2 b = {{cplx(3.0, 0.0), cplx(4.0, 0.0)}};
  Vec4 t = tensor(a, b);
  CHECK(t[0] == cplx(3.0, 0.0));   // a0 b0
  CHECK(t[1] == cplx(0.0, 6.0));   // a1 b0
  CHECK(t[2] == cplx(4.0, 0.0));   // a0 b1
  CHECK(t[3] == cplx(0.0, 8.0));   // a1 b1

  Rng rng(901);
  for (int n = 0; n < 50; ++n) {
    Vec2 u = random_vec2(rng);
    Vec2 v = random_vec2(rng);
    CHECK(max_abs_diff(tensor(u, v), kron_oracle(u, v)) == 0.0);
  }
}

TEST_CASE("matrix tensor product matches the index oracle") {
  Rng rng(902);
  for (int n = 0; n < 50; ++n) {
    Mat2 a = random_mat2(rng);
    Mat2 b = random_mat2(rng);
    CHECK(max_abs_diff(tensor(a, b), kron_oracle(a, b)) == 0.0);
  }
}

TEST_CASE("tensor product is mixed-product compatible") {
  Rng rng(903);
  for (int n = 0; n < 50; ++n) {
    Mat2 a = random_mat2(rng);
    Mat2 b = random_mat2(rng);
    Vec2 u = random_vec2(rng);
    Vec2 v = random_vec2(rng);
    Vec4 lhs = tensor(a, b) * tensor(u, v);
    Vec4 rhs = tensor(a * u, b * v);
    CHECK(max_abs_diff(lhs, rhs) <= 1e-12);

    Mat2 c = random_mat2(rng);
    Mat2 d = random_mat2(rng);
    CHECK(max_abs_diff(tensor(a, b) * tensor(c, d), tensor(a * c, b * d)) <= 1e-12);
  }
}

TEST_CASE("pauli matrices and the defect move") {
  CHECK(sigma1()(0, 1) == cplx(1.0, 0.0));
  CHECK(sigma2()(0, 1) == cplx(0.0, -1.0));
  CHECK(sigma2()(1, 0) == cplx(0.0, 1.0));
  CHECK(sigma3()(1, 1) == cplx(-1.0, 0.0));
  // D = i sigma2 = [[0,1],[-1,0]].
  Mat2 d = cplx(0.0, 1.0) * sigma2();
  CHECK(max_abs_diff(tensor(d, identity2()), tensor(defect_matrix(), identity2())) ==
        0.0);
  CHECK(defect_matrix()(0, 1) == cplx(1.0, 0.0));
  CHECK(defect_matrix()(1, 0) == cplx(-1.0, 0.0));
}

TEST_CASE("inner product is conjugate-linear in the first argument") {
  Vec2 a = {{cplx(0.0, 1.0), cplx(0.0, 0.0)}};
  Vec2 b = {{cplx(1.0, 0.0), cplx(0.0, 0.0)}};
  CHECK(inner(a, b) == cplx(0.0, -1.0));
  CHECK(inner(b, a) == cplx(0.0, 1.0));
}

TEST_CASE("strategy from components") {
  double rt = 1.0 / std::sqrt(2.0);
  SU2 u = SU2::from_params(cplx(rt, 0.0), cplx(0.0, rt));
  Mat2 m = u.matrix();
  CHECK(std::abs(m(0, 0) - cplx(rt, 0.0)) <= 1e-15);
  CHECK(std::abs(m(0, 1) - cplx(0.0, rt)) <= 1e-15);
  CHECK(std::abs(m(1, 0) - cplx(0.0, rt)) <= 1e-15);
  CHECK(std::abs(m(1, 1) - cplx(rt, 0.0)) <= 1e-15);

  CHECK_THROWS_AS(SU2::from_params(cplx(1.0, 0.0), cplx(1.0, 0.0)), NormError);
  // Deviations within 1e-9 are renormalized instead of rejected.
  SU2 near = SU2::from_params(cplx(1.0 + 4e-10, 0.0), cplx(0.0, 0.0));
  CHECK(std::abs(near.alpha() - cplx(1.0, 0.0)) <= 1e-9);
  CHECK(std::abs(std::norm(near.alpha()) + std::norm(near.beta()) - 1.0) <= 1e-15);
}

TEST_CASE("strategy from angles") {
  SU2 id = SU2::from_angles(0.0, 0.0, 0.0);
  CHECK(std::abs(id.alpha() - cplx(1.0, 0.0)) == 0.0);
  CHECK(std::abs(id.beta()) == 0.0);

  SU2 d = SU2::from_angles(kPi, 0.0, 0.0);
  CHECK(std::abs(d.alpha()) <= 1e-15);
  CHECK(std::abs(d.beta() - cplx(1.0, 0.0)) <= 1e-15);

  Rng rng(904);
  for (int n = 0; n < 100; ++n) {
    double theta = rng.uniform(0.1, kPi - 0.1);
    double phi = rng.uniform(0.0, 2.0 * kPi);
    double psi = rng.uniform(0.0, 2.0 * kPi);
    SU2 u = SU2::from_angles(theta, phi, psi);
    auto back = u.to_angles();
    SU2 again = SU2::from_angles(back[0], back[1], back[2]);
    CHECK(std::abs(u.alpha() - again.alpha()) <= 1e-12);
    CHECK(std::abs(u.beta() - again.beta()) <= 1e-12);
  }
}

TEST_CASE("strategies multiply and invert like their matrices") {
  Rng rng(905);
  for (int n = 0; n < 50; ++n) {
    SU2 u = SU2::haar(rng);
    SU2 v = SU2::haar(rng);
    Mat2 prod = u.matrix() * v.matrix();
    Mat2 viaop = (u * v).matrix();
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) CHECK(std::abs(prod(r, c) - viaop(r, c)) <= 1e-14);

    Mat2 inv = (u * u.dagger()).matrix();
    CHECK(std::abs(inv(0, 0) - cplx(1.0, 0.0)) <= 1e-14);
    CHECK(std::abs(inv(0, 1)) <= 1e-14);
    CHECK(std::abs(inv(1, 0)) <= 1e-14);
    CHECK(std::abs(inv(1, 1) - cplx(1.0, 0.0)) <= 1e-14);
  }
}

TEST_CASE("haar draws are deterministic per seed and unitary") {
  Rng a(42), b(42);
  for (int n = 0; n < 20; ++n) {
    SU2 u = SU2::haar(a);
    SU2 v = SU2::haar(b);
    CHECK(u.alpha() == v.alpha());
    CHECK(u.beta() == v.beta());
    CHECK(std::abs(std::norm(u.alpha()) + std::norm(u.beta()) - 1.0) <= 1e-14);
  }
}

TEST_CASE("haar component means vanish and |alpha|^2 averages one half") {
  Rng rng(43);
  const int n = 10000;
  double mean_re_a = 0.0, mean_im_a = 0.0, mean_re_b = 0.0, mean_im_b = 0.0;
  double mean_abs2 = 0.0;
  for (int i = 0; i < n; ++i) {
    SU2 u = SU2::haar(rng);
    mean_re_a += u.alpha().real();
    mean_im_a += u.alpha().imag();
    mean_re_b += u.beta().real();
    mean_im_b += u.beta().imag();
    mean_abs2 += std::norm(u.alpha());
  }
  CHECK(std::abs(mean_re_a / n) <= 0.03);
  CHECK(std::abs(mean_im_a / n) <= 0.03);
  CHECK(std::abs(mean_re_b / n) <= 0.03);
  CHECK(std::abs(mean_im_b / n) <= 0.03);
  CHECK(std::abs(mean_abs2 / n - 0.5) <= 0.03);
}

TEST_CASE("exponentials of the pauli directions") {
  Rng rng(906);
  for (int n = 0; n < 25; ++n) {
    double angle = rng.uniform(-3.0, 3.0);
    cplx c(std::cos(angle), 0.0);
    cplx is(0.0, std::sin(angle));

    Mat2 e1 = exp_sigma(1, angle).matrix();
    CHECK(std::abs(e1(0, 0) - c) <= 1e-15);
    CHECK(std::abs(e1(0, 1) - is) <= 1e-15);

    Mat2 e2 = exp_sigma(2, angle).matrix();
    CHECK(std::abs(e2(0, 0) - c) <= 1e-15);
    CHECK(std::abs(e2(0, 1) - cplx(std::sin(angle), 0.0)) <= 1e-15);
    CHECK(std::abs(e2(1, 0) - cplx(-std::sin(angle), 0.0)) <= 1e-15);

    Mat2 e3 = exp_sigma(3, angle).matrix();
    CHECK(std::abs(e3(0, 0) - std::exp(cplx(0.0, angle))) <= 1e-15);
    CHECK(std::abs(e3(0, 1)) == 0.0);
    CHECK(std::abs(e3(1, 1) - std::exp(cplx(0.0, -angle))) <= 1e-15);
  }
}

TEST_CASE("antiunitary action on basis states") {
  AntiUnitary c{cplx(1.0, 0.0)};
  Vec2 e0 = {{cplx(1.0, 0.0), cplx(0.0, 0.0)}};
  Vec2 img = c.apply(e0);
  CHECK(std::abs(img[0]) == 0.0);
  CHECK(std::abs(img[1] - cplx(0.0, 1.0)) == 0.0);

  // Applying twice negates: the map squares to minus the identity.
  Rng rng(907);
  for (int n = 0; n < 20; ++n) {
    double a = rng.uniform(0.0, 2.0 * kPi);
    AntiUnitary cu{std::exp(cplx(0.0, a))};
    Vec2 v = random_vec2(rng);
    Vec2 twice = cu.apply(cu.apply(v));
    CHECK(std::abs(twice[0] + v[0]) <= 1e-14);
    CHECK(std::abs(twice[1] + v[1]) <= 1e-14);
  }
}

TEST_CASE("paired antiunitary squares to the identity") {
  Rng rng(908);
  for (int n = 0; n < 20; ++n) {
    AntiUnitary ca{std::exp(cplx(0.0, rng.uniform(0.0, 2.0 * kPi)))};
    AntiUnitary cb{std::exp(cplx(0.0, rng.uniform(0.0, 2.0 * kPi)))};
    Vec4 v = {{cplx(rng.gaussian(), rng.gaussian()), cplx(rng.gaussian(), rng.gaussian()),
               cplx(rng.gaussian(), rng.gaussian()), cplx(rng.gaussian(), rng.gaussian())}};
    Vec4 twice = apply_pair(ca, cb, apply_pair(ca, cb, v));
    CHECK(max_abs_diff(twice, v) <= 1e-14);
  }
}

TEST_CASE("paired projector is idempotent with antiunitary-fixed range") {
  Rng rng(909);
  for (int n = 0; n < 20; ++n) {
    AntiUnitary ca{std::exp(cplx(0.0, rng.uniform(0.0, 2.0 * kPi)))};
    AntiUnitary cb{std::exp(cplx(0.0, rng.uniform(0.0, 2.0 * kPi)))};
    Vec4 v = {{cplx(rng.gaussian(), rng.gaussian()), cplx(rng.gaussian(), rng.gaussian()),
               cplx(rng.gaussian(), rng.gaussian()), cplx(rng.gaussian(), rng.gaussian())}};
    Vec4 once = real_project(ca, cb, v);
    Vec4 again = real_project(ca, cb, once);
    CHECK(max_abs_diff(once, again) <= 1e-14);
    CHECK(max_abs_diff(apply_pair(ca, cb, once), once) <= 1e-14);
  }
}

TEST_CASE("generator streams are reproducible and splittable") {
  Rng a(7), b(7);
  for (int n = 0; n < 100; ++n) {
    CHECK(a.uniform() == b.uniform());
  }
  Rng c0 = Rng::child(5, 0);
  Rng c1 = Rng::child(5, 1);
  CHECK(c0.uniform() != c1.uniform());
  Rng g(11);
  for (int n = 0; n < 100; ++n) {
    double x = g.gaussian();
    CHECK(std::isfinite(x));
  }
}
