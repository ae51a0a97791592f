#include "core/antiunitary.hpp"

namespace ewl {

Vec2 AntiUnitary::apply(const Vec2& v) const {
  // sigma2 * conj(v) = (-i conj(v1), i conj(v0)).
  cplx c0 = std::conj(v[0]);
  cplx c1 = std::conj(v[1]);
  return {{eta * cplx(0.0, -1.0) * c1, eta * cplx(0.0, 1.0) * c0}};
}

Vec4 apply_pair(const AntiUnitary& a, const AntiUnitary& b, const Vec4& v) {
  Vec4 cv = conj(v);
  Mat4 s22 = tensor(sigma2(), sigma2());
  return (a.eta * b.eta) * (s22 * cv);
}

Vec4 real_project(const AntiUnitary& a, const AntiUnitary& b, const Vec4& v) {
  Vec4 cc = apply_pair(a, b, v);
  return 0.5 * (v + cc);
}

}  // namespace ewl
