#pragma once

#include "core/cmat.hpp"

namespace ewl {

// Antiunitary map v -> eta * sigma2 * conj(v). Antilinear, so it is applied
// as an operation rather than materialized as a matrix.
struct AntiUnitary {
  cplx eta{1.0};
  Vec2 apply(const Vec2& v) const;
};

// (C_a (x) C_b) v: conjugate every component, apply sigma2 (x) sigma2, scale
// by eta_a * eta_b.
Vec4 apply_pair(const AntiUnitary& a, const AntiUnitary& b, const Vec4& v);

// (1/2)(1 + C_a (x) C_b) v.
Vec4 real_project(const AntiUnitary& a, const AntiUnitary& b, const Vec4& v);

}  // namespace ewl
