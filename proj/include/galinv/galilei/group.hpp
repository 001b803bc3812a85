#pragma once

#include <array>

#include "galinv/exact/complex_rational.hpp"
#include "galinv/exact/vpoly.hpp"

namespace galinv {

template <class S>
using Vec3T = std::array<S, 3>;
template <class S>
using Mat3T = std::array<Vec3T<S>, 3>;

using Vec3 = Vec3T<Rational>;
using Mat3 = Mat3T<Rational>;

template <class S>
Mat3T<S> mat3_identity() {
  Mat3T<S> m{};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) m[i][j] = S(i == j ? 1 : 0);
  }
  return m;
}

template <class S>
Mat3T<S> mat3_mul(const Mat3T<S>& a, const Mat3T<S>& b) {
  Mat3T<S> out{};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      S acc(0);
      for (std::size_t k = 0; k < 3; ++k) acc += a[i][k] * b[k][j];
      out[i][j] = acc;
    }
  }
  return out;
}

template <class S>
Mat3T<S> mat3_transpose(const Mat3T<S>& a) {
  Mat3T<S> out{};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) out[i][j] = a[j][i];
  }
  return out;
}

template <class S>
Vec3T<S> mat3_apply(const Mat3T<S>& a, const Vec3T<S>& x) {
  Vec3T<S> out{};
  for (std::size_t i = 0; i < 3; ++i) {
    S acc(0);
    for (std::size_t k = 0; k < 3; ++k) acc += a[i][k] * x[k];
    out[i] = acc;
  }
  return out;
}

template <class S>
Vec3T<S> vec3_add(const Vec3T<S>& x, const Vec3T<S>& y) {
  return {S(x[0] + y[0]), S(x[1] + y[1]), S(x[2] + y[2])};
}

template <class S>
Vec3T<S> vec3_scale(const S& s, const Vec3T<S>& x) {
  return {S(s * x[0]), S(s * x[1]), S(s * x[2])};
}

template <class S>
S vec3_dot(const Vec3T<S>& x, const Vec3T<S>& y) {
  S acc(0);
  for (std::size_t i = 0; i < 3; ++i) acc += x[i] * y[i];
  return acc;
}

Rational det3(const Mat3& m);

/// Element (R, v, a, b) of the proper isochronous Galilei group.
/// R rotation, v boost velocity, a space translation, b time translation.
template <class S>
struct GalileiElementT {
  Mat3T<S> R = mat3_identity<S>();
  Vec3T<S> v{S(0), S(0), S(0)};
  Vec3T<S> a{S(0), S(0), S(0)};
  S b{0};

  static GalileiElementT identity() { return {}; }
  static GalileiElementT boost(const Vec3T<S>& vel) {
    GalileiElementT g;
    g.v = vel;
    return g;
  }
  static GalileiElementT rotation(const Mat3T<S>& rot) {
    GalileiElementT g;
    g.R = rot;
    return g;
  }

  friend bool operator==(const GalileiElementT&, const GalileiElementT&) = default;
};

using GalileiElement = GalileiElementT<Rational>;
/// Same element with polynomial (symbolic-velocity) components.
using SymbolicGalileiElement = GalileiElementT<VPoly>;

/// g2 * g1 = (R2 a1 + a2 - v2 b1, b1 + b2, R2 v1 + v2, R2 R1).
template <class S>
GalileiElementT<S> compose(const GalileiElementT<S>& g2, const GalileiElementT<S>& g1) {
  GalileiElementT<S> g;
  g.R = mat3_mul(g2.R, g1.R);
  g.v = vec3_add(mat3_apply(g2.R, g1.v), g2.v);
  const Vec3T<S> ra = mat3_apply(g2.R, g1.a);
  for (std::size_t i = 0; i < 3; ++i) g.a[i] = ra[i] + g2.a[i] - g2.v[i] * g1.b;
  g.b = g1.b + g2.b;
  return g;
}

/// Two-sided inverse under compose(): (R^T, -R^T v, -R^T (a + v b), -b).
/// Requires R orthogonal.
template <class S>
GalileiElementT<S> inverse(const GalileiElementT<S>& g) {
  GalileiElementT<S> h;
  h.R = mat3_transpose(g.R);
  const Vec3T<S> rv = mat3_apply(h.R, g.v);
  Vec3T<S> shifted{};
  for (std::size_t i = 0; i < 3; ++i) shifted[i] = g.a[i] + g.v[i] * g.b;
  const Vec3T<S> rs = mat3_apply(h.R, shifted);
  for (std::size_t i = 0; i < 3; ++i) {
    h.v[i] = -rv[i];
    h.a[i] = -rs[i];
  }
  h.b = -g.b;
  return h;
}

/// R^T R = I and det R = +1.
bool is_valid(const GalileiElement& g);

/// Rational quaternion (w, x, y, z); represents the rotation by angle theta
/// about n with (w, x, y, z) proportional to (cos theta/2, sin theta/2 n).
struct Quaternion {
  Rational w{1}, x{0}, y{0}, z{0};
  Rational norm2() const { return w * w + x * x + y * y + z * z; }
};

/// Active rotation matrix of a nonzero quaternion (entries rational).
Mat3 rotation_from_quaternion(const Quaternion& q);

/// Quaternion mapping to R (up to the sign ambiguity of SU(2)), scaled so the
/// component it is computed from equals 1; the identity gives (1, 0, 0, 0).
Quaternion quaternion_from_rotation(const Mat3& R);

}  // namespace galinv
