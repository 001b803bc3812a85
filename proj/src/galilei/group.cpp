#include "galinv/galilei/group.hpp"

#include <stdexcept>

namespace galinv {

Rational det3(const Mat3& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

bool is_valid(const GalileiElement& g) {
  return mat3_mul(mat3_transpose(g.R), g.R) == mat3_identity<Rational>() && det3(g.R) == 1;
}

Mat3 rotation_from_quaternion(const Quaternion& q) {
  const Rational n = q.norm2();
  if (n == 0) throw std::invalid_argument("zero quaternion has no rotation");
  const Rational &w = q.w, &x = q.x, &y = q.y, &z = q.z;
  Mat3 r{};
  r[0][0] = (w * w + x * x - y * y - z * z) / n;
  r[0][1] = 2 * (x * y - w * z) / n;
  r[0][2] = 2 * (x * z + w * y) / n;
  r[1][0] = 2 * (x * y + w * z) / n;
  r[1][1] = (w * w - x * x + y * y - z * z) / n;
  r[1][2] = 2 * (y * z - w * x) / n;
  r[2][0] = 2 * (x * z - w * y) / n;
  r[2][1] = 2 * (y * z + w * x) / n;
  r[2][2] = (w * w - x * x - y * y + z * z) / n;
  return r;
}

Quaternion quaternion_from_rotation(const Mat3& R) {
  // Each candidate equals 4*c/|q|^2 * (w, x, y, z) for the component c it is keyed on;
  // dividing by the key makes that component 1.
  auto unit = [](const Rational& key, Quaternion q) {
    for (Rational* c : {&q.w, &q.x, &q.y, &q.z}) *c /= key;
    return q;
  };
  const Rational tw = 1 + R[0][0] + R[1][1] + R[2][2];
  if (tw != 0) return unit(tw, {tw, R[2][1] - R[1][2], R[0][2] - R[2][0], R[1][0] - R[0][1]});
  const Rational tx = 1 + R[0][0] - R[1][1] - R[2][2];
  if (tx != 0) return unit(tx, {R[2][1] - R[1][2], tx, R[0][1] + R[1][0], R[0][2] + R[2][0]});
  const Rational ty = 1 - R[0][0] + R[1][1] - R[2][2];
  if (ty != 0) return unit(ty, {R[0][2] - R[2][0], R[0][1] + R[1][0], ty, R[1][2] + R[2][1]});
  const Rational tz = 1 - R[0][0] - R[1][1] + R[2][2];
  if (tz != 0) return unit(tz, {R[1][0] - R[0][1], R[0][2] + R[2][0], R[1][2] + R[2][1], tz});
  throw std::invalid_argument("matrix is not a rotation");
}

}  // namespace galinv
