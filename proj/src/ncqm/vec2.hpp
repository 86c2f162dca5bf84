#pragma once

#include <cmath>

namespace ncqm {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  Vec2 operator-() const { return {-x, -y}; }
  Vec2 operator*(double s) const { return {s * x, s * y}; }
};

inline Vec2 operator*(double s, const Vec2& v) { return v * s; }

inline double dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }

/// Planar wedge a ^ b = a1 b2 - a2 b1.
inline double wedge(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }

/// Quarter-turn matrix J = [[0,-1],[1,0]] applied to v.
inline Vec2 jmat(const Vec2& v) { return {-v.y, v.x}; }

/// 2x2 rotation stored as an angle; reconstructed matrix is orthogonal by construction.
struct Rot2 {
  double angle = 0.0;

  Vec2 apply(const Vec2& v) const {
    const double c = std::cos(angle), s = std::sin(angle);
    return {c * v.x - s * v.y, s * v.x + c * v.y};
  }
  Rot2 inverse() const { return {-angle}; }
  Rot2 compose(const Rot2& o) const { return {angle + o.angle}; }
};

}  // namespace ncqm
