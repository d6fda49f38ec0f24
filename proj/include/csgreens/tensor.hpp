#pragma once

#include <array>
#include <cmath>
#include <cstddef>

namespace csg {

/// Fixed-size vector with value semantics. N is 2 or 3.
template <int N>
struct Vec {
  std::array<double, N> c{};

  double& operator[](int i) { return c[static_cast<std::size_t>(i)]; }
  double operator[](int i) const { return c[static_cast<std::size_t>(i)]; }

  Vec& operator+=(const Vec& o) {
    for (int i = 0; i < N; ++i) c[i] += o.c[i];
    return *this;
  }
  Vec& operator-=(const Vec& o) {
    for (int i = 0; i < N; ++i) c[i] -= o.c[i];
    return *this;
  }
  Vec& operator*=(double s) {
    for (int i = 0; i < N; ++i) c[i] *= s;
    return *this;
  }

  friend Vec operator+(Vec a, const Vec& b) { return a += b; }
  friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
  friend Vec operator*(double s, Vec a) { return a *= s; }
  friend Vec operator*(Vec a, double s) { return a *= s; }
  friend Vec operator-(Vec a) { return a *= -1.0; }
};

using Vec2 = Vec<2>;
using Vec3 = Vec<3>;

/// Fixed-size square matrix, row-major storage.
template <int N>
struct Mat {
  std::array<double, N * N> c{};

  double& operator()(int r, int col) { return c[static_cast<std::size_t>(r * N + col)]; }
  double operator()(int r, int col) const { return c[static_cast<std::size_t>(r * N + col)]; }

  Mat& operator+=(const Mat& o) {
    for (int i = 0; i < N * N; ++i) c[i] += o.c[i];
    return *this;
  }
  Mat& operator-=(const Mat& o) {
    for (int i = 0; i < N * N; ++i) c[i] -= o.c[i];
    return *this;
  }
  Mat& operator*=(double s) {
    for (int i = 0; i < N * N; ++i) c[i] *= s;
    return *this;
  }
  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator*(double s, Mat a) { return a *= s; }
};

using Mat2 = Mat<2>;
using Mat3 = Mat<3>;

/// Rank-3 tensor T(j,i,q); first index contracts with a surface normal.
template <int N>
struct Ten3 {
  std::array<double, N * N * N> c{};

  double& operator()(int j, int i, int q) {
    return c[static_cast<std::size_t>((j * N + i) * N + q)];
  }
  double operator()(int j, int i, int q) const {
    return c[static_cast<std::size_t>((j * N + i) * N + q)];
  }
};

using Ten32 = Ten3<2>;
using Ten33 = Ten3<3>;

template <int N>
inline double dot(const Vec<N>& a, const Vec<N>& b) {
  double s = 0.0;
  for (int i = 0; i < N; ++i) s += a[i] * b[i];
  return s;
}

template <int N>
inline double norm(const Vec<N>& a) {
  return std::sqrt(dot(a, a));
}

inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
           a[0] * b[1] - a[1] * b[0]}};
}

/// Alternating symbols and the Kronecker delta (0-based indices).
constexpr double levi3(int i, int j, int k) {
  return static_cast<double>((i - j) * (j - k) * (k - i)) / 2.0;
}

constexpr double levi2(int a, int b) { return levi3(a, b, 2); }

constexpr double kron(int i, int j) { return i == j ? 1.0 : 0.0; }

template <int N>
inline Mat<N> symmetric_part(const Mat<N>& m) {
  Mat<N> s;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) s(i, j) = 0.5 * (m(i, j) + m(j, i));
  return s;
}

template <int N>
inline Mat<N> skew_part(const Mat<N>& m) {
  Mat<N> s;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) s(i, j) = 0.5 * (m(i, j) - m(j, i));
  return s;
}

template <int N>
inline double trace(const Mat<N>& m) {
  double t = 0.0;
  for (int i = 0; i < N; ++i) t += m(i, i);
  return t;
}

template <int N>
inline double max_abs(const Mat<N>& m) {
  double v = 0.0;
  for (double e : m.c) v = std::max(v, std::abs(e));
  return v;
}

template <int N>
inline double max_abs(const Vec<N>& a) {
  double v = 0.0;
  for (double e : a.c) v = std::max(v, std::abs(e));
  return v;
}

template <int N>
inline double max_abs(const Ten3<N>& t) {
  double v = 0.0;
  for (double e : t.c) v = std::max(v, std::abs(e));
  return v;
}

}  // namespace csg
