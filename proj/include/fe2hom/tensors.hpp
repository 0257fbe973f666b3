// Minimal dense tensor algebra for dimension-d continuum mechanics.
//
// Index convention (adopted project-wide): row-major. Tensor2(i,j) stores
// entries[i*d + j]; Tensor4(a,b,c,d) stores entries[((a*d+b)*d+c)*d + d].
// The spatial dimension d is a run-time value in {2,3}, fixed at
// construction. All values are immutable in spirit: operations return new
// values and never alias their inputs.
#pragma once

#include <array>
#include <cmath>
#include <initializer_list>

#include "fe2hom/errors.hpp"

namespace fe2hom {

inline void check_dim(int d) {
  if (d != 2 && d != 3) throw DimensionError("spatial dimension must be 2 or 3");
}

class Vec {
 public:
  explicit Vec(int dim) : d_(dim) { check_dim(dim); e_.fill(0.0); }
  Vec(double x, double y) : d_(2) { e_ = {x, y, 0.0}; }
  Vec(double x, double y, double z) : d_(3) { e_ = {x, y, z}; }

  int dim() const { return d_; }
  double operator[](int i) const { return e_[static_cast<std::size_t>(i)]; }
  double& operator[](int i) { return e_[static_cast<std::size_t>(i)]; }

  Vec operator+(const Vec& o) const {
    require_same_dim(o);
    Vec r(d_);
    for (int i = 0; i < d_; ++i) r[i] = e_[i] + o[i];
    return r;
  }
  Vec operator-(const Vec& o) const {
    require_same_dim(o);
    Vec r(d_);
    for (int i = 0; i < d_; ++i) r[i] = e_[i] - o[i];
    return r;
  }
  Vec operator*(double s) const {
    Vec r(d_);
    for (int i = 0; i < d_; ++i) r[i] = e_[i] * s;
    return r;
  }
  double dot(const Vec& o) const {
    require_same_dim(o);
    double s = 0.0;
    for (int i = 0; i < d_; ++i) s += e_[i] * o[i];
    return s;
  }
  double norm() const { return std::sqrt(dot(*this)); }

  void require_same_dim(const Vec& o) const {
    if (d_ != o.d_) throw DimensionError("vector dimension mismatch");
  }

 private:
  int d_;
  std::array<double, 3> e_;
};

inline Vec operator*(double s, const Vec& v) { return v * s; }

class Tensor2 {
 public:
  explicit Tensor2(int dim) : d_(dim) { check_dim(dim); e_.fill(0.0); }

  static Tensor2 identity(int dim) {
    Tensor2 t(dim);
    for (int i = 0; i < dim; ++i) t(i, i) = 1.0;
    return t;
  }

  int dim() const { return d_; }
  double operator()(int i, int j) const { return e_[static_cast<std::size_t>(i * d_ + j)]; }
  double& operator()(int i, int j) { return e_[static_cast<std::size_t>(i * d_ + j)]; }

  Tensor2 operator+(const Tensor2& o) const {
    require_same_dim(o);
    Tensor2 r(d_);
    for (int k = 0; k < d_ * d_; ++k) r.e_[k] = e_[k] + o.e_[k];
    return r;
  }
  Tensor2 operator-(const Tensor2& o) const {
    require_same_dim(o);
    Tensor2 r(d_);
    for (int k = 0; k < d_ * d_; ++k) r.e_[k] = e_[k] - o.e_[k];
    return r;
  }
  Tensor2 operator*(double s) const {
    Tensor2 r(d_);
    for (int k = 0; k < d_ * d_; ++k) r.e_[k] = e_[k] * s;
    return r;
  }
  Tensor2 operator*(const Tensor2& o) const {
    require_same_dim(o);
    Tensor2 r(d_);
    for (int i = 0; i < d_; ++i)
      for (int j = 0; j < d_; ++j) {
        double s = 0.0;
        for (int k = 0; k < d_; ++k) s += (*this)(i, k) * o(k, j);
        r(i, j) = s;
      }
    return r;
  }
  Vec operator*(const Vec& v) const {
    if (d_ != v.dim()) throw DimensionError("tensor/vector dimension mismatch");
    Vec r(d_);
    for (int i = 0; i < d_; ++i) {
      double s = 0.0;
      for (int j = 0; j < d_; ++j) s += (*this)(i, j) * v[j];
      r[i] = s;
    }
    return r;
  }

  Tensor2 transpose() const {
    Tensor2 r(d_);
    for (int i = 0; i < d_; ++i)
      for (int j = 0; j < d_; ++j) r(i, j) = (*this)(j, i);
    return r;
  }
  double trace() const {
    double s = 0.0;
    for (int i = 0; i < d_; ++i) s += (*this)(i, i);
    return s;
  }
  double norm() const {
    double s = 0.0;
    for (int k = 0; k < d_ * d_; ++k) s += e_[k] * e_[k];
    return std::sqrt(s);
  }

  void require_same_dim(const Tensor2& o) const {
    if (d_ != o.d_) throw DimensionError("tensor dimension mismatch");
  }

 private:
  int d_;
  std::array<double, 9> e_;
};

inline Tensor2 operator*(double s, const Tensor2& t) { return t * s; }

class Tensor4 {
 public:
  explicit Tensor4(int dim) : d_(dim) { check_dim(dim); e_.fill(0.0); }

  int dim() const { return d_; }
  double operator()(int a, int b, int c, int d) const {
    return e_[static_cast<std::size_t>(((a * d_ + b) * d_ + c) * d_ + d)];
  }
  double& operator()(int a, int b, int c, int d) {
    return e_[static_cast<std::size_t>(((a * d_ + b) * d_ + c) * d_ + d)];
  }

  Tensor4 operator+(const Tensor4& o) const {
    require_same_dim(o);
    Tensor4 r(d_);
    const int n = d_ * d_ * d_ * d_;
    for (int k = 0; k < n; ++k) r.e_[k] = e_[k] + o.e_[k];
    return r;
  }
  Tensor4 operator-(const Tensor4& o) const {
    require_same_dim(o);
    Tensor4 r(d_);
    const int n = d_ * d_ * d_ * d_;
    for (int k = 0; k < n; ++k) r.e_[k] = e_[k] - o.e_[k];
    return r;
  }
  Tensor4 operator*(double s) const {
    Tensor4 r(d_);
    const int n = d_ * d_ * d_ * d_;
    for (int k = 0; k < n; ++k) r.e_[k] = e_[k] * s;
    return r;
  }
  double max_abs() const {
    double m = 0.0;
    const int n = d_ * d_ * d_ * d_;
    for (int k = 0; k < n; ++k) m = std::max(m, std::abs(e_[k]));
    return m;
  }

  void require_same_dim(const Tensor4& o) const {
    if (d_ != o.d_) throw DimensionError("tensor dimension mismatch");
  }

 private:
  int d_;
  std::array<double, 81> e_;
};

// r[i][j] = a[i] * b[j]
inline Tensor2 outer(const Vec& a, const Vec& b) {
  a.require_same_dim(b);
  Tensor2 r(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < b.dim(); ++j) r(i, j) = a[i] * b[j];
  return r;
}

// r[a][b] = sum_{c,d} C[a][b][c][d] * A[c][d]
inline Tensor2 ddot42(const Tensor4& C, const Tensor2& A) {
  if (C.dim() != A.dim()) throw DimensionError("ddot42 dimension mismatch");
  const int d = A.dim();
  Tensor2 r(d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      double s = 0.0;
      for (int c = 0; c < d; ++c)
        for (int e = 0; e < d; ++e) s += C(a, b, c, e) * A(c, e);
      r(a, b) = s;
    }
  return r;
}

// Full scalar contraction A:B.
inline double ddot22(const Tensor2& A, const Tensor2& B) {
  A.require_same_dim(B);
  double s = 0.0;
  for (int i = 0; i < A.dim(); ++i)
    for (int j = 0; j < A.dim(); ++j) s += A(i, j) * B(i, j);
  return s;
}

struct DetInv {
  double J;
  Tensor2 Finv;
};

// Determinant and inverse of F. Throws GeometryError on det(F) <= 0, which
// signals an inverted element.
inline DetInv det_inv(const Tensor2& F) {
  const int d = F.dim();
  double J;
  Tensor2 inv(d);
  if (d == 2) {
    J = F(0, 0) * F(1, 1) - F(0, 1) * F(1, 0);
    if (!(J > 0.0)) throw GeometryError("non-positive determinant (inverted element)");
    inv(0, 0) = F(1, 1) / J;
    inv(0, 1) = -F(0, 1) / J;
    inv(1, 0) = -F(1, 0) / J;
    inv(1, 1) = F(0, 0) / J;
  } else {
    J = F(0, 0) * (F(1, 1) * F(2, 2) - F(1, 2) * F(2, 1)) -
        F(0, 1) * (F(1, 0) * F(2, 2) - F(1, 2) * F(2, 0)) +
        F(0, 2) * (F(1, 0) * F(2, 1) - F(1, 1) * F(2, 0));
    if (!(J > 0.0)) throw GeometryError("non-positive determinant (inverted element)");
    inv(0, 0) = (F(1, 1) * F(2, 2) - F(1, 2) * F(2, 1)) / J;
    inv(0, 1) = (F(0, 2) * F(2, 1) - F(0, 1) * F(2, 2)) / J;
    inv(0, 2) = (F(0, 1) * F(1, 2) - F(0, 2) * F(1, 1)) / J;
    inv(1, 0) = (F(1, 2) * F(2, 0) - F(1, 0) * F(2, 2)) / J;
    inv(1, 1) = (F(0, 0) * F(2, 2) - F(0, 2) * F(2, 0)) / J;
    inv(1, 2) = (F(0, 2) * F(1, 0) - F(0, 0) * F(1, 2)) / J;
    inv(2, 0) = (F(1, 0) * F(2, 1) - F(1, 1) * F(2, 0)) / J;
    inv(2, 1) = (F(0, 1) * F(2, 0) - F(0, 0) * F(2, 1)) / J;
    inv(2, 2) = (F(0, 0) * F(1, 1) - F(0, 1) * F(1, 0)) / J;
  }
  return {J, inv};
}

// Cauchy stress from first Piola-Kirchhoff stress: sigma = (1/J) P F^T.
inline Tensor2 piola_to_cauchy(const Tensor2& P, const Tensor2& F) {
  P.require_same_dim(F);
  const auto di = det_inv(F);  // validates det(F) > 0
  return (P * F.transpose()) * (1.0 / di.J);
}

}  // namespace fe2hom
