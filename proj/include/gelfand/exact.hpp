#pragma once

#include <complex>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace gelfand {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

// a + ib with a, b rational.
struct GaussRational {
  Rational re{0};
  Rational im{0};

  GaussRational() = default;
  GaussRational(Rational r) : re(std::move(r)) {}  // NOLINT implicit
  GaussRational(int r) : re(r) {}                  // NOLINT implicit
  GaussRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re == 0 && im == 0; }

  GaussRational& operator+=(const GaussRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussRational& operator-=(const GaussRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussRational& operator*=(const GaussRational& o) {
    Rational r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
};

inline GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
inline GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
inline GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
inline GaussRational operator-(const GaussRational& a) { return {-a.re, -a.im}; }
inline bool operator==(const GaussRational& a, const GaussRational& b) {
  return a.re == b.re && a.im == b.im;
}
inline GaussRational conj(const GaussRational& a) { return {a.re, -a.im}; }
inline Rational norm2(const GaussRational& a) { return a.re * a.re + a.im * a.im; }
GaussRational inverse(const GaussRational& a);
inline GaussRational operator/(const GaussRational& a, const GaussRational& b) {
  return a * inverse(b);
}

std::complex<double> to_complex(const GaussRational& a);
double to_double(const Rational& q);
// Exact conversion: every finite double is a dyadic rational.
Rational exact_rational(double x);

Integer binomial(int n, int k);

// Row-major dense matrix over an arbitrary ring; used for the exact paths
// where Eigen's scalar requirements get in the way.
template <class T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(std::size_t(rows) * cols, T(0)) {}

  static DenseMatrix identity(int size) {
    DenseMatrix m(size, size);
    for (int i = 0; i < size; ++i) m(i, i) = T(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  T& operator()(int i, int j) { return data_[std::size_t(i) * cols_ + j]; }
  const T& operator()(int i, int j) const { return data_[std::size_t(i) * cols_ + j]; }

  DenseMatrix operator*(const DenseMatrix& o) const {
    DenseMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const T& a = (*this)(i, k);
        if (a == T(0)) continue;
        for (int j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
      }
    return r;
  }
  DenseMatrix operator+(const DenseMatrix& o) const {
    DenseMatrix r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
    return r;
  }
  DenseMatrix operator-(const DenseMatrix& o) const {
    DenseMatrix r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
    return r;
  }
  DenseMatrix scaled(const T& s) const {
    DenseMatrix r = *this;
    for (auto& v : r.data_) v *= s;
    return r;
  }
  bool operator==(const DenseMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> data_;
};

using ExactMatrix = DenseMatrix<GaussRational>;
using RationalMatrix = DenseMatrix<Rational>;

ExactMatrix adjoint(const ExactMatrix& m);

// Inverse of a square rational matrix by exact Gauss-Jordan; throws
// InvalidArgument when singular.
RationalMatrix inverse(const RationalMatrix& m);

}  // namespace gelfand
