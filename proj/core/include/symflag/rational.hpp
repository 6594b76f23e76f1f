#pragma once

// Exact rational scalars, vectors and small dense matrices.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace symflag {

using Rational = mpq_class;
using Integer = mpz_class;

/// Dense column vector over Q.
using Vector = std::vector<Rational>;

/// Row-major square or rectangular matrix over Q.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector row(std::size_t i) const;
  Vector column(std::size_t j) const;

  Matrix transpose() const;
  bool is_symmetric() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, const Vector& v);
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator<(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator-(const Vector& a);
Vector operator*(const Rational& s, const Vector& v);

Vector zero_vector(std::size_t n);
bool is_zero(const Vector& v);

/// Plain coordinate dot product (no metric).
Rational dot(const Vector& a, const Vector& b);

/// Greatest integer not exceeding x.
Integer floor_of(const Rational& x);
/// x - floor(x), in [0, 1).
Rational frac(const Rational& x);
bool is_integer(const Rational& x);

Rational determinant(const Matrix& m);
/// Throws std::domain_error when m is singular.
Matrix inverse(const Matrix& m);
/// Solves m x = b exactly; throws std::domain_error when m is singular.
Vector solve(const Matrix& m, const Vector& b);
std::size_t matrix_rank(const Matrix& m);
/// Basis of {x : m x = 0}, one vector per free column of the reduced echelon form.
std::vector<Vector> null_space(const Matrix& m);

/// True when every leading principal minor is strictly positive.
bool is_positive_definite(const Matrix& m);

/// Parses "p", "-p", "p/q". Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);
/// Canonical "p/q" text ("p" when the denominator is 1).
std::string to_string(const Rational& x);
std::string to_string(const Vector& v);
std::string to_string(const std::vector<std::int64_t>& coords);

double to_double(const Rational& x);

}  // namespace symflag
