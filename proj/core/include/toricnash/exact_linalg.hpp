#pragma once

// Exact integer and rational linear algebra. Everything here is arbitrary
// precision; no operation ever rounds.

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "toricnash/errors.hpp"

namespace toricnash {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

Integer floor_div(const Integer& a, const Integer& b);
Integer ceil_div(const Integer& a, const Integer& b);
Integer floor(const Rational& q);
Integer ceil(const Rational& q);
Rational frac(const Rational& q);
Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);
Rational parse_rational(const std::string& text);

/// A point of the lattice N = Z^n.
class LatticeVector {
 public:
  LatticeVector() = default;
  explicit LatticeVector(std::vector<Integer> coords) : coords_(std::move(coords)) {}
  LatticeVector(std::initializer_list<long long> coords);

  static LatticeVector zero(std::size_t rank) { return LatticeVector(std::vector<Integer>(rank)); }
  static LatticeVector unit(std::size_t rank, std::size_t i);

  std::size_t rank() const noexcept { return coords_.size(); }
  const Integer& operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<Integer>& coords() const noexcept { return coords_; }
  bool is_zero() const;

  LatticeVector operator-() const;
  friend LatticeVector operator+(const LatticeVector& a, const LatticeVector& b);
  friend LatticeVector operator-(const LatticeVector& a, const LatticeVector& b);
  friend LatticeVector operator*(const Integer& s, const LatticeVector& v);

  friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
  // Lexicographic on coordinates; shorter vectors first.
  friend bool operator<(const LatticeVector& a, const LatticeVector& b);

  std::string str() const;

 private:
  std::vector<Integer> coords_;
};

std::ostream& operator<<(std::ostream& os, const LatticeVector& v);

/// A functional on N with rational coefficients, i.e. an element of M_Q.
class DualVector {
 public:
  DualVector() = default;
  explicit DualVector(std::vector<Rational> coords) : coords_(std::move(coords)) {}
  explicit DualVector(const std::vector<Integer>& coords);
  DualVector(std::initializer_list<Rational> coords) : coords_(coords) {}

  std::size_t rank() const noexcept { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<Rational>& coords() const noexcept { return coords_; }

  Rational operator()(const LatticeVector& v) const;
  Rational operator()(std::span<const Rational> v) const;

  friend bool operator==(const DualVector&, const DualVector&) = default;
  std::string str() const;

 private:
  std::vector<Rational> coords_;
};

std::ostream& operator<<(std::ostream& os, const DualVector& m);

Integer dot(std::span<const Integer> a, std::span<const Integer> b);
inline Integer dot(std::span<const Integer> a, const LatticeVector& v) { return dot(a, std::span(v.coords())); }

/// Dense row-major matrix over Integer or Rational.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<long long>> rows);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(std::span<const LatticeVector> rows, std::size_t cols);
  static Matrix from_columns(std::span<const LatticeVector> cols, std::size_t rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> row(std::size_t i) const;
  std::vector<T> column(std::size_t j) const;
  void swap_rows(std::size_t a, std::size_t b);
  Matrix transpose() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
RatMatrix to_rational(const IntMatrix& a);
std::ostream& operator<<(std::ostream& os, const IntMatrix& a);

/// Divides by the coordinate gcd. Never flips the sign.
LatticeVector primitive(const LatticeVector& v);
std::vector<Integer> primitive(std::span<const Integer> v);
Integer content(std::span<const Integer> v);

struct HnfResult {
  IntMatrix h;  // row Hermite normal form
  IntMatrix u;  // unimodular, h = u * a
};

/// Row Hermite normal form. Pivots are positive, entries above a pivot are
/// reduced into [0, pivot), zero rows sink to the bottom. The pivot row in a
/// column is always the lowest-index row among those of least absolute value.
HnfResult hnf(const IntMatrix& a);

/// Nonzero elementary divisors d_1 | d_2 | ... of a.
std::vector<Integer> snf_divisors(const IntMatrix& a);

Integer det(const IntMatrix& a);
std::size_t rank(const IntMatrix& a);
std::size_t rank(const RatMatrix& a);
std::size_t rank(std::span<const LatticeVector> vectors);

/// Solves a * x = b when the columns of a are independent and the system is
/// consistent; otherwise returns nullopt.
std::optional<std::vector<Rational>> solve_rational(const IntMatrix& a, const LatticeVector& b);
std::optional<std::vector<Rational>> solve_rational(const RatMatrix& a, std::span<const Rational> b);

/// Inverse of a nonsingular square matrix.
RatMatrix inverse(const RatMatrix& a);
/// Inverse of a unimodular matrix; throws InvariantViolation otherwise.
IntMatrix inverse_unimodular(const IntMatrix& a);

/// The saturated sublattice span(generators) ∩ Z^n together with a
/// unimodular change of coordinates that puts it on the first dim() axes.
class Sublattice {
 public:
  Sublattice() = default;
  static Sublattice span_of(std::span<const LatticeVector> generators, std::size_t ambient_rank);

  std::size_t ambient_rank() const noexcept { return ambient_rank_; }
  std::size_t dim() const noexcept { return dim_; }
  bool is_full() const noexcept { return dim_ == ambient_rank_; }

  /// Coordinates with respect to basis(); nullopt when v is off the span.
  std::optional<LatticeVector> to_local(const LatticeVector& v) const;
  LatticeVector from_local(const LatticeVector& local) const;
  /// An integral functional on Z^n restricting to the given local one.
  std::vector<Integer> lift_functional(std::span<const Integer> local) const;

  const std::vector<LatticeVector>& basis() const noexcept { return basis_; }
  /// Integral functionals cutting out the span.
  const std::vector<std::vector<Integer>>& equations() const noexcept { return equations_; }

 private:
  std::size_t ambient_rank_ = 0;
  std::size_t dim_ = 0;
  IntMatrix coords_;  // unimodular; row i of coords_ gives local coordinate i
  std::vector<LatticeVector> basis_;
  std::vector<std::vector<Integer>> equations_;
};

}  // namespace toricnash
