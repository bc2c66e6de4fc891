#include "toricnash/exact_linalg.hpp"

#include <algorithm>
#include <sstream>

namespace toricnash {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::RankMismatch: return "RankMismatch";
    case ErrorKind::NotStronglyConvex: return "NotStronglyConvex";
    case ErrorKind::NotInCone: return "NotInCone";
    case ErrorKind::NotSimplicial: return "NotSimplicial";
    case ErrorKind::NotRank2: return "NotRank2";
    case ErrorKind::NonSquare: return "NonSquare";
    case ErrorKind::NonSimplicialFan: return "NonSimplicialFan";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Integer ceil_div(const Integer& a, const Integer& b) { return -floor_div(-a, b); }

Integer floor(const Rational& q) {
  return floor_div(boost::multiprecision::numerator(q), boost::multiprecision::denominator(q));
}

Integer ceil(const Rational& q) {
  return ceil_div(boost::multiprecision::numerator(q), boost::multiprecision::denominator(q));
}

Rational frac(const Rational& q) { return q - Rational(floor(q)); }

Integer gcd(const Integer& a, const Integer& b) { return boost::multiprecision::gcd(a, b); }

Integer lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  return boost::multiprecision::abs(a / gcd(a, b) * b);
}

std::string to_string(const Rational& q) {
  const Integer& den = boost::multiprecision::denominator(q);
  if (den == 1) return boost::multiprecision::numerator(q).str();
  return boost::multiprecision::numerator(q).str() + "/" + den.str();
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(text));
    Integer num(text.substr(0, slash));
    Integer den(text.substr(slash + 1));
    if (den == 0) raise(ErrorKind::InvalidInput, "zero denominator in '" + text + "'");
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    raise(ErrorKind::InvalidInput, "not a rational number: '" + text + "'");
  }
}

// ---------------------------------------------------------------------------
// LatticeVector / DualVector

LatticeVector::LatticeVector(std::initializer_list<long long> coords) {
  coords_.reserve(coords.size());
  for (long long c : coords) coords_.emplace_back(c);
}

LatticeVector LatticeVector::unit(std::size_t rank, std::size_t i) {
  std::vector<Integer> c(rank);
  c.at(i) = 1;
  return LatticeVector(std::move(c));
}

bool LatticeVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Integer& c) { return c == 0; });
}

LatticeVector LatticeVector::operator-() const {
  std::vector<Integer> c(coords_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = -coords_[i];
  return LatticeVector(std::move(c));
}

LatticeVector operator+(const LatticeVector& a, const LatticeVector& b) {
  if (a.rank() != b.rank()) raise(ErrorKind::RankMismatch, "vector sum");
  std::vector<Integer> c(a.rank());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] + b[i];
  return LatticeVector(std::move(c));
}

LatticeVector operator-(const LatticeVector& a, const LatticeVector& b) {
  if (a.rank() != b.rank()) raise(ErrorKind::RankMismatch, "vector difference");
  std::vector<Integer> c(a.rank());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] - b[i];
  return LatticeVector(std::move(c));
}

LatticeVector operator*(const Integer& s, const LatticeVector& v) {
  std::vector<Integer> c(v.rank());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = s * v[i];
  return LatticeVector(std::move(c));
}

bool operator<(const LatticeVector& a, const LatticeVector& b) {
  if (a.rank() != b.rank()) return a.rank() < b.rank();
  for (std::size_t i = 0; i < a.rank(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

std::string LatticeVector::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords_.size(); ++i) os << (i ? "," : "") << coords_[i];
  os << ')';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LatticeVector& v) { return os << v.str(); }

DualVector::DualVector(const std::vector<Integer>& coords) {
  coords_.reserve(coords.size());
  for (const auto& c : coords) coords_.emplace_back(c);
}

Rational DualVector::operator()(const LatticeVector& v) const {
  if (v.rank() != rank()) raise(ErrorKind::RankMismatch, "functional evaluation");
  Rational s = 0;
  for (std::size_t i = 0; i < rank(); ++i) s += coords_[i] * v[i];
  return s;
}

Rational DualVector::operator()(std::span<const Rational> v) const {
  if (v.size() != rank()) raise(ErrorKind::RankMismatch, "functional evaluation");
  Rational s = 0;
  for (std::size_t i = 0; i < rank(); ++i) s += coords_[i] * v[i];
  return s;
}

std::string DualVector::str() const {
  std::ostringstream os;
  os << '<';
  for (std::size_t i = 0; i < coords_.size(); ++i) os << (i ? "," : "") << to_string(coords_[i]);
  os << '>';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const DualVector& m) { return os << m.str(); }

Integer dot(std::span<const Integer> a, std::span<const Integer> b) {
  if (a.size() != b.size()) raise(ErrorKind::RankMismatch, "dot product");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// ---------------------------------------------------------------------------
// Matrix

template <class T>
Matrix<T>::Matrix(std::initializer_list<std::initializer_list<long long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) raise(ErrorKind::InvalidInput, "ragged matrix literal");
    for (long long x : r) data_.emplace_back(x);
  }
}

template <class T>
Matrix<T> Matrix<T>::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

template <class T>
Matrix<T> Matrix<T>::from_rows(std::span<const LatticeVector> rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].rank() != cols) raise(ErrorKind::RankMismatch, "matrix row length");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = T(rows[i][j]);
  }
  return m;
}

template <class T>
Matrix<T> Matrix<T>::from_columns(std::span<const LatticeVector> cols, std::size_t rows) {
  Matrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].rank() != rows) raise(ErrorKind::RankMismatch, "matrix column length");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = T(cols[j][i]);
  }
  return m;
}

template <class T>
std::vector<T> Matrix<T>::row(std::size_t i) const {
  return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

template <class T>
std::vector<T> Matrix<T>::column(std::size_t j) const {
  std::vector<T> c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

template <class T>
void Matrix<T>::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

template <class T>
Matrix<T> Matrix<T>::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

template class Matrix<Integer>;
template class Matrix<Rational>;

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) raise(ErrorKind::RankMismatch, "matrix product");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

RatMatrix to_rational(const IntMatrix& a) {
  RatMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = Rational(a(i, j));
  return r;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& a) {
  os << '[';
  for (std::size_t i = 0; i < a.rows(); ++i) {
    os << (i ? "," : "") << '[';
    for (std::size_t j = 0; j < a.cols(); ++j) os << (j ? "," : "") << a(i, j);
    os << ']';
  }
  return os << ']';
}

// ---------------------------------------------------------------------------
// Integer normal forms

Integer content(std::span<const Integer> v) {
  Integer g = 0;
  for (const auto& c : v) {
    g = gcd(g, c);
    if (g == 1) break;
  }
  return g;
}

std::vector<Integer> primitive(std::span<const Integer> v) {
  Integer g = content(v);
  if (g == 0) raise(ErrorKind::ZeroVector, "primitive() of the zero vector");
  std::vector<Integer> out(v.begin(), v.end());
  if (g != 1)
    for (auto& c : out) c /= g;
  return out;
}

LatticeVector primitive(const LatticeVector& v) { return LatticeVector(primitive(std::span(v.coords()))); }

namespace {

void add_row_multiple(IntMatrix& m, std::size_t target, std::size_t source, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < m.cols(); ++j) m(target, j) -= factor * m(source, j);
}

void negate_row(IntMatrix& m, std::size_t r) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
}

}  // namespace

HnfResult hnf(const IntMatrix& a) {
  IntMatrix h = a;
  IntMatrix u = IntMatrix::identity(a.rows());
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < h.cols() && pivot_row < h.rows(); ++col) {
    bool have_pivot = false;
    while (true) {
      std::optional<std::size_t> best;
      for (std::size_t i = pivot_row; i < h.rows(); ++i) {
        if (h(i, col) == 0) continue;
        if (!best || boost::multiprecision::abs(h(i, col)) < boost::multiprecision::abs(h(*best, col))) best = i;
      }
      if (!best) break;
      have_pivot = true;
      h.swap_rows(pivot_row, *best);
      u.swap_rows(pivot_row, *best);
      bool cleared = true;
      for (std::size_t i = pivot_row + 1; i < h.rows(); ++i) {
        if (h(i, col) == 0) continue;
        Integer q = h(i, col) / h(pivot_row, col);
        add_row_multiple(h, i, pivot_row, q);
        add_row_multiple(u, i, pivot_row, q);
        if (h(i, col) != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (!have_pivot) continue;
    if (h(pivot_row, col) < 0) {
      negate_row(h, pivot_row);
      negate_row(u, pivot_row);
    }
    for (std::size_t i = 0; i < pivot_row; ++i) {
      Integer q = floor_div(h(i, col), h(pivot_row, col));
      add_row_multiple(h, i, pivot_row, q);
      add_row_multiple(u, i, pivot_row, q);
    }
    ++pivot_row;
  }
#ifndef NDEBUG
  invariant(u * a == h, "hnf: U*A != H");
  invariant(boost::multiprecision::abs(det(u)) == 1, "hnf: U not unimodular");
#endif
  return {std::move(h), std::move(u)};
}

std::vector<Integer> snf_divisors(const IntMatrix& a) {
  IntMatrix m = a;
  auto is_diagonal = [](const IntMatrix& x) {
    for (std::size_t i = 0; i < x.rows(); ++i)
      for (std::size_t j = 0; j < x.cols(); ++j)
        if (i != j && x(i, j) != 0) return false;
    return true;
  };
  // Alternating row and column Hermite reductions strictly decrease the
  // leading pivots until the matrix is diagonal.
  while (!is_diagonal(m)) m = hnf(m).h.transpose();

  std::vector<Integer> d;
  for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i)
    if (m(i, i) != 0) d.push_back(boost::multiprecision::abs(m(i, i)));
  // diag(a, b) is equivalent to diag(gcd, lcm).
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      Integer g = gcd(d[i], d[j]);
      Integer l = d[i] / g * d[j];
      d[i] = g;
      d[j] = l;
    }
  return d;
}

Integer det(const IntMatrix& a) {
  if (a.rows() != a.cols()) raise(ErrorKind::NonSquare, "det of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  IntMatrix m = a;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      m.swap_rows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

// ---------------------------------------------------------------------------
// Rational elimination

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& m, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(r, p);
    Rational inv = 1 / m(r, c);
    for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      Rational f = m(i, c);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const RatMatrix& a) {
  RatMatrix m = a;
  return rref(m, m.cols()).size();
}

std::size_t rank(const IntMatrix& a) {
  const HnfResult r = hnf(a);
  std::size_t k = 0;
  for (std::size_t i = 0; i < r.h.rows(); ++i) {
    auto row = r.h.row(i);
    if (std::any_of(row.begin(), row.end(), [](const Integer& x) { return x != 0; })) ++k;
  }
  return k;
}

std::size_t rank(std::span<const LatticeVector> vectors) {
  if (vectors.empty()) return 0;
  return rank(to_rational(IntMatrix::from_rows(vectors, vectors.front().rank())));
}

std::optional<std::vector<Rational>> solve_rational(const RatMatrix& a, std::span<const Rational> b) {
  if (b.size() != a.rows()) raise(ErrorKind::RankMismatch, "solve_rational: rhs length");
  RatMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  auto pivots = rref(aug, a.cols() + 1);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;  // inconsistent
  if (pivots.size() != a.cols()) return std::nullopt;                     // dependent columns
  std::vector<Rational> x(a.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, a.cols());
  return x;
}

std::optional<std::vector<Rational>> solve_rational(const IntMatrix& a, const LatticeVector& b) {
  std::vector<Rational> rhs(b.coords().begin(), b.coords().end());
  auto x = solve_rational(to_rational(a), rhs);
#ifndef NDEBUG
  if (x) {
    for (std::size_t i = 0; i < a.rows(); ++i) {
      Rational s = 0;
      for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * (*x)[j];
      invariant(s == rhs[i], "solve_rational: re-substitution failed");
    }
  }
#endif
  return x;
}

RatMatrix inverse(const RatMatrix& a) {
  if (a.rows() != a.cols()) raise(ErrorKind::NonSquare, "inverse of a non-square matrix");
  const std::size_t n = a.rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  auto pivots = rref(aug, n);
  if (pivots.size() != n) raise(ErrorKind::InvariantViolation, "inverse of a singular matrix");
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

IntMatrix inverse_unimodular(const IntMatrix& a) {
  RatMatrix inv = inverse(to_rational(a));
  IntMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      invariant(boost::multiprecision::denominator(inv(i, j)) == 1, "inverse_unimodular: not unimodular");
      out(i, j) = boost::multiprecision::numerator(inv(i, j));
    }
  return out;
}

// ---------------------------------------------------------------------------
// Sublattice

Sublattice Sublattice::span_of(std::span<const LatticeVector> generators, std::size_t ambient_rank) {
  Sublattice s;
  s.ambient_rank_ = ambient_rank;
  if (generators.empty()) {
    s.dim_ = 0;
    s.coords_ = IntMatrix::identity(ambient_rank);
  } else {
    // U * R^T = H with the nonzero rows of H on top: R = H^T * U^{-T}, so the
    // rows of R are combinations of the first rank(R) columns of U^{-1}.
    IntMatrix rt = IntMatrix::from_columns(generators, ambient_rank);
    HnfResult r = hnf(rt);
    std::size_t k = 0;
    for (std::size_t i = 0; i < r.h.rows(); ++i) {
      auto row = r.h.row(i);
      if (std::any_of(row.begin(), row.end(), [](const Integer& x) { return x != 0; })) ++k;
    }
    s.dim_ = k;
    s.coords_ = (k == ambient_rank) ? IntMatrix::identity(ambient_rank) : std::move(r.u);
  }
  IntMatrix inv = inverse_unimodular(s.coords_);
  for (std::size_t i = 0; i < s.dim_; ++i) s.basis_.emplace_back(inv.column(i));
  for (std::size_t i = s.dim_; i < ambient_rank; ++i) s.equations_.push_back(s.coords_.row(i));
  return s;
}

std::optional<LatticeVector> Sublattice::to_local(const LatticeVector& v) const {
  if (v.rank() != ambient_rank_) raise(ErrorKind::RankMismatch, "to_local");
  std::vector<Integer> local(dim_);
  for (std::size_t i = 0; i < ambient_rank_; ++i) {
    Integer c = 0;
    for (std::size_t j = 0; j < ambient_rank_; ++j) c += coords_(i, j) * v[j];
    if (i < dim_) {
      local[i] = std::move(c);
    } else if (c != 0) {
      return std::nullopt;
    }
  }
  return LatticeVector(std::move(local));
}

LatticeVector Sublattice::from_local(const LatticeVector& local) const {
  if (local.rank() != dim_) raise(ErrorKind::RankMismatch, "from_local");
  std::vector<Integer> v(ambient_rank_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < ambient_rank_; ++j) v[j] += local[i] * basis_[i][j];
  return LatticeVector(std::move(v));
}

std::vector<Integer> Sublattice::lift_functional(std::span<const Integer> local) const {
  if (local.size() != dim_) raise(ErrorKind::RankMismatch, "lift_functional");
  std::vector<Integer> m(ambient_rank_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < ambient_rank_; ++j) m[j] += local[i] * coords_(i, j);
  return m;
}

}  // namespace toricnash
