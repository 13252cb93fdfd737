#include "toriq/exact_linalg.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "toriq/error.hpp"

namespace toriq {

// ---------------------------------------------------------------------------
// LatticeVector

LatticeVector::LatticeVector(std::initializer_list<long> entries) {
  entries_.reserve(entries.size());
  for (long x : entries) entries_.emplace_back(x);
}

LatticeVector LatticeVector::unit(std::size_t n, std::size_t i) {
  LatticeVector v(n);
  v[i] = 1;
  return v;
}

bool LatticeVector::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Integer& x) { return sgn(x) == 0; });
}

Integer LatticeVector::content() const {
  Integer g = 0;
  for (const auto& x : entries_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

static void check_same_size(const LatticeVector& a, const LatticeVector& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::DimensionMismatch,
                "vector length mismatch: " + std::to_string(a.size()) +
                    " vs " + std::to_string(b.size()));
  }
}

LatticeVector& LatticeVector::operator+=(const LatticeVector& o) {
  check_same_size(*this, o);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
  return *this;
}

LatticeVector& LatticeVector::operator-=(const LatticeVector& o) {
  check_same_size(*this, o);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
  return *this;
}

LatticeVector& LatticeVector::operator*=(const Integer& k) {
  for (auto& x : entries_) x *= k;
  return *this;
}

LatticeVector LatticeVector::operator-() const {
  LatticeVector r = *this;
  for (auto& x : r.entries_) x = -x;
  return r;
}

bool operator==(const LatticeVector& a, const LatticeVector& b) {
  return a.entries_ == b.entries_;
}

std::strong_ordering operator<=>(const LatticeVector& a, const LatticeVector& b) {
  if (a.size() != b.size()) return a.size() <=> b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    int c = cmp(a[i], b[i]);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string LatticeVector::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LatticeVector& v) {
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  return os << ')';
}

Integer dot(const LatticeVector& a, const LatticeVector& b) {
  check_same_size(a, b);
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    mpz_addmul(s.get_mpz_t(), a[i].get_mpz_t(), b[i].get_mpz_t());
  }
  return s;
}

LatticeVector primitive(const LatticeVector& v) {
  Integer g = v.content();
  if (g == 0 || g == 1) return v;
  LatticeVector r = v;
  for (std::size_t i = 0; i < r.size(); ++i) {
    mpz_divexact(r[i].get_mpz_t(), r[i].get_mpz_t(), g.get_mpz_t());
  }
  return r;
}

RationalVector to_rational(const LatticeVector& v) {
  RationalVector r;
  r.reserve(v.size());
  for (const auto& x : v) r.emplace_back(x);
  return r;
}

// ---------------------------------------------------------------------------
// LatticeMatrix

LatticeMatrix::LatticeMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) {
      throw Error(ErrorCode::DimensionMismatch, "ragged matrix literal");
    }
    for (long x : r) data_.emplace_back(x);
  }
}

LatticeMatrix LatticeMatrix::identity(std::size_t n) {
  LatticeMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

LatticeMatrix LatticeMatrix::from_rows(std::span<const LatticeVector> rows,
                                       std::size_t cols) {
  LatticeMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) {
      throw Error(ErrorCode::DimensionMismatch, "row length mismatch");
    }
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

LatticeMatrix LatticeMatrix::from_columns(std::span<const LatticeVector> cols,
                                          std::size_t rows) {
  LatticeMatrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) {
      throw Error(ErrorCode::DimensionMismatch, "column length mismatch");
    }
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

LatticeVector LatticeMatrix::row(std::size_t i) const {
  LatticeVector v(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
  return v;
}

LatticeVector LatticeMatrix::column(std::size_t j) const {
  LatticeVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

std::vector<LatticeVector> LatticeMatrix::row_vectors() const {
  std::vector<LatticeVector> r;
  r.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) r.push_back(row(i));
  return r;
}

std::vector<LatticeVector> LatticeMatrix::column_vectors() const {
  std::vector<LatticeVector> r;
  r.reserve(cols_);
  for (std::size_t j = 0; j < cols_; ++j) r.push_back(column(j));
  return r;
}

LatticeMatrix LatticeMatrix::transpose() const {
  LatticeMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool LatticeMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const Integer& x) { return sgn(x) == 0; });
}

bool LatticeMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i != j && sgn((*this)(i, j)) != 0) return false;
  return true;
}

LatticeMatrix operator*(const LatticeMatrix& a, const LatticeMatrix& b) {
  if (a.cols_ != b.rows_) {
    throw Error(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
  }
  LatticeMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        mpz_addmul(c(i, j).get_mpz_t(), aik.get_mpz_t(), b(k, j).get_mpz_t());
      }
    }
  return c;
}

LatticeVector operator*(const LatticeMatrix& a, const LatticeVector& v) {
  if (a.cols_ != v.size()) {
    throw Error(ErrorCode::DimensionMismatch, "matrix-vector shape mismatch");
  }
  LatticeVector r(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j)
      mpz_addmul(r[i].get_mpz_t(), a(i, j).get_mpz_t(), v[j].get_mpz_t());
  return r;
}

std::ostream& operator<<(std::ostream& os, const LatticeMatrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) os << ';';
    os << m.row(i);
  }
  return os << ']';
}

// ---------------------------------------------------------------------------
// Determinant, rank, inverse

Integer determinant(const LatticeMatrix& a) {
  if (a.rows() != a.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "determinant of non-square matrix");
  }
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  LatticeMatrix m = a;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(m(k, k)) == 0) {
      std::size_t p = k + 1;
      while (p < n && sgn(m(p, k)) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::size_t rank(const LatticeMatrix& a) {
  LatticeMatrix m = a;
  std::size_t r = 0;
  for (std::size_t j = 0; j < m.cols() && r < m.rows(); ++j) {
    std::size_t p = r;
    while (p < m.rows() && sgn(m(p, j)) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(r, c), m(p, c));
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (sgn(m(i, j)) == 0) continue;
      Integer f = m(i, j), g = m(r, j);
      for (std::size_t c = j; c < m.cols(); ++c) m(i, c) = m(i, c) * g - m(r, c) * f;
      // keep entries small
      Integer cont = 0;
      for (std::size_t c = j; c < m.cols(); ++c)
        mpz_gcd(cont.get_mpz_t(), cont.get_mpz_t(), m(i, c).get_mpz_t());
      if (cont > 1)
        for (std::size_t c = j; c < m.cols(); ++c)
          mpz_divexact(m(i, c).get_mpz_t(), m(i, c).get_mpz_t(), cont.get_mpz_t());
    }
    ++r;
  }
  return r;
}

std::size_t rank(std::span<const LatticeVector> vectors, std::size_t dim) {
  return rank(LatticeMatrix::from_rows(vectors, dim));
}

bool is_unimodular(const LatticeMatrix& a) {
  if (a.rows() != a.cols()) return false;
  Integer d = determinant(a);
  return d == 1 || d == -1;
}

LatticeMatrix unimodular_inverse(const LatticeMatrix& a) {
  if (!is_unimodular(a)) {
    throw Error(ErrorCode::InternalInconsistency, "matrix is not unimodular");
  }
  const std::size_t n = a.rows();
  LatticeMatrix inv(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    auto x = solve_integral(a, LatticeVector::unit(n, j));
    for (std::size_t i = 0; i < n; ++i) inv(i, j) = (*x)[i];
  }
  return inv;
}

// ---------------------------------------------------------------------------
// Smith normal form

namespace {

void swap_rows(LatticeMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(LatticeMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

// row[dst] += k * row[src]
void add_row(LatticeMatrix& m, std::size_t dst, std::size_t src, const Integer& k) {
  for (std::size_t j = 0; j < m.cols(); ++j)
    mpz_addmul(m(dst, j).get_mpz_t(), k.get_mpz_t(), m(src, j).get_mpz_t());
}

void add_col(LatticeMatrix& m, std::size_t dst, std::size_t src, const Integer& k) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    mpz_addmul(m(i, dst).get_mpz_t(), k.get_mpz_t(), m(i, src).get_mpz_t());
}

Integer trunc_quotient(const Integer& a, const Integer& b) {
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer floor_quotient(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

SmithForm smith_normal_form(const LatticeMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  SmithForm s{LatticeMatrix::identity(m), a, LatticeMatrix::identity(n), 0};
  LatticeMatrix& d = s.d;
  std::size_t t = 0;
  for (; t < std::min(m, n); ++t) {
    bool any = false;
    for (;;) {
      // smallest nonzero entry of the trailing block becomes the pivot
      std::size_t pi = 0, pj = 0;
      bool found = false;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) {
          if (sgn(d(i, j)) == 0) continue;
          if (!found || mpz_cmpabs(d(i, j).get_mpz_t(), d(pi, pj).get_mpz_t()) < 0) {
            pi = i;
            pj = j;
            found = true;
          }
        }
      if (!found) break;
      any = true;
      swap_rows(d, t, pi);
      swap_rows(s.u, t, pi);
      swap_cols(d, t, pj);
      swap_cols(s.v, t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (sgn(d(i, t)) == 0) continue;
        Integer q = -trunc_quotient(d(i, t), d(t, t));
        add_row(d, i, t, q);
        add_row(s.u, i, t, q);
        if (sgn(d(i, t)) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (sgn(d(t, j)) == 0) continue;
        Integer q = -trunc_quotient(d(t, j), d(t, t));
        add_col(d, j, t, q);
        add_col(s.v, j, t, q);
        if (sgn(d(t, j)) != 0) clean = false;
      }
      if (!clean) continue;

      // divisibility chain: fold an offending row into the pivot row
      bool divisible = true;
      for (std::size_t i = t + 1; i < m && divisible; ++i)
        for (std::size_t j = t + 1; j < n; ++j) {
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            add_row(d, t, i, Integer(1));
            add_row(s.u, t, i, Integer(1));
            divisible = false;
            break;
          }
        }
      if (divisible) break;
    }
    if (!any) break;
    if (sgn(d(t, t)) < 0) {
      for (std::size_t j = 0; j < n; ++j) d(t, j) = -d(t, j);
      for (std::size_t j = 0; j < m; ++j) s.u(t, j) = -s.u(t, j);
    }
  }
  s.rank = t;
  return s;
}

// ---------------------------------------------------------------------------
// Hermite normal form

HermiteForm hermite_normal_form(const LatticeMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  HermiteForm hf{a, LatticeMatrix::identity(m), 0};
  LatticeMatrix& h = hf.h;
  std::size_t r = 0;
  for (std::size_t j = 0; j < n && r < m; ++j) {
    for (;;) {
      std::size_t p = m;
      for (std::size_t i = r; i < m; ++i) {
        if (sgn(h(i, j)) == 0) continue;
        if (p == m || mpz_cmpabs(h(i, j).get_mpz_t(), h(p, j).get_mpz_t()) < 0) p = i;
      }
      if (p == m) break;
      swap_rows(h, r, p);
      swap_rows(hf.u, r, p);
      bool clean = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (sgn(h(i, j)) == 0) continue;
        Integer q = -trunc_quotient(h(i, j), h(r, j));
        add_row(h, i, r, q);
        add_row(hf.u, i, r, q);
        if (sgn(h(i, j)) != 0) clean = false;
      }
      if (clean) break;
    }
    if (sgn(h(r, j)) == 0) continue;
    if (sgn(h(r, j)) < 0) {
      for (std::size_t c = 0; c < n; ++c) h(r, c) = -h(r, c);
      for (std::size_t c = 0; c < m; ++c) hf.u(r, c) = -hf.u(r, c);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer q = -floor_quotient(h(i, j), h(r, j));
      if (sgn(q) == 0) continue;
      add_row(h, i, r, q);
      add_row(hf.u, i, r, q);
    }
    ++r;
  }
  hf.rank = r;
  return hf;
}

std::vector<LatticeVector> lattice_basis(std::span<const LatticeVector> generators,
                                         std::size_t dim) {
  HermiteForm hf = hermite_normal_form(LatticeMatrix::from_rows(generators, dim));
  std::vector<LatticeVector> basis;
  for (std::size_t i = 0; i < hf.rank; ++i) basis.push_back(hf.h.row(i));
  return basis;
}

std::vector<LatticeVector> kernel_basis(const LatticeMatrix& a) {
  SmithForm s = smith_normal_form(a);
  std::vector<LatticeVector> raw;
  for (std::size_t j = s.rank; j < a.cols(); ++j) raw.push_back(s.v.column(j));
  return lattice_basis(raw, a.cols());
}

std::vector<LatticeVector> saturation(std::span<const LatticeVector> generators,
                                      std::size_t dim) {
  auto orth = kernel_basis(LatticeMatrix::from_rows(generators, dim));
  return kernel_basis(LatticeMatrix::from_rows(orth, dim));
}

CokernelData cokernel(const LatticeMatrix& a) {
  SmithForm s = smith_normal_form(a);
  CokernelData c;
  c.image_rank = s.rank;
  for (std::size_t i = 0; i < s.rank; ++i)
    if (s.d(i, i) > 1) c.torsion_invariants.push_back(s.d(i, i));
  c.free_rank = a.rows() - s.rank;
  LatticeMatrix proj(c.free_rank, a.rows());
  for (std::size_t i = 0; i < c.free_rank; ++i)
    for (std::size_t j = 0; j < a.rows(); ++j) proj(i, j) = s.u(s.rank + i, j);
  c.projection = hermite_normal_form(proj).h;
  return c;
}

// ---------------------------------------------------------------------------
// Solving

std::optional<RationalVector> solve_rational(const LatticeMatrix& a,
                                             const RationalVector& b) {
  const std::size_t m = a.rows(), n = a.cols();
  if (b.size() != m) {
    throw Error(ErrorCode::DimensionMismatch, "right-hand side length mismatch");
  }
  std::vector<RationalVector> rows(m, RationalVector(n + 1));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) rows[i][j] = a(i, j);
    rows[i][n] = b[i];
  }
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t j = 0; j < n && r < m; ++j) {
    std::size_t p = r;
    while (p < m && sgn(rows[p][j]) == 0) ++p;
    if (p == m) continue;
    std::swap(rows[r], rows[p]);
    Rational inv = 1 / rows[r][j];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || sgn(rows[i][j]) == 0) continue;
      Rational f = rows[i][j];
      for (std::size_t c = j; c <= n; ++c) rows[i][c] -= f * rows[r][c];
    }
    pivots.push_back(j);
    ++r;
  }
  for (std::size_t i = r; i < m; ++i)
    if (sgn(rows[i][n]) != 0) return std::nullopt;
  RationalVector x(n);
  for (std::size_t i = 0; i < r; ++i) x[pivots[i]] = rows[i][n];
  return x;
}

std::optional<LatticeVector> solve_integral(const LatticeMatrix& a,
                                            const LatticeVector& b) {
  if (b.size() != a.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "right-hand side length mismatch");
  }
  SmithForm s = smith_normal_form(a);
  LatticeVector c = s.u * b;
  LatticeVector y(a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (i < s.rank) {
      if (!mpz_divisible_p(c[i].get_mpz_t(), s.d(i, i).get_mpz_t())) return std::nullopt;
      mpz_divexact(y[i].get_mpz_t(), c[i].get_mpz_t(), s.d(i, i).get_mpz_t());
    } else if (sgn(c[i]) != 0) {
      return std::nullopt;
    }
  }
  return s.v * y;
}

}  // namespace toriq
