#pragma once

// Exact integer linear algebra over arbitrary-precision integers.
//
// Everything here is a pure function of its arguments; no floating point is
// used anywhere.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace toriq {

using Integer = mpz_class;
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

class LatticeVector {
 public:
  LatticeVector() = default;
  explicit LatticeVector(std::size_t n) : entries_(n) {}
  explicit LatticeVector(std::vector<Integer> entries)
      : entries_(std::move(entries)) {}
  LatticeVector(std::initializer_list<long> entries);

  static LatticeVector unit(std::size_t n, std::size_t i);

  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }

  const Integer& operator[](std::size_t i) const { return entries_[i]; }
  Integer& operator[](std::size_t i) { return entries_[i]; }

  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }

  const std::vector<Integer>& entries() const noexcept { return entries_; }

  bool is_zero() const;
  /// gcd of all entries (0 for the zero vector).
  Integer content() const;

  LatticeVector& operator+=(const LatticeVector& o);
  LatticeVector& operator-=(const LatticeVector& o);
  LatticeVector& operator*=(const Integer& k);

  friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) {
    return a += b;
  }
  friend LatticeVector operator-(LatticeVector a, const LatticeVector& b) {
    return a -= b;
  }
  friend LatticeVector operator*(const Integer& k, LatticeVector a) {
    return a *= k;
  }
  LatticeVector operator-() const;

  friend bool operator==(const LatticeVector& a, const LatticeVector& b);
  /// Lexicographic, shorter vectors first.
  friend std::strong_ordering operator<=>(const LatticeVector& a,
                                          const LatticeVector& b);

  std::string to_string() const;

 private:
  std::vector<Integer> entries_;
};

std::ostream& operator<<(std::ostream& os, const LatticeVector& v);

Integer dot(const LatticeVector& a, const LatticeVector& b);
/// v divided by its content; the zero vector maps to itself.
LatticeVector primitive(const LatticeVector& v);
RationalVector to_rational(const LatticeVector& v);

/// Dense row-major integer matrix.
class LatticeMatrix {
 public:
  LatticeMatrix() = default;
  LatticeMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  LatticeMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static LatticeMatrix identity(std::size_t n);
  /// Rows are the given vectors; `cols` is used when `rows` is empty.
  static LatticeMatrix from_rows(std::span<const LatticeVector> rows,
                                 std::size_t cols);
  static LatticeMatrix from_columns(std::span<const LatticeVector> cols,
                                    std::size_t rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  const Integer& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }
  Integer& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }

  LatticeVector row(std::size_t i) const;
  LatticeVector column(std::size_t j) const;
  std::vector<LatticeVector> row_vectors() const;
  std::vector<LatticeVector> column_vectors() const;

  LatticeMatrix transpose() const;
  bool is_zero() const;
  bool is_diagonal() const;

  friend LatticeMatrix operator*(const LatticeMatrix& a, const LatticeMatrix& b);
  friend LatticeVector operator*(const LatticeMatrix& a, const LatticeVector& v);
  friend bool operator==(const LatticeMatrix& a, const LatticeMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

std::ostream& operator<<(std::ostream& os, const LatticeMatrix& m);

/// Fraction-free (Bareiss) determinant of a square matrix.
Integer determinant(const LatticeMatrix& a);
/// Rank over Q.
std::size_t rank(const LatticeMatrix& a);
std::size_t rank(std::span<const LatticeVector> vectors, std::size_t dim);
bool is_unimodular(const LatticeMatrix& a);
/// Inverse of a unimodular matrix; throws on anything else.
LatticeMatrix unimodular_inverse(const LatticeMatrix& a);

struct SmithForm {
  LatticeMatrix u;
  LatticeMatrix d;
  LatticeMatrix v;
  /// Number of nonzero diagonal entries.
  std::size_t rank = 0;
};

/// U * A * V = D with U, V unimodular and D diagonal, d_i | d_{i+1}, d_i >= 0.
SmithForm smith_normal_form(const LatticeMatrix& a);

struct HermiteForm {
  /// Row-style Hermite normal form: echelon, positive pivots, entries above
  /// each pivot reduced into [0, pivot). Zero rows are kept at the bottom.
  LatticeMatrix h;
  /// Unimodular with u * a = h.
  LatticeMatrix u;
  std::size_t rank = 0;
};

HermiteForm hermite_normal_form(const LatticeMatrix& a);

/// Canonical basis (Hermite-reduced) of the lattice spanned by `generators`.
std::vector<LatticeVector> lattice_basis(std::span<const LatticeVector> generators,
                                         std::size_t dim);

/// Basis of the saturated integer kernel {x : A x = 0}, Hermite-reduced.
std::vector<LatticeVector> kernel_basis(const LatticeMatrix& a);

/// Basis of (span_Q generators) ∩ Z^dim, Hermite-reduced.
std::vector<LatticeVector> saturation(std::span<const LatticeVector> generators,
                                      std::size_t dim);

struct CokernelData {
  std::size_t free_rank = 0;
  /// Invariant factors > 1, each dividing the next.
  std::vector<Integer> torsion_invariants;
  /// free_rank x codomain-rank matrix; its kernel is exactly the saturation of
  /// Im(A), so it induces an isomorphism of the free quotient with Z^free_rank.
  LatticeMatrix projection;
  /// Number of nonzero invariant factors of A.
  std::size_t image_rank = 0;

  bool torsion_free() const { return torsion_invariants.empty(); }
};

/// Cokernel of A : Z^cols -> Z^rows.
CokernelData cokernel(const LatticeMatrix& a);

/// A particular rational solution of A x = b (free variables set to zero), or
/// nullopt when the system is inconsistent.
std::optional<RationalVector> solve_rational(const LatticeMatrix& a,
                                             const RationalVector& b);

/// An integer solution of A x = b, or nullopt when none exists.
std::optional<LatticeVector> solve_integral(const LatticeMatrix& a,
                                            const LatticeVector& b);

}  // namespace toriq
