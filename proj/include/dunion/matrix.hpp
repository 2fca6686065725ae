#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace dunion {

using Complex = std::complex<double>;

// Default magnitude threshold for reading a 0/1 pattern out of a complex matrix.
inline constexpr double kSupportTolerance = 1e-9;
// Default max-norm tolerance for U^dagger U = I.
inline constexpr double kUnitaryTolerance = 1e-10;

/// Dense row-major complex matrix. Entries are always finite.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols);
  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  /// Real-valued literal, e.g. `DenseMatrix::from_rows({{0, 1}, {1, 0}})`.
  static DenseMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);
  static DenseMatrix identity(std::size_t n);
  static DenseMatrix ones(std::size_t rows, std::size_t cols);
  static DenseMatrix zeros(std::size_t rows, std::size_t cols) { return {rows, cols}; }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  std::span<const Complex> row(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }
  std::span<const Complex> entries() const noexcept { return entries_; }

  bool operator==(const DenseMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

/// Permutation matrix stored as the column of the single 1 in each row.
class PermutationMatrix {
 public:
  explicit PermutationMatrix(std::vector<std::size_t> image);

  static PermutationMatrix identity(std::size_t n);
  /// Reads a permutation pattern out of M; nullopt unless every row and column
  /// holds exactly one entry of modulus above tol, and that entry is 1.
  static std::optional<PermutationMatrix> from_dense(const DenseMatrix& m,
                                                     double tol = kSupportTolerance);

  std::size_t size() const noexcept { return image_.size(); }
  std::size_t operator[](std::size_t row) const { return image_[row]; }
  std::span<const std::size_t> image() const noexcept { return image_; }

  DenseMatrix to_dense() const;

  bool operator==(const PermutationMatrix&) const = default;

 private:
  std::vector<std::size_t> image_;
};

DenseMatrix add(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix adjoint(const DenseMatrix& m);
DenseMatrix scale(const DenseMatrix& m, Complex factor);

/// Matrix product. Parallel over output rows; every entry is accumulated in a
/// fixed order so the result does not depend on the thread count.
DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b);
/// A * P for a permutation P, in O(rows * n).
DenseMatrix multiply(const DenseMatrix& a, const PermutationMatrix& p);

DenseMatrix hadamard(const DenseMatrix& n, const DenseMatrix& m);

/// Blockwise scaling of the m x m matrix M by the n x n matrix N (n | m):
/// block (i, j) of M, of size m/n, is multiplied by N(i, j).
DenseMatrix generalized_hadamard(const DenseMatrix& n, const DenseMatrix& m);

DenseMatrix kronecker(const DenseMatrix& n, const DenseMatrix& m);
PermutationMatrix kronecker(const PermutationMatrix& a, const PermutationMatrix& b);

DenseMatrix direct_sum(std::span<const DenseMatrix> blocks);
PermutationMatrix direct_sum(std::span<const PermutationMatrix> blocks);

/// Regular permutation representation of Z_k: 1 at (i, (i + l) mod k).
PermutationMatrix rho_reg_zk(std::size_t k, std::size_t l);

struct UnitarityCheck {
  bool unitary = false;
  double residual = 0.0;  // max |(U^dagger U - I)_{ij}|
};
UnitarityCheck is_unitary(const DenseMatrix& u, double tol = kUnitaryTolerance);

/// Discrete Fourier matrix, entry (a, b) = exp(2 pi i a b / k) / sqrt(k).
DenseMatrix fourier(std::size_t k);

double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b);
double min_abs_entry(const DenseMatrix& m);

namespace serial {
// Reference kernels, single-threaded. Kept for cross-checking and benchmarks.
DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b);
UnitarityCheck is_unitary(const DenseMatrix& u, double tol = kUnitaryTolerance);
}  // namespace serial

}  // namespace dunion
