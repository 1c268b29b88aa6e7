#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace cloc {

// Exact rational scalar. mpq_class keeps lowest terms with positive denominator
// as long as values are built through its arithmetic or make_scalar().
using Scalar = mpq_class;

Scalar make_scalar(long num, long den = 1);
std::string to_string(const Scalar& s);

/// Dense row-major matrix over the rationals.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Mat(std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

  static Mat identity(std::size_t n);
  static Mat from_ints(const std::vector<std::vector<long>>& rows);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  [[nodiscard]] const std::vector<Scalar>& entries() const { return data_; }

  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] Mat transpose() const;
  [[nodiscard]] Mat column(std::size_t c) const;
  [[nodiscard]] Mat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Mat& b);

  friend Mat operator*(const Mat& a, const Mat& b);
  friend Mat operator+(const Mat& a, const Mat& b);
  friend Mat operator-(const Mat& a, const Mat& b);
  friend Mat operator*(const Scalar& s, const Mat& a);
  friend bool operator==(const Mat& a, const Mat& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

std::ostream& operator<<(std::ostream& os, const Mat& m);

Mat hstack(const Mat& a, const Mat& b);
Mat vstack(const Mat& a, const Mat& b);

/// Reduced row echelon form; pivot columns are returned through `pivots`.
Mat rref(Mat m, std::vector<std::size_t>* pivots = nullptr);

std::size_t rank(const Mat& m);

/// Some x with a*x = b, or nullopt when b leaves the column space of a.
/// Throws std::invalid_argument when a.rows() != b.rows().
std::optional<Mat> solve_right(const Mat& a, const Mat& b);

/// Columns form a basis of the null space of m.
Mat kernel_basis(const Mat& m);

/// Columns form a basis of the column space of m (pivot columns of m).
Mat column_space(const Mat& m);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<Mat> inverse(const Mat& m);

/// Indices of standard basis vectors completing the column space of `sub`
/// (a `dim x k` matrix) to the whole space, chosen greedily in index order.
std::vector<std::size_t> complement_indices(const Mat& sub, std::size_t dim);

}  // namespace cloc
