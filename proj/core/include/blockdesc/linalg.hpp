#ifndef BLOCKDESC_LINALG_HPP
#define BLOCKDESC_LINALG_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "blockdesc/field.hpp"

namespace blockdesc {

using Vec = std::vector<Elt>;

/// Dense row-major matrix over a fixed finite field. Module vectors are
/// columns; action matrices multiply from the left.
class Mat {
public:
  Mat() : F_(nullptr), r_(0), c_(0) {}
  Mat(const FiniteField& F, std::size_t rows, std::size_t cols)
      : F_(&F), r_(rows), c_(cols), a_(rows * cols, 0) {}

  static Mat identity(const FiniteField& F, std::size_t n);
  static Mat zero(const FiniteField& F, std::size_t rows, std::size_t cols) {
    return Mat(F, rows, cols);
  }

  const FiniteField& fld() const { return *F_; }
  const FiniteField* fld_ptr() const { return F_; }
  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  bool empty() const { return r_ == 0 || c_ == 0; }

  Elt& at(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  Elt at(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }
  Elt* row(std::size_t i) { return a_.data() + i * c_; }
  const Elt* row(std::size_t i) const { return a_.data() + i * c_; }
  const std::vector<Elt>& data() const { return a_; }
  std::vector<Elt>& data() { return a_; }

  bool operator==(const Mat& o) const {
    return F_ == o.F_ && r_ == o.r_ && c_ == o.c_ && a_ == o.a_;
  }

  Mat transpose() const;
  bool is_zero() const;
  bool is_identity() const;

  /// dst_row += scalar * src_row, rows taken from this and other.
  void row_addmul(std::size_t dst, const Mat& src, std::size_t src_row, Elt scalar);

private:
  const FiniteField* F_;
  std::size_t r_, c_;
  std::vector<Elt> a_;
};

Mat operator+(const Mat& a, const Mat& b);
Mat operator-(const Mat& a, const Mat& b);
Mat operator*(const Mat& a, const Mat& b);
Mat scale(const Mat& a, Elt c);
Vec mat_vec(const Mat& a, const Vec& v);
Vec vec_mat(const Vec& v, const Mat& a);

/// Kronecker product (a ox b).
Mat kronecker(const Mat& a, const Mat& b);
/// Block diagonal concatenation.
Mat block_diag(const std::vector<Mat>& blocks, const FiniteField& F);
/// Horizontal / vertical concatenation.
Mat hcat(const Mat& a, const Mat& b);
Mat vcat(const Mat& a, const Mat& b);

/// In-place reduced row echelon form. Returns the pivot column indices.
std::vector<std::size_t> rref(Mat& m);
std::size_t rank(Mat m);
std::size_t rank_of(const Mat& m);

/// Basis of the right kernel {x : m x = 0}, returned as columns. Canonical
/// (derived from the RREF free-variable parametrization).
Mat kernel_basis(const Mat& m);

/// One solution of m x = b plus the kernel; nullopt if inconsistent.
struct SolveResult {
  Vec particular;
  Mat kernel;  // columns
};
std::optional<SolveResult> solve(const Mat& m, const Vec& b);

/// Solve m X = rhs columnwise; nullopt if any column is inconsistent.
std::optional<Mat> solve_matrix(const Mat& m, const Mat& rhs);

/// Canonical basis of the column space, as columns.
Mat column_space(const Mat& m);
/// Intersection of two column spaces, as columns.
Mat column_space_intersection(const Mat& a, const Mat& b);
/// Is v in the column span of m?
bool in_column_span(const Mat& m, const Vec& v);

Mat inverse(const Mat& m);  // throws InputError if singular

/// Incremental row space without coordinate tracking (cheap, for large
/// constraint systems).
class RowSpan {
public:
  RowSpan(const FiniteField& F, std::size_t width) : F_(&F), width_(width) {}
  /// Returns true if v was independent.
  bool insert(Vec v);
  bool contains(Vec v) const;
  std::size_t dim() const { return rows_.size(); }
  std::size_t width() const { return width_; }
  const std::vector<Vec>& rows() const { return rows_; }
  /// Kernel of the accumulated row space (as columns).
  Mat kernel() const;

private:
  const FiniteField* F_;
  std::size_t width_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
  void reduce(Vec& v) const;
};

/// Incremental row-space index with coordinate recovery: insert vectors,
/// then ask for coordinates of any vector in terms of the inserted ones.
class SpanIndex {
public:
  explicit SpanIndex(const FiniteField& F, std::size_t width) : F_(&F), width_(width) {}

  /// Returns true if v was independent (span grew).
  bool insert(const Vec& v);
  std::size_t dim() const { return rows_.size(); }
  std::size_t width() const { return width_; }
  bool contains(const Vec& v) const;
  /// Coordinates of v in terms of the *inserted* vectors (not the reduced
  /// basis); nullopt if v is outside the span.
  std::optional<Vec> coords(const Vec& v) const;
  /// The reduced basis rows.
  const std::vector<Vec>& basis() const { return rows_; }

private:
  const FiniteField* F_;
  std::size_t width_;
  std::vector<Vec> rows_;        // reduced, normalized
  std::vector<std::size_t> pivots_;
  std::vector<Vec> transform_;   // rows_[i] = sum transform_[i][j] * inserted[j]
  std::size_t inserted_ = 0;

  // reduce v, tracking combination; returns (reduced, combo)
  std::pair<Vec, Vec> reduce(const Vec& v) const;
};

/// Minimal polynomial of a square matrix, coefficients low-to-high, monic.
Vec min_poly(const Mat& m);

/// Dense polynomials over GF(q): coefficient vectors low-to-high.
namespace polyq {
Vec trim(Vec f);
Vec mul(const FiniteField& F, const Vec& a, const Vec& b);
Vec mod(const FiniteField& F, Vec a, const Vec& m);
Vec gcd(const FiniteField& F, Vec a, Vec b);
/// (quotient, remainder) of a / b.
std::pair<Vec, Vec> divmod(const FiniteField& F, Vec a, const Vec& b);
Vec powmod(const FiniteField& F, Vec base, std::uint64_t e, const Vec& m);
Vec add(const FiniteField& F, const Vec& a, const Vec& b);
Vec sub(const FiniteField& F, const Vec& a, const Vec& b);
Elt eval(const FiniteField& F, const Vec& f, Elt x);
/// Roots in GF(q) by scanning (fields here are small).
std::vector<Elt> roots(const FiniteField& F, const Vec& f);
}  // namespace polyq

/// Evaluate a polynomial at a square matrix.
Mat eval_poly(const Vec& f, const Mat& m);

/// Coordinates of a field extension large/small with respect to the basis
/// 1, beta, ..., beta^(m-1), beta the canonical generator of the large field.
/// Backs restriction of scalars.
class RelativeBasis {
public:
  RelativeBasis(const FiniteField& small, const FiniteField& large);

  const FiniteField& small() const { return *small_; }
  const FiniteField& large() const { return *large_; }
  std::size_t degree() const { return m_; }  // [large : small]

  /// lambda = sum_j embed(coords[j]) * beta^j
  Vec to_coords(Elt lambda) const;
  Elt from_coords(const Vec& coords) const;
  /// m x m matrix over the small field of multiplication by lambda.
  Mat mult_matrix(Elt lambda) const;

private:
  const FiniteField* small_;
  const FiniteField* large_;
  std::size_t m_;
  std::vector<Elt> beta_pow_;   // beta^j in the large field
  Mat solver_;                  // inverse digit matrix over GF(p)
};

std::string to_string(const Mat& m);

}  // namespace blockdesc

#endif
