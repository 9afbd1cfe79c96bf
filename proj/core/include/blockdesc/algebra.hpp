#ifndef BLOCKDESC_ALGEBRA_HPP
#define BLOCKDESC_ALGEBRA_HPP

#include <vector>

#include "blockdesc/linalg.hpp"
#include "blockdesc/rng.hpp"

namespace blockdesc {

/// A unital matrix algebra: a linearly independent basis of n x n matrices
/// whose span is closed under multiplication and contains the unit.
struct MatrixAlgebra {
  const FiniteField* F = nullptr;
  std::size_t n = 0;
  std::vector<Mat> basis;
  Mat unit;

  std::size_t dim() const { return basis.size(); }
};

/// Build from a spanning set; reduces to a basis and checks closure under
/// multiplication and that `unit` lies in the span.
MatrixAlgebra algebra_from_span(const FiniteField& F, std::size_t n, const std::vector<Mat>& span,
                                const Mat& unit);

/// Close a generating set under multiplication (unit is adjoined).
MatrixAlgebra algebra_closure(const FiniteField& F, std::size_t n, const std::vector<Mat>& gens,
                              const Mat& unit);

bool algebra_is_closed(const MatrixAlgebra& a);
bool algebra_is_commutative(const MatrixAlgebra& a);

/// Coordinates of m in the algebra basis; nullopt if outside the span.
std::optional<Vec> algebra_coords(const MatrixAlgebra& a, const Mat& m);

/// Basis of the center {z : zb = bz for all basis b}.
std::vector<Mat> algebra_center(const MatrixAlgebra& a);

/// Basis of the Jacobson radical. Commutative algebras use the p-power
/// kernel; the general case runs the characteristic-p layered trace method
/// (Friedl-Ronyai / Cohen-Ivanyos-Wales) on the left regular representation.
/// The result is verified to be a nilpotent two-sided ideal.
std::vector<Mat> radical(const MatrixAlgebra& a);

bool is_semisimple(const MatrixAlgebra& a);

/// A/J realized by its left regular representation, with maps back and forth.
struct QuotientAlgebra {
  MatrixAlgebra quo;                    // dim = s, ambient s x s (regular rep)
  std::vector<Mat> complement;          // representatives in A of the quotient basis
  // projection: coordinates of (a mod J) in the complement basis
  std::optional<Vec> project(const Mat& a_elt) const;
  Mat lift(const Vec& coords) const;    // sum coords * complement, an element of A

  // internal: spans for projection
  SpanIndex j_then_c;                   // radical basis first, complement after
  std::size_t j_dim = 0;
  std::vector<std::int32_t> slot_map;   // insert slot -> complement index or -1
  const MatrixAlgebra* parent = nullptr;

  explicit QuotientAlgebra(const FiniteField& F, std::size_t width) : j_then_c(F, width) {}
};

QuotientAlgebra quotient_by_radical(const MatrixAlgebra& a, const std::vector<Mat>& rad);

/// Orthogonal primitive idempotents summing to the unit. Randomized splitting
/// elements come from rng; the output is sorted canonically so equal seeds
/// give identical results.
std::vector<Mat> split_primitive_idempotents(const MatrixAlgebra& a, Rng& rng);

/// Minimal polynomial of x relative to a (possibly non-identity) unit e:
/// the minimal monic f with f(x) = 0 where x^0 := e. x must satisfy
/// x = e x e.
Vec min_poly_in_corner(const Mat& x, const Mat& e);

/// Characteristic polynomial (monic, low-to-high) via Hessenberg reduction.
Vec char_poly(const Mat& m);

/// Does the span of `ideal` contain a nonzero idempotent? Exhaustive when
/// the span is small; otherwise certified by nilpotency of the span.
bool span_is_nilpotent(const FiniteField& F, std::size_t n, const std::vector<Mat>& ideal);

}  // namespace blockdesc

#endif
