#ifndef BLOCKDESC_MODULE_HPP
#define BLOCKDESC_MODULE_HPP

#include <optional>

#include "blockdesc/algebra.hpp"
#include "blockdesc/group.hpp"
#include "blockdesc/group_algebra.hpp"
#include "blockdesc/linalg.hpp"
#include "blockdesc/rng.hpp"

namespace blockdesc {

/// Finitely generated kG-module: one invertible matrix per group generator,
/// acting on column vectors. Bimodules are modules over a product group.
struct Rep {
  const FiniteField* k = nullptr;
  GroupPtr G;
  std::size_t dim = 0;
  std::vector<Mat> gen_mats;
};

/// Dimension cap, from the BLOCKDESC_MAX_DIM environment variable
/// (default 4096).
std::size_t max_module_dim();

Rep make_rep(const FiniteField& k, GroupPtr G, std::vector<Mat> gen_mats);
Rep trivial_rep(const FiniteField& k, GroupPtr G);
Rep zero_rep(const FiniteField& k, GroupPtr G);
Rep regular_rep(const FiniteField& k, GroupPtr G);
/// Permutation module k[G/H].
Rep perm_module(const FiniteField& k, GroupPtr G, const Subgroup& H);
Rep direct_sum(const Rep& a, const Rep& b);

/// Full relation check over the whole Cayley table (desk scale only).
bool rep_is_valid(const Rep& r);

/// Matrix of an arbitrary group element (by generator word).
Mat rep_mat(const Rep& r, std::uint32_t g);
/// g * v for a column vector, via the left BFS word (no matrix build-up).
Vec rep_apply(const Rep& r, std::uint32_t g, const Vec& v);
/// Action of a group algebra element.
Mat rep_algebra_mat(const Rep& r, const AlgebraElement& a);

/// Smallest invariant subspace containing the given columns, as a basis
/// matrix (dim x r).
Mat invariant_closure(const Rep& r, const Mat& vectors);
/// Restriction to an invariant subspace with basis `basis` (columns).
Rep sub_rep(const Rep& r, const Mat& basis);
/// Action on the quotient by an invariant subspace.
struct QuotientRep {
  Rep rep;
  Mat projection;  // (dim quotient) x (dim parent)
};
QuotientRep quotient_rep(const Rep& r, const Mat& sub_basis);

/// Basis of Hom_kG(A, B) as (dim B x dim A) matrices. Presentation-based:
/// module generators of A are found by spinning, and the intertwining
/// conditions are imposed on the generator images only.
std::vector<Mat> hom_space(const Rep& a, const Rep& b);
std::vector<Mat> end_basis(const Rep& a);
MatrixAlgebra end_algebra(const Rep& a);

struct Summand {
  Mat inclusion;  // (parent dim) x (summand dim)
  Rep rep;
  std::size_t iso_class = 0;
};
struct Decomposition {
  std::vector<Summand> summands;
  std::vector<Mat> idempotents;  // orthogonal projections in parent coords, sum = 1
  std::size_t num_classes = 0;
  std::vector<std::size_t> class_multiplicity;
  std::vector<std::size_t> class_rep;  // index of a representative summand
};

/// Krull-Schmidt decomposition by Fitting splittings with an End-algebra
/// certificate on the leaves.
Decomposition decompose(const Rep& m, Rng& rng);
bool is_indecomposable(const Rep& m, Rng& rng);

/// Isomorphism test between certified-indecomposable modules via the
/// composition pairing into End/J; returns an explicit isomorphism.
std::optional<Mat> iso_indecomposable(const Rep& a, const Rep& b);
/// General isomorphism: decompose both sides and match summands.
std::optional<Mat> find_isomorphism(const Rep& a, const Rep& b, Rng& rng);
bool isomorphic(const Rep& a, const Rep& b, Rng& rng);

// ---- functor operations ----

Rep induce(const Rep& m, GroupPtr G, const SubgroupAsGroup& H);
Rep restrict_rep(const Rep& m, const SubgroupAsGroup& H);
Rep inflate(const Rep& m_over_quotient, GroupPtr G, const QuotientGroup& q);
Rep tensor_reps(const Rep& a, const Rep& b);  // over k, diagonal action
Rep dual_rep(const Rep& m);

// ---- galois operations ----

Rep twist_rep(const Rep& m, const FieldAut& s);
Rep extend_scalars(const Rep& m, const SubfieldEmbedding& e);
/// Rewrite entries over the large field as blocks over the small one.
Rep restrict_scalars(const Rep& m, const RelativeBasis& rb);

// ---- p-permutation structure and vertices ----

struct PPermReport {
  bool is_p_permutation = false;
  // per indecomposable summand of the input: a vertex representative
  std::vector<Subgroup> vertices;
  std::vector<std::size_t> summand_dims;
};
PPermReport p_perm_and_vertex(const Rep& m, Rng& rng);
/// Vertex of an indecomposable module (minimal Higman witness).
Subgroup vertex_of_indecomposable(const Rep& u, Rng& rng);
/// Projective = relatively 1-projective (Higman with Q = 1).
bool is_projective(const Rep& m);
/// Is m a p-permutation module (restriction to a Sylow p-subgroup is a
/// direct sum of k[P/Q'])?
bool is_p_permutation(const Rep& m, Rng& rng);

// ---- block-module tools ----

/// b * M as a submodule (b central idempotent of kG).
Rep block_cut(const Rep& m, const AlgebraElement& b);
/// The simple modules of the block algebra kGb, up to isomorphism.
std::vector<Rep> simples_of_block(const FiniteField& k, GroupPtr G, const AlgebraElement& b,
                                  Rng& rng);
/// The unique simple of kGb; throws VerificationFailure listing the count
/// when not unique.
Rep unique_simple_of_block(const FiniteField& k, GroupPtr G, const AlgebraElement& b, Rng& rng);
/// Projective cover P(M) ->> M.
struct Cover {
  Rep projective;
  Mat surjection;  // dim M x dim P
};
Cover projective_cover(const Rep& m, Rng& rng);
/// Heller translates.
Rep heller(const Rep& m, Rng& rng);            // kernel of the projective cover
Rep coheller(const Rep& m, Rng& rng);          // dual construction

// ---- algebra modules (dense engine, used for left ideal decompositions) ----

/// Module over an abstract algebra: aligned action matrices for a spanning
/// set of the algebra. Hom computed by the dense commutant solve; intended
/// for small dimensions.
struct AlgMod {
  const FiniteField* k = nullptr;
  std::size_t dim = 0;
  std::vector<Mat> ops;
};
std::vector<Mat> alg_hom_space(const AlgMod& a, const AlgMod& b);
AlgMod alg_sub(const AlgMod& a, const Mat& basis);
struct AlgSummand {
  Mat inclusion;
  AlgMod mod;
  std::size_t iso_class = 0;
};
std::vector<AlgSummand> alg_decompose(const AlgMod& m, Rng& rng);
bool alg_isomorphic(const AlgMod& a, const AlgMod& b);

}  // namespace blockdesc

#endif
