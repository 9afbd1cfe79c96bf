#ifndef BLOCKDESC_GROUP_ALGEBRA_HPP
#define BLOCKDESC_GROUP_ALGEBRA_HPP

#include <optional>

#include "blockdesc/field.hpp"
#include "blockdesc/group.hpp"
#include "blockdesc/linalg.hpp"
#include "blockdesc/rng.hpp"

namespace blockdesc {

/// Element of the group algebra kG, dense coefficient vector indexed by
/// group element.
struct AlgebraElement {
  const FiniteField* k = nullptr;
  GroupPtr G;
  Vec coeffs;

  bool is_zero() const {
    for (Elt c : coeffs)
      if (c != 0) return false;
    return true;
  }
  bool operator==(const AlgebraElement& o) const {
    return k == o.k && G == o.G && coeffs == o.coeffs;
  }
};

AlgebraElement ae_zero(const FiniteField& k, GroupPtr G);
AlgebraElement ae_one(const FiniteField& k, GroupPtr G);
AlgebraElement ae_add(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement ae_sub(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement ae_mul(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement ae_scale(const AlgebraElement& a, Elt c);
/// ^g a (conjugation).
AlgebraElement ae_conj(const AlgebraElement& a, std::uint32_t g);
bool ae_is_central(const AlgebraElement& a);
bool ae_is_idempotent(const AlgebraElement& a);

/// Coefficientwise field automorphism.
AlgebraElement galois_act(const FieldAut& s, const AlgebraElement& a);
/// {s in gamma : ^s a = a}.
std::vector<FieldAut> stab_gamma(const std::vector<FieldAut>& gamma, const AlgebraElement& a);
/// Sum of the distinct Galois conjugates (one per coset of the stabilizer).
AlgebraElement trace_gamma(const std::vector<FieldAut>& gamma, const AlgebraElement& a);

/// Coefficientwise embedding into a larger field.
AlgebraElement ae_map_field(const AlgebraElement& a, const SubfieldEmbedding& e);
/// Inverse when every coefficient lies in the subfield.
std::optional<AlgebraElement> ae_restrict_field(const AlgebraElement& a,
                                                const SubfieldEmbedding& e);

/// Class sums, one per conjugacy class, in class order.
std::vector<AlgebraElement> center_basis(const FiniteField& k, GroupPtr G);

struct BlockIdempotent {
  AlgebraElement elt;
  // flags are structural: outputs of block_idempotents satisfy all three
  bool central = true;
  bool idempotent = true;
  bool primitive_central = true;
  mutable std::optional<Subgroup> cached_defect;
};

/// The block idempotents of kG: orthogonal primitive idempotents of Z(kG)
/// summing to 1, sorted by coefficient vector.
std::vector<BlockIdempotent> block_idempotents(const FiniteField& k, GroupPtr G);

/// Split a commutative unital subalgebra of kG spanned by `basis` (with unit
/// `unit`) into primitive idempotents.
std::vector<AlgebraElement> split_commutative_subalgebra(const std::vector<AlgebraElement>& basis,
                                                         const AlgebraElement& unit);

bool is_block_of(const FiniteField& k, GroupPtr G, const AlgebraElement& e);

/// All blocks b' of k'G with b'b != 0, plus the transitivity certificate of
/// the Galois action on them.
struct BlocksAboveReport {
  std::vector<BlockIdempotent> blocks;            // over the large field
  bool transitive = false;
  std::vector<std::size_t> orbit_of;              // all zeros when transitive
  std::vector<std::vector<FieldAut>> stabilizers; // per block
  bool stabilizers_all_equal = false;
  std::size_t fiber_size = 0;                     // common size a_i
  bool fibers_equal = false;                      // over all blocks of kG
};
BlocksAboveReport blocks_above(const AlgebraElement& b, const FiniteField& kprime);

/// Conjugation orbit of a block e of kN under G, N normal.
struct ConjugationOrbit {
  Subgroup stabilizer;             // S = stab_G(e), contains N
  AlgebraElement orbit_sum;        // central idempotent of kG
  std::vector<AlgebraElement> orbit;  // distinct conjugates, as kG elements
};
ConjugationOrbit conjugation_orbit(const AlgebraElement& e_over_N, const SubgroupAsGroup& N,
                                   GroupPtr G);

/// Embed an element of k[N] into kG along the subgroup inclusion.
AlgebraElement ae_embed_subgroup(const AlgebraElement& a, const SubgroupAsGroup& N, GroupPtr G);
/// Restrict support to a subgroup (no check); result over the standalone copy.
AlgebraElement ae_truncate_to(const AlgebraElement& a, const SubgroupAsGroup& H);

/// Brauer homomorphism Br_P: truncation of a P-fixed element to C_G(P).
/// Returns the truncation over the standalone centralizer together with the
/// centralizer itself. Throws InputError if a is not P-fixed.
struct BrauerImage {
  SubgroupAsGroup centralizer;
  AlgebraElement value;  // over centralizer.grp
};
BrauerImage brauer_map(const AlgebraElement& a, const Subgroup& P);

/// Minimal p-subgroup D (up to conjugacy) with b in Tr_D^G((kG)^D).
Subgroup defect_group(const AlgebraElement& b);

/// The unique block c of kH with defect group D = defect(b) and
/// Br_D(b) Br_D(c) != 0, for N_G(D) <= H. Throws InternalInconsistency if
/// zero or several candidates survive. The block lives over the returned
/// standalone copy of H (pass your own to keep group identities aligned).
struct BrauerCorrespondent {
  SubgroupAsGroup h;
  BlockIdempotent block;
};
BrauerCorrespondent brauer_correspondent(const AlgebraElement& b, const Subgroup& H);
BrauerCorrespondent brauer_correspondent(const AlgebraElement& b, const Subgroup& H,
                                         const SubgroupAsGroup& Hsa);

}  // namespace blockdesc

#endif
