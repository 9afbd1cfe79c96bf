#ifndef BLOCKDESC_GROUP_HPP
#define BLOCKDESC_GROUP_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace blockdesc {

class Group;
using GroupPtr = std::shared_ptr<const Group>;

/// Finite group as an explicit element list with full Cayley table.
/// Element 0 is the identity. For groups built from permutation generators
/// the element order is BFS over the generators from the identity.
class Group {
public:
  /// gens: images of 1..n under each generator (1-based, as in the JSON
  /// format). Order bound via max_order.
  static GroupPtr from_perm_gens(const std::vector<std::vector<std::uint32_t>>& gens,
                                 std::uint32_t max_order = 500);
  /// table[i][j] = index of element i * element j; identity must be index 0.
  static GroupPtr from_cayley(const std::vector<std::vector<std::uint32_t>>& table);

  std::uint32_t order() const { return n_; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return table_[a * n_ + b]; }
  std::uint32_t inv(std::uint32_t a) const { return inv_[a]; }
  std::uint32_t id() const { return 0; }
  /// ^g x = g x g^{-1}
  std::uint32_t conj(std::uint32_t g, std::uint32_t x) const {
    return mul(mul(g, x), inv(g));
  }
  std::uint32_t element_order(std::uint32_t a) const;

  const std::vector<std::uint32_t>& generators() const { return gens_; }
  /// BFS word structure: for e != 0, e = word_parent(e) * generator(word_gen(e)).
  std::uint32_t word_parent(std::uint32_t e) const { return bfs_[e].first; }
  std::uint32_t word_gen(std::uint32_t e) const { return bfs_[e].second; }
  /// Left factorization: for e != 0, e = generator(left_gen(e)) * left_parent(e).
  std::uint32_t left_parent(std::uint32_t e) const { return lbfs_[e].first; }
  std::uint32_t left_gen(std::uint32_t e) const { return lbfs_[e].second; }

  /// Permutation images when built from permutations (empty otherwise).
  const std::vector<std::vector<std::uint32_t>>& perm_images() const { return perms_; }

  const std::vector<std::vector<std::uint32_t>>& conjugacy_classes() const;
  std::uint32_t class_of(std::uint32_t e) const;

  std::string describe() const;

private:
  Group() = default;
  void finish_init();  // inverses, sanity, generator fill-in

  std::uint32_t n_ = 0;
  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> inv_;
  std::vector<std::uint32_t> gens_;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> bfs_;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> lbfs_;
  std::vector<std::vector<std::uint32_t>> perms_;

  mutable std::vector<std::vector<std::uint32_t>> classes_;
  mutable std::vector<std::uint32_t> class_of_;
};

/// Subgroup as a sorted member list plus membership mask.
struct Subgroup {
  GroupPtr parent;
  std::vector<std::uint32_t> elems;  // sorted, contains 0
  std::vector<char> mask;            // size parent->order()

  bool contains(std::uint32_t e) const { return mask[e] != 0; }
  std::uint32_t order() const { return std::uint32_t(elems.size()); }
  bool operator==(const Subgroup& o) const { return parent == o.parent && elems == o.elems; }
};

Subgroup make_subgroup(GroupPtr g, std::vector<std::uint32_t> elems);
Subgroup subgroup_closure(GroupPtr g, const std::vector<std::uint32_t>& gens);
Subgroup trivial_subgroup(GroupPtr g);
Subgroup full_subgroup(GroupPtr g);
bool is_subgroup(const Subgroup& s);
bool is_normal(const Subgroup& s);
bool subgroup_is_abelian(const Subgroup& s);
/// A small generating set (greedy, deterministic).
std::vector<std::uint32_t> subgroup_generators(const Subgroup& s);

Subgroup centralizer(GroupPtr g, const std::vector<std::uint32_t>& subset);
Subgroup centralizer(const Subgroup& s);
Subgroup normalizer(const Subgroup& s);
Subgroup group_center(GroupPtr g);
Subgroup intersect(const Subgroup& a, const Subgroup& b);
bool conjugate_subgroups(const Subgroup& a, const Subgroup& b);

/// All normal subgroups (unions of conjugacy classes closed under product).
std::vector<Subgroup> normal_subgroups(GroupPtr g);

std::uint32_t p_part(std::uint32_t n, std::uint32_t p);

/// A Sylow p-subgroup, deterministic (canonical ascent).
Subgroup sylow_subgroup(GroupPtr g, std::uint32_t p);

/// (O_{p'}(G), is-p-nilpotent). The core is verified maximal against every
/// normal p'-subgroup.
std::pair<Subgroup, bool> p_core_complement(GroupPtr g, std::uint32_t p);

/// Representatives of conjugacy classes of p-subgroups, sorted by order then
/// element list.
std::vector<Subgroup> p_subgroups_up_to_conjugacy(GroupPtr g, std::uint32_t p);
/// Same, within a subgroup ambient (conjugacy still decided in g).
std::vector<Subgroup> subgroups_of_p_group(const Subgroup& p_grp);

/// A standalone copy of a subgroup, with index maps in both directions.
struct SubgroupAsGroup {
  GroupPtr grp;
  std::vector<std::uint32_t> to_parent;    // sub index -> parent index
  std::vector<std::int64_t> from_parent;   // parent index -> sub index or -1
};
SubgroupAsGroup subgroup_as_group(const Subgroup& s);

/// Direct product with pair indexing (a, b) -> a * |B| + b.
struct ProductGroup {
  GroupPtr grp;
  GroupPtr left, right;
  std::uint32_t pair(std::uint32_t a, std::uint32_t b) const;
  std::pair<std::uint32_t, std::uint32_t> unpair(std::uint32_t e) const;
};
ProductGroup direct_product(GroupPtr a, GroupPtr b);

/// Quotient by a normal subgroup, with the projection map.
struct QuotientGroup {
  GroupPtr grp;
  std::vector<std::uint32_t> proj;  // parent element -> coset index
};
QuotientGroup quotient_group(GroupPtr g, const Subgroup& n);

/// Homomorphism with a full image table, validated on the whole Cayley table.
struct GroupHom {
  GroupPtr src, dst;
  std::vector<std::uint32_t> image;
};
GroupHom hom_from_gen_images(GroupPtr src, GroupPtr dst,
                             const std::vector<std::uint32_t>& gen_images);
bool hom_is_valid(const GroupHom& h);

/// Delta_Q S = {(nq, q) : n in N, q in Q} inside S x Q, for Q <= S, N normal
/// in S with S = NQ. S is taken standalone; Q, N are subgroups of it.
struct TwistedDiagonal {
  ProductGroup product;        // S x Q(standalone)
  Subgroup delta;              // subgroup of the product
  SubgroupAsGroup q_standalone;
};
TwistedDiagonal twisted_diagonal(GroupPtr s, const Subgroup& q, const Subgroup& n);

/// Left cosets of a subgroup: representatives (least element index) and the
/// coset map.
struct Cosets {
  std::vector<std::uint32_t> reps;
  std::vector<std::uint32_t> coset_of;  // element -> coset index
};
Cosets left_cosets(GroupPtr g, const Subgroup& h);

}  // namespace blockdesc

#endif
