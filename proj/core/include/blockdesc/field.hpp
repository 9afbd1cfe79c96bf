#ifndef BLOCKDESC_FIELD_HPP
#define BLOCKDESC_FIELD_HPP

#include <cstdint>
#include <optional>
#include <vector>

namespace blockdesc {

class FiniteField;
using Elt = std::uint32_t;

/// Exact arithmetic in GF(p^d).
///
/// Elements are codes in [0, p^d): the base-p digits of the code are the
/// coefficients of the residue polynomial, low degree first. The zero code is
/// the zero element and from_int(1) is the unit. Fields are immutable and
/// interned by (p, d) via field(), so two modules talking about GF(p^d) hold
/// the same object and element membership is a pointer identity check.
class FiniteField {
public:
  using Elt = std::uint32_t;

  std::uint32_t p() const { return p_; }
  std::uint32_t degree() const { return d_; }
  std::uint32_t order() const { return q_; }
  /// Modulus polynomial, coefficients low-to-high, length d+1, monic.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  Elt zero() const { return 0; }
  Elt one() const { return one_; }
  /// Image of an integer under Z -> GF(p) -> GF(p^d).
  Elt from_int(std::int64_t n) const;
  /// Class of x (the canonical generator of the extension). For d = 1 this is
  /// the image of the chosen linear modulus root, i.e. from_int of it.
  Elt gen() const { return gen_; }
  /// A fixed generator of the multiplicative group.
  Elt primitive() const { return primitive_; }

  Elt add(Elt a, Elt b) const;
  Elt sub(Elt a, Elt b) const;
  Elt neg(Elt a) const;
  Elt mul(Elt a, Elt b) const;
  Elt inv(Elt a) const;
  Elt pow(Elt a, std::int64_t e) const;
  /// Frobenius power x -> x^(p^i).
  Elt frobenius(Elt a, std::uint32_t i) const;

  bool is_zero(Elt a) const { return a == 0; }

  /// Coefficients of the element, low-to-high, length d.
  std::vector<std::uint32_t> decode(Elt a) const;
  Elt encode(const std::vector<std::uint32_t>& coeffs) const;

  // Raw table access for hot loops. mul_row(a)[b] == mul(a,b), valid only
  // when tables_available().
  bool tables_available() const { return !mul_table_.empty(); }
  const Elt* mul_row(Elt a) const { return mul_table_.data() + std::size_t(a) * q_; }
  const Elt* add_row(Elt a) const { return add_table_.data() + std::size_t(a) * q_; }
  const Elt* neg_table() const { return neg_table_.data(); }

private:
  friend const FiniteField& field(std::uint32_t p, std::uint32_t d);
  FiniteField(std::uint32_t p, std::uint32_t d);

  std::uint32_t p_, d_, q_;
  std::vector<std::uint32_t> modulus_;
  Elt one_, gen_, primitive_;

  // log/exp tables over the multiplicative group; always present.
  std::vector<std::uint32_t> exp_, log_;
  // full q x q tables for small fields.
  std::vector<Elt> mul_table_, add_table_, neg_table_, inv_table_;

  Elt add_slow(Elt a, Elt b) const;
  Elt mul_via_log(Elt a, Elt b) const;
};

/// Largest field this library will construct.
constexpr std::uint64_t kMaxFieldOrder = 531441;  // 3^12

/// Interned field registry. Throws InputError for non-prime p, d = 0, or
/// p^d over the bound.
const FiniteField& field(std::uint32_t p, std::uint32_t d);

/// x -> x^(p^exponent) on a fixed field. exponent lives mod d.
struct FieldAut {
  const FiniteField* fld = nullptr;
  std::uint32_t exponent = 0;

  FiniteField::Elt apply(FiniteField::Elt a) const { return fld->frobenius(a, exponent); }
  bool is_identity() const { return exponent % fld->degree() == 0; }
  FieldAut compose(const FieldAut& other) const;  // this after other
  FieldAut inverse() const;
  bool operator==(const FieldAut& o) const {
    return fld == o.fld && exponent % fld->degree() == o.exponent % o.fld->degree();
  }
};

/// Ring embedding GF(p^a) -> GF(p^b) for a | b, sending the canonical
/// generator of the small field to the least root of its modulus in the
/// large field.
class SubfieldEmbedding {
public:
  SubfieldEmbedding() = default;
  SubfieldEmbedding(const FiniteField& small, const FiniteField& large);

  const FiniteField& small() const { return *small_; }
  const FiniteField& large() const { return *large_; }
  FiniteField::Elt gen_image() const { return gen_image_; }

  FiniteField::Elt apply(FiniteField::Elt a) const;
  /// Inverse on the image; nullopt if y is not in the embedded subfield.
  std::optional<FiniteField::Elt> preimage(FiniteField::Elt y) const;
  bool in_image(FiniteField::Elt y) const { return preimage(y).has_value(); }

private:
  const FiniteField* small_ = nullptr;
  const FiniteField* large_ = nullptr;
  FiniteField::Elt gen_image_ = 0;
  // images of the small power basis 1, g, g^2, ... in the large field
  std::vector<FiniteField::Elt> basis_images_;
};

/// Cached canonical embedding; requires small.degree() | large.degree() and
/// equal characteristic.
const SubfieldEmbedding& embedding(const FiniteField& small, const FiniteField& large);

/// Gal(large/small): cyclic, generated by x -> x^|small|, listed as powers of
/// that generator starting with the identity. Length [large : small].
std::vector<FieldAut> galois_group(const FiniteField& large, const FiniteField& small);
std::vector<FieldAut> galois_group(const FiniteField& large, std::uint32_t small_degree);

/// The intermediate field fixed by a subgroup of Gal(large/prime field),
/// with its embedding into the large field. Throws InputError if the input
/// is not closed under composition.
struct FixedField {
  const FiniteField* fixed;
  SubfieldEmbedding into_large;
};
FixedField stabilizer_fixed_field(const std::vector<FieldAut>& subgroup);

}  // namespace blockdesc

#endif
