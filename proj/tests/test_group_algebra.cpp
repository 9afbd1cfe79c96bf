#include "doctest.h"

#include "blockdesc/errors.hpp"
#include "blockdesc/group_algebra.hpp"
#include "test_groups_common.hpp"

using namespace blockdesc;
using namespace bdtest;

namespace {

// exhaustive oracle: all primitive central idempotents, by scanning every
// central element when the center is small enough
std::vector<AlgebraElement> brute_force_blocks(const FiniteField& k, GroupPtr G) {
  auto zb = center_basis(k, G);
  std::size_t c = zb.size();
  double total = 1;
  for (std::size_t i = 0; i < c; ++i) total *= k.order();
  if (total > 7000) throw std::runtime_error("oracle: center too large");
  std::vector<AlgebraElement> idems;
  std::vector<Elt> coef(c, 0);
  auto bump = [&]() {
    for (std::size_t i = 0; i < c; ++i) {
      if (++coef[i] < k.order()) return true;
      coef[i] = 0;
    }
    return false;
  };
  do {
    AlgebraElement z = ae_zero(k, G);
    for (std::size_t i = 0; i < c; ++i)
      if (coef[i] != 0) z = ae_add(z, ae_scale(zb[i], coef[i]));
    if (!z.is_zero() && ae_is_idempotent(z)) idems.push_back(z);
  } while (bump());
  // primitive = no proper idempotent below it: e*f = f and f != e, f != 0
  std::vector<AlgebraElement> prims;
  for (const auto& e : idems) {
    bool primitive = true;
    for (const auto& f : idems) {
      if (f == e) continue;
      if (ae_mul(e, f) == f) {
        primitive = false;
        break;
      }
    }
    if (primitive) prims.push_back(e);
  }
  std::sort(prims.begin(), prims.end(),
            [](const AlgebraElement& x, const AlgebraElement& y) { return x.coeffs < y.coeffs; });
  return prims;
}

}  // namespace

TEST_CASE("center basis sizes") {
  CHECK(center_basis(field(2, 1), s3()).size() == 3);
  CHECK(center_basis(field(3, 1), frob21()).size() == 5);
  CHECK(center_basis(field(2, 2), c3()).size() == 3);
}

TEST_CASE("blocks of GF(2)C_3 are 1+x+x^2 and x+x^2") {
  const auto& k = field(2, 1);
  auto blocks = block_idempotents(k, c3());
  REQUIRE(blocks.size() == 2);
  // sorted by coefficient vector: [0,1,1] then [1,1,1]
  CHECK(blocks[0].elt.coeffs == Vec{0, 1, 1});
  CHECK(blocks[1].elt.coeffs == Vec{1, 1, 1});
  // oracle agreement
  auto oracle = brute_force_blocks(k, c3());
  REQUIRE(oracle.size() == 2);
  CHECK(oracle[0].coeffs == blocks[0].elt.coeffs);
  CHECK(oracle[1].coeffs == blocks[1].elt.coeffs);
}

TEST_CASE("blocks of GF(4)C_3 are the three character idempotents") {
  const auto& k = field(2, 2);
  Elt w = k.gen(), w2 = k.mul(w, w);
  // 1 + w + w^2 = 0 certifies the expected sum identity
  CHECK(k.add(k.add(k.one(), w), w2) == 0);
  auto blocks = block_idempotents(k, c3());
  REQUIRE(blocks.size() == 3);
  std::vector<Vec> expect{{1, 1, 1}, {1, w, w2}, {1, w2, w}};
  std::sort(expect.begin(), expect.end());
  for (std::size_t i = 0; i < 3; ++i) CHECK(blocks[i].elt.coeffs == expect[i]);
  // partition of unity, orthogonal
  AlgebraElement sum = ae_zero(k, blocks[0].elt.G);
  for (const auto& b : blocks) sum = ae_add(sum, b.elt);
  CHECK(sum == ae_one(k, blocks[0].elt.G));
  CHECK(ae_mul(blocks[0].elt, blocks[1].elt).is_zero());
}

TEST_CASE("blocks of GF(3)(C_7:C_3): oracle count") {
  // Phi_7 is irreducible over GF(3) (3 has order 6 mod 7), so kC_7 has two
  // blocks and Frobenius swaps the two non-principal split blocks of kG;
  // the exhaustive oracle is the arbiter of the count.
  const auto& k = field(3, 1);
  auto g = frob21();
  auto blocks = block_idempotents(k, g);
  auto oracle = brute_force_blocks(k, g);
  REQUIRE(blocks.size() == oracle.size());
  for (std::size_t i = 0; i < blocks.size(); ++i) CHECK(blocks[i].elt == oracle[i]);
  CHECK(blocks.size() == 2);
}

TEST_CASE("blocks of GF(9)(C_7:C_3) and GF(729)(C_7:C_3) number 3") {
  auto g = frob21();
  CHECK(block_idempotents(field(3, 2), g).size() == 3);
  auto blocks = block_idempotents(field(3, 6), g);
  CHECK(blocks.size() == 3);
  // the two non-principal blocks are each a sum of three GF(729)C_7 blocks
  auto n = sylow_subgroup(g, 7);
  auto nsa = subgroup_as_group(n);
  auto nblocks = block_idempotents(field(3, 6), nsa.grp);
  REQUIRE(nblocks.size() == 7);
  std::uint32_t principal_seen = 0;
  for (const auto& b : blocks) {
    std::size_t cnt = 0;
    for (const auto& e : nblocks) {
      auto e_in_g = ae_embed_subgroup(e.elt, nsa, g);
      if (!ae_mul(b.elt, e_in_g).is_zero()) ++cnt;
    }
    if (cnt == 1)
      ++principal_seen;
    else
      CHECK(cnt == 3);
  }
  CHECK(principal_seen == 1);
}

TEST_CASE("galois action on GF(4)C_3 block idempotents") {
  const auto& k = field(2, 2);
  Elt w = k.gen(), w2 = k.mul(w, w);
  auto G = c3();
  AlgebraElement e_w{&k, G, {1, w2, w}};    // 1 + w^2 x + w x^2
  AlgebraElement e_w2{&k, G, {1, w, w2}};
  auto gamma = galois_group(k, field(2, 1));
  REQUIRE(gamma.size() == 2);
  // Frobenius sends e_w to e_{w^2} (coefficientwise squaring)
  CHECK(galois_act(gamma[1], e_w) == e_w2);
  // trace collapses the orbit: e_w + e_{w^2} = x + x^2
  auto tr = trace_gamma(gamma, e_w);
  CHECK(tr.coeffs == Vec{0, 1, 1});
  // stabilizer of the Frobenius-stable block is all of gamma
  AlgebraElement stable{&k, G, {1, 1, 1}};
  CHECK(stab_gamma(gamma, stable).size() == 2);
  CHECK(trace_gamma(gamma, stable) == stable);
  // stab of trace is always full
  CHECK(stab_gamma(gamma, tr).size() == gamma.size());
}

TEST_CASE("blocks_above for GF(2)C_3 to GF(4)") {
  const auto& k = field(2, 1);
  auto G = c3();
  AlgebraElement b{&k, G, {0, 1, 1}};  // x + x^2
  auto rep = blocks_above(b, field(2, 2));
  CHECK(rep.blocks.size() == 2);
  CHECK(rep.transitive);
  CHECK(rep.stabilizers_all_equal);
  CHECK(rep.stabilizers[0].size() == 1);  // trivial stabilizer
  CHECK(rep.fibers_equal);
  // principal block stays a single block
  AlgebraElement prin{&k, G, {1, 1, 1}};
  auto rep2 = blocks_above(prin, field(2, 2));
  CHECK(rep2.blocks.size() == 1);
  CHECK(rep2.transitive);
}

TEST_CASE("blocks_above for the non-principal GF(3)(C_7:C_3) block to GF(729)") {
  const auto& k = field(3, 1);
  auto g = frob21();
  auto blocks = block_idempotents(k, g);
  REQUIRE(blocks.size() == 2);
  // the non-principal block: not the one with constant coefficients on 1
  // (identify principal as the block with nonzero coefficient at identity
  // equal across... simpler: principal contains 1/|G|-ish support; take the
  // one whose product with the trivial-character central idempotent..."
  // identify by defect: principal has defect C_3, the other defect trivial?
  // both orbit-blocks fused have defect... identify principal by acting on
  // the trivial module: coefficient sum = 1.
  std::size_t prin_idx = 2;
  for (std::size_t i = 0; i < 2; ++i) {
    Elt s = 0;
    for (Elt c : blocks[i].elt.coeffs) s = k.add(s, c);
    if (s == k.one()) prin_idx = i;  // augmentation(e) = 1 exactly for the principal
  }
  REQUIRE(prin_idx < 2);
  const auto& nonprin = blocks[1 - prin_idx].elt;
  auto rep = blocks_above(nonprin, field(3, 6));
  CHECK(rep.blocks.size() == 2);
  CHECK(rep.transitive);
  CHECK(rep.stabilizers_all_equal);
  // stabilizer has index 2 in the order-6 Galois group: order 3
  CHECK(rep.stabilizers[0].size() == 3);
  // field of realization = fixed field of the stabilizer = GF(9)
  auto ff = stabilizer_fixed_field(rep.stabilizers[0]);
  CHECK(ff.fixed->order() == 9);
}

TEST_CASE("conjugation orbit of kN blocks") {
  // G = S_3, N = A_3, k = GF(4), e = e_w: stabilizer A_3, orbit sum e_w+e_w2
  const auto& k = field(2, 2);
  auto g = s3();
  auto n = p_core_complement(g, 2).first;
  auto nsa = subgroup_as_group(n);
  auto nblocks = block_idempotents(k, nsa.grp);
  REQUIRE(nblocks.size() == 3);
  // find a non-principal one (nontrivial coefficients)
  for (const auto& e : nblocks) {
    bool prime_field = true;
    for (Elt c : e.elt.coeffs)
      if (c > 1) prime_field = false;
    if (prime_field) continue;
    auto orb = conjugation_orbit(e.elt, nsa, g);
    CHECK(orb.stabilizer.order() == 3);  // A_3
    CHECK(orb.orbit.size() == 2);
    CHECK(ae_is_central(orb.orbit_sum));
    break;
  }
  // principal block of kN: stabilizer is all of G
  for (const auto& e : nblocks) {
    bool prime_field = true;
    for (Elt c : e.elt.coeffs)
      if (c > 1) prime_field = false;
    if (!prime_field) continue;
    Elt s = 0;
    for (Elt c : e.elt.coeffs) s = k.add(s, c);
    if (s != k.one()) continue;
    auto orb = conjugation_orbit(e.elt, nsa, g);
    CHECK(orb.stabilizer.order() == 6);
    CHECK(orb.orbit.size() == 1);
  }
}

TEST_CASE("brauer_map basics") {
  const auto& k = field(3, 1);
  auto g = frob21();
  // P = 1: identity map
  auto one = ae_one(k, g);
  AlgebraElement a = one;
  a.coeffs[3] = 2;
  a = ae_add(a, ae_conj(a, 1));  // make it something nontrivial
  auto trivial = trivial_subgroup(g);
  // any element is 1-fixed
  AlgebraElement sym = ae_zero(k, g);
  for (std::uint32_t e = 0; e < g->order(); ++e) sym.coeffs[e] = 1;
  auto img = brauer_map(sym, trivial);
  CHECK(img.centralizer.grp->order() == g->order());
  // Br_Q(principal) is nonzero in kC_G(Q) = kQ
  auto blocks = block_idempotents(k, g);
  std::size_t prin_idx = 0;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    Elt s = 0;
    for (Elt c : blocks[i].elt.coeffs) s = k.add(s, c);
    if (s == k.one()) prin_idx = i;
  }
  auto q = sylow_subgroup(g, 3);
  auto bimg = brauer_map(blocks[prin_idx].elt, q);
  CHECK(bimg.centralizer.grp->order() == 3);  // C_G(Q) = Q
  CHECK(!bimg.value.is_zero());
  // non-fixed element rejected
  AlgebraElement bad = ae_zero(k, g);
  bad.coeffs[1] = 1;  // a 7-element, not Q-fixed
  CHECK_THROWS_AS(brauer_map(bad, q), InputError);
}

TEST_CASE("Br_P of a defect-zero block vanishes for P = Sylow") {
  const auto& k = field(3, 6);
  auto g = frob21();
  auto blocks = block_idempotents(k, g);
  REQUIRE(blocks.size() == 3);
  auto q = sylow_subgroup(g, 3);
  std::size_t defect_zero_seen = 0;
  for (const auto& b : blocks) {
    auto d = defect_group(b.elt);
    if (d.order() == 1) {
      ++defect_zero_seen;
      auto img = brauer_map(b.elt, q);
      CHECK(img.value.is_zero());
    }
  }
  CHECK(defect_zero_seen == 2);
}

TEST_CASE("defect groups") {
  // block of a p'-group algebra: trivial defect
  const auto& k3 = field(3, 1);
  auto blocks_c2 = block_idempotents(k3, c2());
  for (const auto& b : blocks_c2) CHECK(defect_group(b.elt).order() == 1);
  // principal block of GF(3)(C_7:C_3): defect C_3
  auto g = frob21();
  auto blocks = block_idempotents(k3, g);
  for (const auto& b : blocks) {
    Elt s = 0;
    for (Elt c : b.elt.coeffs) s = k3.add(s, c);
    if (s == k3.one()) CHECK(defect_group(b.elt).order() == 3);
  }
  // principal block of GF(2)S_3: defect C_2 = Sylow
  const auto& k2 = field(2, 1);
  auto s3g = s3();
  for (const auto& b : block_idempotents(k2, s3g)) {
    Elt s = 0;
    for (Elt c : b.elt.coeffs) s = k2.add(s, c);
    if (s == k2.one()) CHECK(defect_group(b.elt).order() == 2);
  }
}

TEST_CASE("principal block defect equals Sylow order for the catalog") {
  for (auto [gp, p] : {std::pair<GroupPtr, std::uint32_t>{s3(), 2},
                       {s3(), 3},
                       {frob21(), 3},
                       {sl23(), 3},
                       {a4(), 2},
                       {dic3(), 2}}) {
    const auto& k = field(p, 1);
    auto blocks = block_idempotents(k, gp);
    bool found = false;
    for (const auto& b : blocks) {
      Elt s = 0;
      for (Elt c : b.elt.coeffs) s = k.add(s, c);
      if (s == k.one()) {
        CHECK(defect_group(b.elt).order() == p_part(gp->order(), p));
        found = true;
      }
    }
    CHECK(found);
  }
}

TEST_CASE("brauer correspondent: H = G returns b") {
  const auto& k = field(3, 1);
  auto g = frob21();
  auto blocks = block_idempotents(k, g);
  for (const auto& b : blocks) {
    auto c = brauer_correspondent(b.elt, full_subgroup(g));
    // the correspondent lives over a standalone copy of G with the same
    // element order, so compare coefficient vectors
    CHECK(c.block.elt.coeffs == b.elt.coeffs);
  }
}

TEST_CASE("brauer correspondent of the principal GF(3)(C_7:C_3) block in N_G(Q)") {
  const auto& k = field(3, 1);
  auto g = frob21();
  auto blocks = block_idempotents(k, g);
  std::size_t prin = 0;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    Elt s = 0;
    for (Elt c : blocks[i].elt.coeffs) s = k.add(s, c);
    if (s == k.one()) prin = i;
  }
  auto q = sylow_subgroup(g, 3);
  auto h = normalizer(q);
  REQUIRE(h.order() == 3);
  auto c = brauer_correspondent(blocks[prin].elt, h).block;
  // kC_3 in characteristic 3 is local: its unique block is 1
  Elt one_coeff = c.elt.coeffs[0];
  CHECK(one_coeff == k.one());
  Elt total = 0;
  for (Elt x : c.elt.coeffs) total = k.add(total, x);
  CHECK(c.elt.coeffs == Vec{1, 0, 0});
  (void)total;
}

TEST_CASE("brauer correspondent of the faithful SL(2,3) block is non-principal in kC_6") {
  const auto& k = field(3, 1);
  auto g = sl23();
  auto blocks = block_idempotents(k, g);
  REQUIRE(blocks.size() == 3);
  auto q = sylow_subgroup(g, 3);
  auto h = normalizer(q);
  REQUIRE(h.order() == 6);
  // the faithful block: non-principal with defect of order 3
  std::size_t prin = blocks.size(), faithful = blocks.size();
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    Elt s = 0;
    for (Elt c : blocks[i].elt.coeffs) s = k.add(s, c);
    auto d = defect_group(blocks[i].elt);
    if (s == k.one())
      prin = i;
    else if (d.order() == 3)
      faithful = i;
  }
  REQUIRE(prin < blocks.size());
  REQUIRE(faithful < blocks.size());
  auto c_prin = brauer_correspondent(blocks[prin].elt, h).block;
  auto c_faith = brauer_correspondent(blocks[faithful].elt, h).block;
  CHECK(!(c_prin.elt == c_faith.elt));
  // kC_6 has exactly two blocks in characteristic 3 and the principal block
  // goes to the principal correspondent (augmentation 1)
  Elt s = 0;
  for (Elt c : c_prin.elt.coeffs) s = k.add(s, c);
  CHECK(s == k.one());
  Elt s2 = 0;
  for (Elt c : c_faith.elt.coeffs) s2 = k.add(s2, c);
  CHECK(s2 != k.one());
}

TEST_CASE("galois compatibility: blocks over k' trace to blocks over k") {
  // b~ = tr_Gamma(b') identity on GF(4)C_3 over GF(2)
  const auto& k = field(2, 1);
  const auto& kp = field(2, 2);
  auto G = c3();
  auto gamma = galois_group(kp, k);
  auto blocks_k = block_idempotents(k, G);
  auto blocks_kp = block_idempotents(kp, G);
  const auto& emb = embedding(k, kp);
  for (const auto& bp : blocks_kp) {
    auto tr = trace_gamma(gamma, bp.elt);
    auto restricted = ae_restrict_field(tr, emb);
    REQUIRE(restricted.has_value());
    bool found = false;
    for (const auto& b : blocks_k)
      if (b.elt == *restricted) found = true;
    CHECK(found);
  }
}
