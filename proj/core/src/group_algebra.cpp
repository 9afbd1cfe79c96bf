#include "blockdesc/group_algebra.hpp"

#include <algorithm>

#include "blockdesc/algebra.hpp"
#include "blockdesc/errors.hpp"

namespace blockdesc {

namespace {

void check_compatible(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.k != b.k || a.G != b.G)
    throw InputError("group algebra elements over different algebras");
}

}  // namespace

AlgebraElement ae_zero(const FiniteField& k, GroupPtr G) {
  return AlgebraElement{&k, G, Vec(G->order(), 0)};
}

AlgebraElement ae_one(const FiniteField& k, GroupPtr G) {
  auto a = ae_zero(k, G);
  a.coeffs[0] = k.one();
  return a;
}

AlgebraElement ae_add(const AlgebraElement& a, const AlgebraElement& b) {
  check_compatible(a, b);
  AlgebraElement c = a;
  for (std::size_t i = 0; i < c.coeffs.size(); ++i) c.coeffs[i] = a.k->add(a.coeffs[i], b.coeffs[i]);
  return c;
}

AlgebraElement ae_sub(const AlgebraElement& a, const AlgebraElement& b) {
  check_compatible(a, b);
  AlgebraElement c = a;
  for (std::size_t i = 0; i < c.coeffs.size(); ++i) c.coeffs[i] = a.k->sub(a.coeffs[i], b.coeffs[i]);
  return c;
}

AlgebraElement ae_mul(const AlgebraElement& a, const AlgebraElement& b) {
  check_compatible(a, b);
  const FiniteField& k = *a.k;
  AlgebraElement c = ae_zero(k, a.G);
  const auto& G = *a.G;
  for (std::uint32_t g = 0; g < G.order(); ++g) {
    if (a.coeffs[g] == 0) continue;
    for (std::uint32_t h = 0; h < G.order(); ++h) {
      if (b.coeffs[h] == 0) continue;
      std::uint32_t gh = G.mul(g, h);
      c.coeffs[gh] = k.add(c.coeffs[gh], k.mul(a.coeffs[g], b.coeffs[h]));
    }
  }
  return c;
}

AlgebraElement ae_scale(const AlgebraElement& a, Elt c) {
  AlgebraElement r = a;
  for (auto& x : r.coeffs) x = a.k->mul(x, c);
  return r;
}

AlgebraElement ae_conj(const AlgebraElement& a, std::uint32_t g) {
  AlgebraElement r = ae_zero(*a.k, a.G);
  for (std::uint32_t x = 0; x < a.G->order(); ++x)
    if (a.coeffs[x] != 0) r.coeffs[a.G->conj(g, x)] = a.coeffs[x];
  return r;
}

bool ae_is_central(const AlgebraElement& a) {
  for (std::uint32_t g = 0; g < a.G->order(); ++g)
    if (!(ae_conj(a, g) == a)) return false;
  return true;
}

bool ae_is_idempotent(const AlgebraElement& a) { return ae_mul(a, a) == a; }

AlgebraElement galois_act(const FieldAut& s, const AlgebraElement& a) {
  if (s.fld != a.k) throw InputError("galois_act: automorphism of a different field");
  AlgebraElement r = a;
  for (auto& c : r.coeffs) c = s.apply(c);
  return r;
}

std::vector<FieldAut> stab_gamma(const std::vector<FieldAut>& gamma, const AlgebraElement& a) {
  std::vector<FieldAut> st;
  for (const auto& s : gamma)
    if (galois_act(s, a) == a) st.push_back(s);
  return st;
}

AlgebraElement trace_gamma(const std::vector<FieldAut>& gamma, const AlgebraElement& a) {
  std::vector<AlgebraElement> distinct;
  for (const auto& s : gamma) {
    auto img = galois_act(s, a);
    if (std::find(distinct.begin(), distinct.end(), img) == distinct.end())
      distinct.push_back(std::move(img));
  }
  AlgebraElement sum = ae_zero(*a.k, a.G);
  for (const auto& d : distinct) sum = ae_add(sum, d);
  return sum;
}

AlgebraElement ae_map_field(const AlgebraElement& a, const SubfieldEmbedding& e) {
  if (&e.small() != a.k) throw InputError("ae_map_field: wrong source field");
  AlgebraElement r{&e.large(), a.G, Vec(a.coeffs.size(), 0)};
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) r.coeffs[i] = e.apply(a.coeffs[i]);
  return r;
}

std::optional<AlgebraElement> ae_restrict_field(const AlgebraElement& a,
                                                const SubfieldEmbedding& e) {
  if (&e.large() != a.k) throw InputError("ae_restrict_field: wrong source field");
  AlgebraElement r{&e.small(), a.G, Vec(a.coeffs.size(), 0)};
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    auto pre = e.preimage(a.coeffs[i]);
    if (!pre) return std::nullopt;
    r.coeffs[i] = *pre;
  }
  return r;
}

std::vector<AlgebraElement> center_basis(const FiniteField& k, GroupPtr G) {
  std::vector<AlgebraElement> out;
  for (const auto& cls : G->conjugacy_classes()) {
    AlgebraElement s = ae_zero(k, G);
    for (auto e : cls) s.coeffs[e] = k.one();
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<AlgebraElement> split_commutative_subalgebra(const std::vector<AlgebraElement>& basis,
                                                         const AlgebraElement& unit) {
  if (basis.empty()) throw InputError("split_commutative_subalgebra: empty basis");
  const FiniteField& k = *basis[0].k;
  GroupPtr G = basis[0].G;
  SpanIndex idx(k, G->order());
  std::vector<AlgebraElement> indep;
  for (const auto& b : basis)
    if (idx.insert(b.coeffs)) indep.push_back(b);
  std::size_t s = indep.size();
  // multiplication operators on the span give a faithful matrix realization;
  // rebuild the index so coordinate slots line up with indep exactly
  SpanIndex idx2(k, G->order());
  for (const auto& b : indep) idx2.insert(b.coeffs);
  MatrixAlgebra alg;
  alg.F = &k;
  alg.n = s;
  for (std::size_t i = 0; i < s; ++i) {
    Mat L(k, s, s);
    for (std::size_t j = 0; j < s; ++j) {
      auto c = idx2.coords(ae_mul(indep[i], indep[j]).coeffs);
      if (!c) throw InputError("split_commutative_subalgebra: span not closed");
      for (std::size_t t = 0; t < s; ++t) L.at(t, j) = (*c)[t];
    }
    alg.basis.push_back(L);
  }
  auto uc = idx2.coords(unit.coeffs);
  if (!uc) throw InputError("split_commutative_subalgebra: unit outside span");
  Mat U(k, s, s);
  for (std::size_t i = 0; i < s; ++i)
    if ((*uc)[i] != 0) U = U + scale(alg.basis[i], (*uc)[i]);
  alg.unit = U;

  Rng rng(0);  // commutative path is deterministic; the seed is never consulted
  auto idem_mats = split_primitive_idempotents(alg, rng);
  std::vector<AlgebraElement> out;
  for (const auto& m : idem_mats) {
    Vec coords = mat_vec(m, *uc);
    AlgebraElement e = ae_zero(k, G);
    for (std::size_t i = 0; i < s; ++i)
      if (coords[i] != 0) e = ae_add(e, ae_scale(indep[i], coords[i]));
    out.push_back(std::move(e));
  }
  std::sort(out.begin(), out.end(),
            [](const AlgebraElement& x, const AlgebraElement& y) { return x.coeffs < y.coeffs; });
  return out;
}

std::vector<BlockIdempotent> block_idempotents(const FiniteField& k, GroupPtr G) {
  auto zb = center_basis(k, G);
  auto idems = split_commutative_subalgebra(zb, ae_one(k, G));
  std::vector<BlockIdempotent> out;
  for (auto& e : idems) out.push_back(BlockIdempotent{std::move(e)});
  return out;
}

bool is_block_of(const FiniteField& k, GroupPtr G, const AlgebraElement& e) {
  if (e.k != &k || e.G != G) return false;
  if (e.is_zero() || !ae_is_idempotent(e) || !ae_is_central(e)) return false;
  for (const auto& b : block_idempotents(k, G))
    if (b.elt == e) return true;
  return false;
}

BlocksAboveReport blocks_above(const AlgebraElement& b, const FiniteField& kprime) {
  const FiniteField& k = *b.k;
  const auto& emb = embedding(k, kprime);
  AlgebraElement bp = ae_map_field(b, emb);
  // split b * Z(k'G), a commutative algebra with unit b
  auto zb = center_basis(kprime, b.G);
  std::vector<AlgebraElement> cut;
  for (const auto& z : zb) cut.push_back(ae_mul(bp, z));
  auto idems = split_commutative_subalgebra(cut, bp);

  BlocksAboveReport rep;
  for (auto& e : idems)
    if (!e.is_zero()) rep.blocks.push_back(BlockIdempotent{e});

  auto gamma = galois_group(kprime, k);
  std::size_t nb = rep.blocks.size();
  rep.orbit_of.assign(nb, nb);
  std::size_t norbits = 0;
  for (std::size_t i = 0; i < nb; ++i) {
    if (rep.orbit_of[i] != nb) continue;
    std::size_t oid = norbits++;
    for (const auto& s : gamma) {
      auto img = galois_act(s, rep.blocks[i].elt);
      for (std::size_t j = 0; j < nb; ++j)
        if (rep.orbit_of[j] == nb && rep.blocks[j].elt == img) rep.orbit_of[j] = oid;
    }
  }
  rep.transitive = norbits <= 1;
  for (const auto& blk : rep.blocks) rep.stabilizers.push_back(stab_gamma(gamma, blk.elt));
  rep.stabilizers_all_equal = true;
  for (std::size_t i = 1; i < rep.stabilizers.size(); ++i)
    if (rep.stabilizers[i].size() != rep.stabilizers[0].size()) rep.stabilizers_all_equal = false;
  rep.fiber_size = nb;
  // the paper's equal-fiber statement: the fibers over each k-block in one
  // Galois orbit of k-blocks agree; verify over every k-block of kG
  auto base_blocks = block_idempotents(k, b.G);
  auto all_above = block_idempotents(kprime, b.G);
  std::vector<std::size_t> fibers;
  for (const auto& bb : base_blocks) {
    AlgebraElement bbp = ae_map_field(bb.elt, emb);
    std::size_t cnt = 0;
    for (const auto& ab : all_above)
      if (!ae_mul(ab.elt, bbp).is_zero()) ++cnt;
    fibers.push_back(cnt);
  }
  rep.fibers_equal = true;
  auto gamma0 = galois_group(k, field(k.p(), 1));
  for (std::size_t i = 0; i < base_blocks.size(); ++i)
    for (std::size_t j = 0; j < base_blocks.size(); ++j) {
      bool same_orbit = false;
      for (const auto& s : gamma0)
        if (galois_act(s, base_blocks[i].elt) == base_blocks[j].elt) same_orbit = true;
      if (same_orbit && fibers[i] != fibers[j]) rep.fibers_equal = false;
    }
  return rep;
}

AlgebraElement ae_embed_subgroup(const AlgebraElement& a, const SubgroupAsGroup& N, GroupPtr G) {
  if (a.G != N.grp) throw InputError("ae_embed_subgroup: element not over the subgroup");
  AlgebraElement r = ae_zero(*a.k, G);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i)
    if (a.coeffs[i] != 0) r.coeffs[N.to_parent[i]] = a.coeffs[i];
  return r;
}

AlgebraElement ae_truncate_to(const AlgebraElement& a, const SubgroupAsGroup& H) {
  AlgebraElement r = ae_zero(*a.k, H.grp);
  for (std::size_t i = 0; i < H.to_parent.size(); ++i) r.coeffs[i] = a.coeffs[H.to_parent[i]];
  return r;
}

ConjugationOrbit conjugation_orbit(const AlgebraElement& e_over_N, const SubgroupAsGroup& N,
                                   GroupPtr G) {
  AlgebraElement e = ae_embed_subgroup(e_over_N, N, G);
  if (!ae_is_idempotent(e)) throw InputError("conjugation_orbit: input is not an idempotent");
  ConjugationOrbit out;
  std::vector<std::uint32_t> stab_elems;
  std::vector<AlgebraElement> orbit;
  for (std::uint32_t g = 0; g < G->order(); ++g) {
    auto img = ae_conj(e, g);
    if (img == e) stab_elems.push_back(g);
    if (std::find(orbit.begin(), orbit.end(), img) == orbit.end()) orbit.push_back(img);
  }
  out.stabilizer = make_subgroup(G, stab_elems);
  out.orbit_sum = ae_zero(*e.k, G);
  for (const auto& x : orbit) out.orbit_sum = ae_add(out.orbit_sum, x);
  out.orbit = std::move(orbit);
  if (!ae_is_central(out.orbit_sum) || !ae_is_idempotent(out.orbit_sum))
    throw InternalInconsistency("orbit sum is not a central idempotent");
  return out;
}

BrauerImage brauer_map(const AlgebraElement& a, const Subgroup& P) {
  if (P.parent != a.G) throw InputError("brauer_map: subgroup of a different group");
  for (auto p : P.elems)
    if (!(ae_conj(a, p) == a)) throw InputError("brauer_map: element is not P-fixed");
  Subgroup c = centralizer(P.parent, P.elems);
  BrauerImage img;
  img.centralizer = subgroup_as_group(c);
  img.value = ae_truncate_to(a, img.centralizer);
  return img;
}

namespace {

// basis of (kG)^D: D-conjugation orbit sums
std::vector<AlgebraElement> fixed_point_basis(const FiniteField& k, GroupPtr G,
                                              const Subgroup& D) {
  std::vector<char> seen(G->order(), 0);
  std::vector<AlgebraElement> out;
  for (std::uint32_t g = 0; g < G->order(); ++g) {
    if (seen[g]) continue;
    AlgebraElement s = ae_zero(k, G);
    for (auto d : D.elems) {
      std::uint32_t x = G->conj(d, g);
      if (!seen[x]) {
        seen[x] = 1;
        s.coeffs[x] = k.one();
      }
    }
    out.push_back(std::move(s));
  }
  return out;
}

AlgebraElement relative_trace(const AlgebraElement& v, const Subgroup& D) {
  GroupPtr G = v.G;
  auto cosets = left_cosets(G, D);
  AlgebraElement out = ae_zero(*v.k, G);
  for (auto r : cosets.reps) out = ae_add(out, ae_conj(v, r));
  return out;
}

}  // namespace

Subgroup defect_group(const AlgebraElement& b) {
  const FiniteField& k = *b.k;
  GroupPtr G = b.G;
  auto reps = p_subgroups_up_to_conjugacy(G, k.p());
  for (const auto& D : reps) {
    SpanIndex image(k, G->order());
    for (const auto& v : fixed_point_basis(k, G, D)) image.insert(relative_trace(v, D).coeffs);
    if (image.contains(b.coeffs)) return D;
  }
  throw InternalInconsistency("defect_group: no subgroup admits b in its relative trace image");
}

BrauerCorrespondent brauer_correspondent(const AlgebraElement& b, const Subgroup& H) {
  return brauer_correspondent(b, H, subgroup_as_group(H));
}

BrauerCorrespondent brauer_correspondent(const AlgebraElement& b, const Subgroup& H,
                                         const SubgroupAsGroup& Hsa) {
  const FiniteField& k = *b.k;
  GroupPtr G = b.G;
  Subgroup D = defect_group(b);
  Subgroup ND = normalizer(D);
  for (auto e : ND.elems)
    if (!H.contains(e)) throw InputError("brauer_correspondent: H does not contain N_G(D)");

  auto h_blocks = block_idempotents(k, Hsa.grp);
  BrauerImage bb = brauer_map(b, D);
  AlgebraElement brb = ae_embed_subgroup(bb.value, bb.centralizer, G);

  std::vector<BlockIdempotent> candidates;
  for (const auto& c : h_blocks) {
    Subgroup Dc_in_H = defect_group(c.elt);
    std::vector<std::uint32_t> dc_parent;
    for (auto e : Dc_in_H.elems) dc_parent.push_back(Hsa.to_parent[e]);
    Subgroup Dc = make_subgroup(G, dc_parent);
    if (Dc.order() != D.order() || !conjugate_subgroups(Dc, D)) continue;
    AlgebraElement c_in_G = ae_embed_subgroup(c.elt, Hsa, G);
    bool d_fixed = true;
    for (auto d : D.elems)
      if (!(ae_conj(c_in_G, d) == c_in_G)) {
        d_fixed = false;
        break;
      }
    if (!d_fixed) continue;
    BrauerImage bc = brauer_map(c_in_G, D);
    AlgebraElement brc = ae_embed_subgroup(bc.value, bc.centralizer, G);
    if (!ae_mul(brb, brc).is_zero()) candidates.push_back(c);
  }
  if (candidates.size() != 1)
    throw InternalInconsistency("brauer_correspondent: " + std::to_string(candidates.size()) +
                                " candidates (expected exactly one)");
  return BrauerCorrespondent{Hsa, candidates[0]};
}

}  // namespace blockdesc
