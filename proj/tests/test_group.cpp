#include "doctest.h"

#include <numeric>

#include "blockdesc/errors.hpp"
#include "blockdesc/group.hpp"

using namespace blockdesc;

namespace {

GroupPtr c3() { return Group::from_perm_gens({{2, 3, 1}}); }
GroupPtr s3() { return Group::from_perm_gens({{2, 3, 1}, {2, 1, 3}}); }
GroupPtr frob21() {
  // C_7 : C_3 with the 3-cycle acting as x -> x^2
  return Group::from_perm_gens({{2, 3, 4, 5, 6, 7, 1}, {1, 3, 5, 7, 2, 4, 6}});
}
GroupPtr sl23() {
  // 2x2 matrices over GF(3) of determinant 1, as permutations of the 8
  // nonzero column vectors... simpler: generators of SL(2,3) acting on the
  // 8 nonzero vectors of GF(3)^2 indexed 1..8 as (x,y) -> 3x+y skipping 0.
  // vectors: (0,1)=1,(0,2)=2,(1,0)=3,(1,1)=4,(1,2)=5,(2,0)=6,(2,1)=7,(2,2)=8
  // a = [[1,1],[0,1]]: (x,y) -> (x+y, y)
  // b = [[0,-1],[1,0]] = [[0,2],[1,0]]: (x,y) -> (2y, x)
  auto enc = [](int x, int y) { return x * 3 + y; };  // 1..8 after skip of 0
  std::vector<std::uint32_t> a(8), b(8);
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) {
      if (x == 0 && y == 0) continue;
      int i = enc(x, y);
      int ax = (x + y) % 3, ay = y;
      int bx = (2 * y) % 3, by = x;
      a[i - 1] = enc(ax, ay);
      b[i - 1] = enc(bx, by);
    }
  return Group::from_perm_gens({a, b});
}

}  // namespace

TEST_CASE("build C_3 and S_3") {
  auto g = c3();
  CHECK(g->order() == 3);
  auto h = s3();
  CHECK(h->order() == 6);
}

TEST_CASE("build C_7:C_3 of order 21") {
  auto g = frob21();
  CHECK(g->order() == 21);
}

TEST_CASE("build SL(2,3) of order 24") {
  auto g = sl23();
  CHECK(g->order() == 24);
}

TEST_CASE("order bound enforced") {
  CHECK_THROWS_AS(Group::from_perm_gens({{2, 3, 1}}, 2), InputError);
}

TEST_CASE("conjugacy classes of S_3") {
  auto g = s3();
  auto cls = g->conjugacy_classes();
  REQUIRE(cls.size() == 3);
  std::vector<std::size_t> sizes;
  for (const auto& c : cls) sizes.push_back(c.size());
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::size_t>{1, 2, 3});
  // |G| = sum of class sizes
  CHECK(std::accumulate(sizes.begin(), sizes.end(), std::size_t(0)) == 6);
}

TEST_CASE("classes of C_7:C_3 number 5") {
  auto g = frob21();
  CHECK(g->conjugacy_classes().size() == 5);
}

TEST_CASE("sylow subgroups") {
  CHECK(sylow_subgroup(s3(), 2).order() == 2);
  CHECK(sylow_subgroup(frob21(), 3).order() == 3);
  auto g = sl23();
  auto syl3 = sylow_subgroup(g, 3);
  CHECK(syl3.order() == 3);
  // non-normal with 4 conjugates: count distinct conjugate subgroups
  std::vector<std::vector<std::uint32_t>> conjs;
  for (std::uint32_t x = 0; x < g->order(); ++x) {
    std::vector<std::uint32_t> img;
    for (auto e : syl3.elems) img.push_back(g->conj(x, e));
    std::sort(img.begin(), img.end());
    if (std::find(conjs.begin(), conjs.end(), img) == conjs.end()) conjs.push_back(img);
  }
  CHECK(conjs.size() == 4);
  CHECK(sylow_subgroup(g, 2).order() == 8);
}

TEST_CASE("normalizer of Sylow-3 in C_7:C_3 is itself") {
  auto g = frob21();
  auto syl = sylow_subgroup(g, 3);
  auto n = normalizer(syl);
  CHECK(n.order() == 3);
  CHECK(n.elems == syl.elems);
}

TEST_CASE("centralizer C_N(Q) in SL(2,3) is the center of order 2") {
  auto g = sl23();
  auto q8 = sylow_subgroup(g, 2);  // Q_8 is the unique Sylow-2, normal
  CHECK(is_normal(q8));
  auto q = sylow_subgroup(g, 3);
  // C_N(Q) = elements of Q_8 commuting with Q
  Subgroup cent = centralizer(g, q.elems);
  Subgroup m = intersect(cent, q8);
  CHECK(m.order() == 2);
  Subgroup z = group_center(g);
  CHECK(z.order() == 2);
  CHECK(m.elems == z.elems);
}

TEST_CASE("p_core_complement") {
  // (S_3, 2): N = A_3, 2-nilpotent
  auto [n1, f1] = p_core_complement(s3(), 2);
  CHECK(n1.order() == 3);
  CHECK(f1);
  // (SL(2,3), 3): N = Q_8, 3-nilpotent
  auto [n2, f2] = p_core_complement(sl23(), 3);
  CHECK(n2.order() == 8);
  CHECK(f2);
  // (S_3, 3): O_3'(S_3) = 1, not 3-nilpotent
  auto [n3, f3] = p_core_complement(s3(), 3);
  CHECK(n3.order() == 1);
  CHECK(!f3);
}

TEST_CASE("normal subgroups and Lagrange") {
  auto g = s3();
  auto ns = normal_subgroups(g);
  // 1, A_3, S_3
  CHECK(ns.size() == 3);
  for (const auto& n : ns) CHECK(g->order() % n.order() == 0);
}

TEST_CASE("twisted diagonal for S_3 over A_3 and C_2") {
  auto g = s3();
  auto n = p_core_complement(g, 2).first;  // A_3
  auto q = sylow_subgroup(g, 2);           // C_2
  auto td = twisted_diagonal(g, q, n);
  CHECK(td.delta.order() == 6);  // |N| * |Q|
  CHECK(is_subgroup(td.delta));
  // projections: onto S surjective, onto Q surjective, delta meets 1 x Q trivially
  std::vector<char> first_proj(g->order(), 0), second_proj(q.order(), 0);
  std::uint32_t meets = 0;
  for (auto e : td.delta.elems) {
    auto [a, b] = td.product.unpair(e);
    first_proj[a] = 1;
    second_proj[b] = 1;
    if (a == 0 && b != 0) ++meets;
  }
  CHECK(std::count(first_proj.begin(), first_proj.end(), 1) == 6);
  CHECK(std::count(second_proj.begin(), second_proj.end(), 1) == 2);
  CHECK(meets == 0);
}

TEST_CASE("twisted diagonal for SL(2,3)") {
  auto g = sl23();
  auto n = sylow_subgroup(g, 2);  // Q_8 normal
  auto q = sylow_subgroup(g, 3);
  auto td = twisted_diagonal(g, q, n);
  CHECK(td.delta.order() == 24);
}

TEST_CASE("twisted diagonal rejects S != NQ") {
  auto g = s3();
  auto n = trivial_subgroup(g);
  auto q = sylow_subgroup(g, 2);
  CHECK_THROWS_AS(twisted_diagonal(g, q, n), InputError);
}

TEST_CASE("p subgroups up to conjugacy") {
  // (C_2, 2) -> {1, C_2}
  auto c2 = Group::from_perm_gens({{2, 1}});
  CHECK(p_subgroups_up_to_conjugacy(c2, 2).size() == 2);
  // (S_3, 2) -> {1, C_2}
  CHECK(p_subgroups_up_to_conjugacy(s3(), 2).size() == 2);
  // (SL(2,3), 3) -> {1, C_3}
  CHECK(p_subgroups_up_to_conjugacy(sl23(), 3).size() == 2);
  // (SL(2,3), 2) -> {1, C_2, C_4, Q_8}
  CHECK(p_subgroups_up_to_conjugacy(sl23(), 2).size() == 4);
}

TEST_CASE("direct product and quotient") {
  auto a = c3();
  auto b = Group::from_perm_gens({{2, 1}});
  auto pg = direct_product(a, b);
  CHECK(pg.grp->order() == 6);
  auto [x, y] = pg.unpair(pg.pair(2, 1));
  CHECK(x == 2);
  CHECK(y == 1);

  auto g = s3();
  auto n = p_core_complement(g, 2).first;
  auto q = quotient_group(g, n);
  CHECK(q.grp->order() == 2);
  CHECK(q.proj[0] == 0);
}

TEST_CASE("subgroup_as_group round trip") {
  auto g = sl23();
  auto q8 = sylow_subgroup(g, 2);
  auto sa = subgroup_as_group(q8);
  CHECK(sa.grp->order() == 8);
  // multiplication agrees through the index maps
  for (std::uint32_t i = 0; i < 8; ++i)
    for (std::uint32_t j = 0; j < 8; ++j) {
      std::uint32_t sub = sa.grp->mul(i, j);
      std::uint32_t par = g->mul(sa.to_parent[i], sa.to_parent[j]);
      CHECK(sa.to_parent[sub] == par);
    }
}

TEST_CASE("homomorphism from generator images") {
  auto g = s3();
  auto c2 = Group::from_perm_gens({{2, 1}});
  // sign map: 3-cycle -> id, transposition -> flip
  auto h = hom_from_gen_images(g, c2, {0, 1});
  CHECK(hom_is_valid(h));
  CHECK_THROWS_AS(hom_from_gen_images(g, c2, {1, 1}), InputError);
}

TEST_CASE("cosets") {
  auto g = s3();
  auto h = sylow_subgroup(g, 2);
  auto c = left_cosets(g, h);
  CHECK(c.reps.size() == 3);
  for (std::uint32_t e = 0; e < g->order(); ++e) {
    // e lies in the coset of its rep: rep^{-1} e in H
    std::uint32_t r = c.reps[c.coset_of[e]];
    CHECK(h.contains(g->mul(g->inv(r), e)));
  }
}

TEST_CASE("element orders and associativity sampling in cayley construction") {
  auto g = frob21();
  std::uint32_t seven = 0, three = 0;
  for (std::uint32_t e = 1; e < g->order(); ++e) {
    auto o = g->element_order(e);
    if (o == 7) ++seven;
    if (o == 3) ++three;
  }
  CHECK(seven == 6);
  CHECK(three == 14);
}
