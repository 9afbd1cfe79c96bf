#include "doctest.h"

#include "blockdesc/errors.hpp"
#include "blockdesc/linalg.hpp"
#include "blockdesc/rng.hpp"

using namespace blockdesc;

namespace {

Mat from_rows(const FiniteField& F, const std::vector<Vec>& rows) {
  Mat m(F, rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
  return m;
}

Mat random_mat(const FiniteField& F, std::size_t r, std::size_t c, Rng& rng) {
  Mat m(F, r, c);
  for (auto& x : m.data()) x = rng.below(F.order());
  return m;
}

}  // namespace

TEST_CASE("rank of identity over GF(2)") {
  const auto& F = field(2, 1);
  CHECK(rank_of(Mat::identity(F, 4)) == 4);
}

TEST_CASE("kernel of all-ones 1x3 over GF(3)") {
  const auto& F = field(3, 1);
  Mat m = from_rows(F, {{1, 1, 1}});
  Mat k = kernel_basis(m);
  CHECK(k.cols() == 2);
  CHECK((m * k).is_zero());
}

TEST_CASE("rank of multiplication by x+x^2 on GF(2)C_3") {
  // oracle: write the operator in the group basis {1, x, x^2} and row-reduce.
  // (x + x^2) * x^i = x^(i+1) + x^(i+2), giving the circulant below.
  const auto& F = field(2, 1);
  Mat m = from_rows(F, {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
  CHECK(rank_of(m) == 2);
}

TEST_CASE("matrix multiplication is associative on sampled triples") {
  const auto& F = field(3, 2);
  Rng rng(17);
  for (int i = 0; i < 20; ++i) {
    Mat a = random_mat(F, 4, 5, rng), b = random_mat(F, 5, 3, rng), c = random_mat(F, 3, 6, rng);
    CHECK(((a * b) * c) == (a * (b * c)));
  }
}

TEST_CASE("rref and solve") {
  const auto& F = field(5, 1);
  Rng rng(23);
  for (int i = 0; i < 30; ++i) {
    Mat a = random_mat(F, 6, 4, rng);
    Vec x0(4);
    for (auto& v : x0) v = rng.below(5);
    Vec b = mat_vec(a, x0);
    auto sol = solve(a, b);
    REQUIRE(sol.has_value());
    CHECK(mat_vec(a, sol->particular) == b);
    CHECK((a * sol->kernel).is_zero());
    CHECK(rank_of(a) + sol->kernel.cols() == 4);
  }
}

TEST_CASE("inconsistent system reports nullopt") {
  const auto& F = field(2, 1);
  Mat a = from_rows(F, {{1, 0}, {1, 0}});
  auto s = solve(a, Vec{0, 1});
  CHECK(!s.has_value());
}

TEST_CASE("solve errors on shape mismatch") {
  const auto& F = field(2, 1);
  Mat a = from_rows(F, {{1, 0}});
  CHECK_THROWS_AS(solve(a, Vec{1, 1, 0}), InputError);
  Mat b(field(3, 1), 1, 2);
  CHECK_THROWS_AS(a * b, InputError);
}

TEST_CASE("span membership and intersection") {
  const auto& F = field(3, 1);
  Mat u = from_rows(F, {{1, 0}, {0, 1}, {0, 0}});
  Mat v = from_rows(F, {{0, 0}, {1, 0}, {0, 1}});
  Mat w = column_space_intersection(u, v);
  CHECK(w.cols() == 1);
  CHECK(in_column_span(w, Vec{0, 1, 0}));
  CHECK(in_column_span(u, Vec{2, 1, 0}));
  CHECK(!in_column_span(u, Vec{0, 0, 1}));
}

TEST_CASE("inverse") {
  const auto& F = field(3, 2);
  Rng rng(31);
  for (int i = 0; i < 10; ++i) {
    Mat a = random_mat(F, 5, 5, rng);
    if (rank_of(a) < 5) continue;
    Mat ai = inverse(a);
    CHECK((a * ai).is_identity());
    CHECK((ai * a).is_identity());
  }
  Mat sing = from_rows(F, {{1, 1}, {1, 1}});
  CHECK_THROWS_AS(inverse(sing), InputError);
}

TEST_CASE("SpanIndex coordinates") {
  const auto& F = field(5, 1);
  SpanIndex idx(F, 3);
  CHECK(idx.insert(Vec{1, 2, 3}));
  CHECK(idx.insert(Vec{0, 1, 1}));
  CHECK(!idx.insert(Vec{2, 4, 6 % 5}));
  CHECK(idx.dim() == 2);
  // v = 2*(1,2,3) + 3*(0,1,1) = (2, 2, 4) mod 5
  auto c = idx.coords(Vec{2, 2, 4});
  REQUIRE(c.has_value());
  CHECK((*c)[0] == 2);
  CHECK((*c)[1] == 3);
  CHECK(!idx.coords(Vec{0, 0, 1}).has_value());
}

TEST_CASE("min_poly of a companion matrix") {
  // companion matrix of f(t) = t^3 + 2t + 1 over GF(3)
  const auto& F = field(3, 1);
  Mat c = from_rows(F, {{0, 0, 2}, {1, 0, 1}, {0, 1, 0}});
  Vec f = min_poly(c);
  CHECK(f == Vec{1, 2, 0, 1});
  CHECK(eval_poly(f, c).is_zero());
}

TEST_CASE("min_poly of identity and zero") {
  const auto& F = field(2, 1);
  CHECK(min_poly(Mat::identity(F, 3)) == Vec{1, 1});
  CHECK(min_poly(Mat(F, 3, 3)) == Vec{0, 1});
}

TEST_CASE("polyq basic operations") {
  const auto& F = field(3, 1);
  Vec a{1, 2, 1};  // (1+t)^2
  Vec b{1, 1};
  CHECK(polyq::gcd(F, a, b) == b);
  auto [q, r] = polyq::divmod(F, a, b);
  CHECK(r.empty());
  CHECK(polyq::mul(F, q, b) == a);
  CHECK(polyq::eval(F, a, 2) == 0);
  auto roots = polyq::roots(F, a);
  CHECK(roots == std::vector<Elt>{2});
}

TEST_CASE("kronecker and block_diag shapes") {
  const auto& F = field(2, 1);
  Mat a = from_rows(F, {{1, 0}, {1, 1}});
  Mat b = from_rows(F, {{1, 1}});
  Mat k = kronecker(a, b);
  CHECK(k.rows() == 2);
  CHECK(k.cols() == 4);
  Mat d = block_diag({a, a}, F);
  CHECK(d.rows() == 4);
  CHECK(rank_of(d) == 4);
}
