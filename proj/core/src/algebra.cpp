#include "blockdesc/algebra.hpp"

#include <algorithm>

#include "blockdesc/errors.hpp"

namespace blockdesc {

namespace {

const Vec& flat(const Mat& m) { return m.data(); }

}  // namespace

MatrixAlgebra algebra_from_span(const FiniteField& F, std::size_t n, const std::vector<Mat>& span,
                                const Mat& unit) {
  MatrixAlgebra a;
  a.F = &F;
  a.n = n;
  a.unit = unit;
  SpanIndex idx(F, n * n);
  for (const auto& m : span) {
    if (m.rows() != n || m.cols() != n) throw InputError("algebra_from_span: wrong shape");
    if (idx.insert(flat(m))) a.basis.push_back(m);
  }
  if (!idx.contains(flat(unit))) throw InputError("algebra_from_span: unit outside span");
  if (!algebra_is_closed(a)) throw InputError("algebra_from_span: span not closed under product");
  return a;
}

MatrixAlgebra algebra_closure(const FiniteField& F, std::size_t n, const std::vector<Mat>& gens,
                              const Mat& unit) {
  MatrixAlgebra a;
  a.F = &F;
  a.n = n;
  a.unit = unit;
  SpanIndex idx(F, n * n);
  std::vector<Mat> work;
  auto push = [&](const Mat& m) {
    if (idx.insert(flat(m))) {
      a.basis.push_back(m);
      work.push_back(m);
      return true;
    }
    return false;
  };
  push(unit);
  for (const auto& g : gens) push(g);
  for (std::size_t i = 0; i < work.size(); ++i)
    for (std::size_t j = 0; j < work.size(); ++j) {
      push(work[i] * work[j]);
      if (a.basis.size() > n * n) throw InternalInconsistency("algebra closure exceeded M_n");
    }
  return a;
}

bool algebra_is_closed(const MatrixAlgebra& a) {
  SpanIndex idx(*a.F, a.n * a.n);
  for (const auto& b : a.basis) idx.insert(flat(b));
  for (const auto& x : a.basis)
    for (const auto& y : a.basis)
      if (!idx.contains(flat(x * y))) return false;
  return true;
}

bool algebra_is_commutative(const MatrixAlgebra& a) {
  for (std::size_t i = 0; i < a.basis.size(); ++i)
    for (std::size_t j = i + 1; j < a.basis.size(); ++j)
      if (!(a.basis[i] * a.basis[j] == a.basis[j] * a.basis[i])) return false;
  return true;
}

std::optional<Vec> algebra_coords(const MatrixAlgebra& a, const Mat& m) {
  SpanIndex idx(*a.F, a.n * a.n);
  for (const auto& b : a.basis) idx.insert(flat(b));
  return idx.coords(flat(m));
}

std::vector<Mat> algebra_center(const MatrixAlgebra& a) {
  const FiniteField& F = *a.F;
  std::size_t s = a.basis.size();
  // unknowns: coordinates z_k with sum z_k (b_k b_i - b_i b_k) = 0 for all i
  Mat sys(F, s * a.n * a.n, s);
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t k = 0; k < s; ++k) {
      Mat c = a.basis[k] * a.basis[i] - a.basis[i] * a.basis[k];
      for (std::size_t e = 0; e < a.n * a.n; ++e) sys.at(i * a.n * a.n + e, k) = c.data()[e];
    }
  Mat ker = kernel_basis(sys);
  std::vector<Mat> out;
  for (std::size_t j = 0; j < ker.cols(); ++j) {
    Mat z(F, a.n, a.n);
    for (std::size_t k = 0; k < s; ++k)
      if (ker.at(k, j) != 0) z = z + scale(a.basis[k], ker.at(k, j));
    out.push_back(z);
  }
  return out;
}

Vec char_poly(const Mat& m) {
  if (m.rows() != m.cols()) throw InputError("char_poly of non-square matrix");
  const FiniteField& F = m.fld();
  std::size_t n = m.rows();
  Mat h = m;
  // Hessenberg reduction by similarity, with pivoting
  for (std::size_t c = 0; c + 2 < n; ++c) {
    std::size_t piv = c + 1;
    while (piv < n && h.at(piv, c) == 0) ++piv;
    if (piv == n) continue;
    if (piv != c + 1) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h.at(piv, j), h.at(c + 1, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(h.at(i, piv), h.at(i, c + 1));
    }
    Elt inv_p = F.inv(h.at(c + 1, c));
    for (std::size_t i = c + 2; i < n; ++i) {
      Elt f = F.mul(h.at(i, c), inv_p);
      if (f == 0) continue;
      // row_i -= f * row_{c+1}; col_{c+1} += f * col_i
      h.row_addmul(i, h, c + 1, F.neg(f));
      for (std::size_t r = 0; r < n; ++r) h.at(r, c + 1) = F.add(h.at(r, c + 1), F.mul(f, h.at(r, i)));
    }
  }
  // char polys of leading principal Hessenberg blocks
  std::vector<Vec> p(n + 1);
  p[0] = Vec{F.one()};
  for (std::size_t k = 1; k <= n; ++k) {
    // p_k = (t - h[k-1][k-1]) p_{k-1} - sum_{i>=1} h[k-1-i][k-1] (prod_{j=1..i} h[k-j][k-j-1]) p_{k-1-i}
    Vec t_minus{F.neg(h.at(k - 1, k - 1)), F.one()};
    Vec acc = polyq::mul(F, t_minus, p[k - 1]);
    Elt prod = F.one();
    for (std::size_t i = 1; i < k; ++i) {
      prod = F.mul(prod, h.at(k - i, k - i - 1));
      if (prod == 0) break;
      Elt coef = F.mul(h.at(k - 1 - i, k - 1), prod);
      if (coef == 0) continue;
      Vec term = p[k - 1 - i];
      for (auto& x : term) x = F.mul(x, coef);
      acc = polyq::sub(F, acc, term);
    }
    p[k] = std::move(acc);
  }
  Vec out = p[n];
  out.resize(n + 1, 0);
  return out;
}

namespace {

// x -> x^(p^e) kernel method for commutative algebras: J = nilpotent elements.
std::vector<Mat> radical_commutative(const MatrixAlgebra& a) {
  const FiniteField& F = *a.F;
  std::size_t s = a.basis.size();
  std::uint32_t p = F.p();
  std::uint64_t pe = 1;
  std::uint32_t e = 0;
  while (pe < a.n) {
    pe *= p;
    ++e;
  }
  // Solve over the prime field: the map x -> x^(p^e) is additive and fixes
  // F_p-scalars. Unknown x = sum over F_p-basis {beta^j b_k}.
  std::uint32_t m = F.degree();
  Elt beta = F.degree() == 1 ? F.one() : F.gen();
  std::vector<Mat> fp_basis;
  fp_basis.reserve(std::size_t(m) * s);
  Elt pw = F.one();
  for (std::uint32_t j = 0; j < m; ++j) {
    for (std::size_t k = 0; k < s; ++k) fp_basis.push_back(scale(a.basis[k], pw));
    pw = F.mul(pw, beta);
  }
  auto p_power = [&](Mat x) {
    for (std::uint32_t i = 0; i < e; ++i) {
      Mat y = x;
      for (std::uint32_t t = 1; t < p; ++t) y = y * x;
      x = std::move(y);
    }
    return x;
  };
  // images in GF(p)-coordinates of the flattened n x n entries: each field
  // element contributes m prime-field digits
  std::size_t cols = fp_basis.size();
  std::size_t rows = a.n * a.n * m;
  const FiniteField& Fp = field(p, 1);
  Mat sys(Fp, rows, cols);
  for (std::size_t c = 0; c < cols; ++c) {
    Mat img = p_power(fp_basis[c]);
    for (std::size_t epos = 0; epos < a.n * a.n; ++epos) {
      auto digs = F.decode(img.data()[epos]);
      for (std::uint32_t j = 0; j < m; ++j) sys.at(epos * m + j, c) = digs[j];
    }
  }
  Mat ker = kernel_basis(sys);
  std::vector<Mat> out;
  SpanIndex span(F, a.n * a.n);
  for (std::size_t j = 0; j < ker.cols(); ++j) {
    Mat z(F, a.n, a.n);
    for (std::size_t c = 0; c < cols; ++c)
      if (ker.at(c, j) != 0) z = z + scale(fp_basis[c], F.from_int(ker.at(c, j)));
    if (span.insert(flat(z))) out.push_back(z);
  }
  // The GF(p)-kernel spans an F-subspace (it is an ideal); re-span over F.
  for (std::size_t i = 0; i < out.size(); ++i) {
    Elt pw2 = F.one();
    for (std::uint32_t j = 1; j < m; ++j) {
      pw2 = F.mul(pw2, beta);
      Mat z = scale(out[i], pw2);
      if (span.insert(flat(z))) out.push_back(z);
    }
  }
  return out;
}

struct RegularRep {
  MatrixAlgebra reg;            // algebra in its left regular representation
  std::vector<Mat> back;        // back[i]: original basis element i
};

RegularRep regular_representation(const MatrixAlgebra& a) {
  const FiniteField& F = *a.F;
  std::size_t s = a.basis.size();
  SpanIndex idx(F, a.n * a.n);
  for (const auto& b : a.basis) idx.insert(flat(b));
  RegularRep rr;
  rr.reg.F = &F;
  rr.reg.n = s;
  rr.back = a.basis;
  for (std::size_t i = 0; i < s; ++i) {
    Mat L(F, s, s);
    for (std::size_t j = 0; j < s; ++j) {
      auto c = idx.coords(flat(a.basis[i] * a.basis[j]));
      if (!c) throw InputError("regular_representation: algebra not closed");
      for (std::size_t k = 0; k < s; ++k) L.at(k, j) = (*c)[k];
    }
    rr.reg.basis.push_back(L);
  }
  auto uc = idx.coords(flat(a.unit));
  if (!uc) throw InputError("regular_representation: unit outside span");
  Mat U(F, s, s);
  for (std::size_t i = 0; i < s; ++i)
    if ((*uc)[i] != 0) U = U + scale(rr.reg.basis[i], (*uc)[i]);
  rr.reg.unit = U;
  return rr;
}

// Layered radical on an explicit matrix realization. Layer i cuts by the
// characteristic polynomial coefficient at t^(n - p^i) of products x y, which
// is additive and F_p-linear in x once the earlier layers vanish.
std::vector<Vec> radical_layers_coords(const MatrixAlgebra& a) {
  const FiniteField& F = *a.F;
  std::uint32_t p = F.p();
  std::uint32_t m = F.degree();
  std::size_t n = a.n;
  Elt beta = m == 1 ? F.one() : F.gen();
  const FiniteField& Fp = field(p, 1);

  // current layer: F_p-span, as F-coordinate vectors w.r.t. a.basis
  std::vector<Vec> layer;
  {
    Elt pw = F.one();
    for (std::uint32_t j = 0; j < m; ++j) {
      for (std::size_t k = 0; k < a.basis.size(); ++k) {
        Vec v(a.basis.size(), 0);
        v[k] = pw;
        layer.push_back(v);
      }
      pw = F.mul(pw, beta);
    }
  }
  auto realize = [&](const Vec& coords) {
    Mat z(F, n, n);
    for (std::size_t k = 0; k < coords.size(); ++k)
      if (coords[k] != 0) z = z + scale(a.basis[k], coords[k]);
    return z;
  };

  std::uint64_t pi = 1;
  while (pi <= n && !layer.empty()) {
    // y ranges over an F-spanning set of the layer: use all layer members
    // (F_p-basis); correctness needs only a spanning set.
    std::vector<Mat> ys;
    ys.reserve(layer.size());
    for (const auto& c : layer) ys.push_back(realize(c));
    std::size_t cols = layer.size();
    std::size_t rows = ys.size() * m;
    Mat sys(Fp, rows, cols);
    for (std::size_t c = 0; c < cols; ++c) {
      Mat x = ys[c];
      for (std::size_t yi = 0; yi < ys.size(); ++yi) {
        Vec cp = char_poly(x * ys[yi]);
        Elt lam = n >= pi ? cp[std::size_t(n - pi)] : 0;
        auto digs = F.decode(lam);
        for (std::uint32_t j = 0; j < m; ++j) sys.at(yi * m + j, c) = digs[j];
      }
    }
    Mat ker = kernel_basis(sys);
    std::vector<Vec> next;
    for (std::size_t j = 0; j < ker.cols(); ++j) {
      Vec v(a.basis.size(), 0);
      for (std::size_t c = 0; c < cols; ++c) {
        Elt f = F.from_int(ker.at(c, j));
        if (f != 0)
          for (std::size_t k = 0; k < v.size(); ++k)
            v[k] = F.add(v[k], F.mul(f, layer[c][k]));
      }
      next.push_back(std::move(v));
    }
    layer = std::move(next);
    pi *= p;
  }
  return layer;
}

bool verify_radical(const MatrixAlgebra& a, const std::vector<Mat>& J) {
  const FiniteField& F = *a.F;
  SpanIndex span(F, a.n * a.n);
  for (const auto& j : J) span.insert(flat(j));
  for (const auto& b : a.basis)
    for (const auto& j : J)
      if (!span.contains(flat(b * j)) || !span.contains(flat(j * b))) return false;
  return span_is_nilpotent(F, a.n, J);
}

}  // namespace

bool span_is_nilpotent(const FiniteField& F, std::size_t n, const std::vector<Mat>& ideal) {
  if (ideal.empty()) return true;
  // power up the span until it stabilizes or dies
  std::vector<Mat> cur = ideal;
  for (std::size_t iter = 0; iter <= n; ++iter) {
    bool all_zero = true;
    for (const auto& c : cur)
      if (!c.is_zero()) {
        all_zero = false;
        break;
      }
    if (all_zero) return true;
    SpanIndex next_span(F, n * n);
    std::vector<Mat> next;
    for (const auto& x : cur)
      for (const auto& y : ideal) {
        Mat pr = x * y;
        if (next_span.insert(flat(pr))) next.push_back(pr);
      }
    cur = std::move(next);
  }
  return false;
}

std::vector<Mat> radical(const MatrixAlgebra& a) {
  if (a.basis.empty()) return {};
  std::vector<Mat> J;
  if (algebra_is_commutative(a)) {
    J = radical_commutative(a);
  } else {
    // run the layered method on the regular representation (dimension s),
    // which is faithful because the algebra is unital
    RegularRep rr = regular_representation(a);
    auto coords = radical_layers_coords(rr.reg);
    SpanIndex span(*a.F, a.n * a.n);
    for (const auto& c : coords) {
      Mat z(*a.F, a.n, a.n);
      for (std::size_t k = 0; k < c.size(); ++k)
        if (c[k] != 0) z = z + scale(a.basis[k], c[k]);
      if (span.insert(flat(z))) J.push_back(z);
    }
    // F_p-kernel spans an F-subspace; re-span over F
    const FiniteField& F = *a.F;
    Elt beta = F.degree() == 1 ? F.one() : F.gen();
    for (std::size_t i = 0; i < J.size(); ++i) {
      Elt pw = F.one();
      for (std::uint32_t j = 1; j < F.degree(); ++j) {
        pw = F.mul(pw, beta);
        Mat z = scale(J[i], pw);
        if (span.insert(flat(z))) J.push_back(z);
      }
    }
  }
  if (!verify_radical(a, J))
    throw InternalInconsistency("radical: output failed ideal/nilpotency verification");
  return J;
}

bool is_semisimple(const MatrixAlgebra& a) { return radical(a).empty(); }

std::optional<Vec> QuotientAlgebra::project(const Mat& a_elt) const {
  auto c = j_then_c.coords(a_elt.data());
  if (!c) return std::nullopt;
  Vec out(complement.size(), 0);
  for (std::size_t i = 0; i < c->size(); ++i)
    if (slot_map[i] >= 0) out[std::size_t(slot_map[i])] = (*c)[i];
  return out;
}

Mat QuotientAlgebra::lift(const Vec& coords) const {
  Mat z(*parent->F, parent->n, parent->n);
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (coords[i] != 0) z = z + scale(complement[i], coords[i]);
  return z;
}

QuotientAlgebra quotient_by_radical(const MatrixAlgebra& a, const std::vector<Mat>& rad) {
  const FiniteField& F = *a.F;
  QuotientAlgebra q(F, a.n * a.n);
  q.parent = &a;
  for (const auto& j : rad) {
    q.j_then_c.insert(flat(j));
    q.slot_map.push_back(-1);
  }
  q.j_dim = q.j_then_c.dim();
  for (const auto& b : a.basis) {
    if (q.j_then_c.insert(flat(b))) {
      q.slot_map.push_back(std::int32_t(q.complement.size()));
      q.complement.push_back(b);
    } else {
      q.slot_map.push_back(-1);
    }
  }
  std::size_t s = q.complement.size();
  // structure constants of the quotient on the complement representatives
  q.quo.F = &F;
  q.quo.n = s;
  for (std::size_t i = 0; i < s; ++i) {
    Mat L(F, s, s);
    for (std::size_t j = 0; j < s; ++j) {
      auto c = q.project(q.complement[i] * q.complement[j]);
      if (!c) throw InternalInconsistency("quotient: product escaped the algebra");
      for (std::size_t k = 0; k < s; ++k) L.at(k, j) = (*c)[k];
    }
    q.quo.basis.push_back(L);
  }
  auto uc = q.project(a.unit);
  if (!uc) throw InternalInconsistency("quotient: unit escaped the algebra");
  Mat U(F, s, s);
  for (std::size_t i = 0; i < s; ++i)
    if ((*uc)[i] != 0) U = U + scale(q.quo.basis[i], (*uc)[i]);
  q.quo.unit = U;
  return q;
}

Vec min_poly_in_corner(const Mat& x, const Mat& e) {
  const FiniteField& F = x.fld();
  Mat basis = column_space(e);  // n x r
  std::size_t r = basis.cols();
  if (r == 0) throw InputError("min_poly_in_corner: zero unit");
  // restrict x to the column space: x * basis = basis * xr
  auto xr = solve_matrix(basis, x * basis);
  if (!xr) throw InputError("min_poly_in_corner: x does not preserve im(e)");
  return min_poly(*xr);
}

namespace {

// ---- splitting of a semisimple algebra into primitive idempotents ----

struct Corner {
  std::vector<Mat> basis;  // span closed under product, unit below
  Mat unit;
};

std::vector<Mat> berlekamp_subalgebra(const FiniteField& F, const std::vector<Mat>& zbasis,
                                      const Mat& unit) {
  // {x in Z : x^q = x}: F-linear kernel on Z-coordinates (Z commutative)
  std::size_t s = zbasis.size();
  if (s == 0) return {};
  std::size_t n = unit.rows();
  SpanIndex idx(F, n * n);
  for (const auto& b : zbasis) idx.insert(b.data());
  std::uint32_t q = F.order();
  Mat sys(F, s, s);
  for (std::size_t k = 0; k < s; ++k) {
    // x^q by square-and-multiply (exponent q >= 1, so no unit term needed)
    Mat base = zbasis[k];
    std::uint32_t exp = q;
    bool first = true;
    Mat res(F, n, n);
    while (exp) {
      if (exp & 1) {
        if (first) {
          res = base;
          first = false;
        } else
          res = res * base;
      }
      base = base * base;
      exp >>= 1;
    }
    Mat diff = res - zbasis[k];
    auto c = idx.coords(diff.data());
    if (!c) throw InternalInconsistency("berlekamp: x^q left the center");
    for (std::size_t i = 0; i < s; ++i) sys.at(i, k) = (*c)[i];
  }
  Mat ker = kernel_basis(sys);
  std::vector<Mat> out;
  for (std::size_t j = 0; j < ker.cols(); ++j) {
    Mat z(F, n, n);
    for (std::size_t k = 0; k < s; ++k)
      if (ker.at(k, j) != 0) z = z + scale(zbasis[k], ker.at(k, j));
    out.push_back(z);
  }
  return out;
}

std::vector<Mat> corner_center(const FiniteField& F, const Corner& c) {
  MatrixAlgebra a;
  a.F = &F;
  a.n = c.unit.rows();
  a.basis = c.basis;
  a.unit = c.unit;
  return algebra_center(a);
}

Corner sub_corner(const FiniteField& F, const Corner& c, const Mat& e) {
  Corner out;
  out.unit = e;
  SpanIndex idx(F, e.rows() * e.cols());
  for (const auto& b : c.basis) {
    Mat x = e * b * e;
    if (idx.insert(x.data())) out.basis.push_back(x);
  }
  return out;
}

// coprime split of a squarefree polynomial: mu = f * g with gcd(f,g) = 1,
// both nonconstant. nullopt if mu is irreducible.
std::optional<std::pair<Vec, Vec>> coprime_split(const FiniteField& F, const Vec& mu, Rng& rng) {
  std::size_t deg = mu.size() - 1;
  if (deg <= 1) return std::nullopt;
  // linear roots first
  if (F.order() <= 4096) {
    auto rs = polyq::roots(F, mu);
    if (!rs.empty() && deg >= 2) {
      Vec f{F.neg(rs[0]), F.one()};
      auto [quo, rem] = polyq::divmod(F, mu, f);
      if (!rem.empty()) throw InternalInconsistency("root division left a remainder");
      return std::make_pair(f, std::move(quo));
    }
  }
  // distinct degree: gcd(mu, t^(q^r) - t)
  Vec t{0, F.one()};
  Vec h = t;
  for (std::size_t r = 1; r < deg; ++r) {
    h = polyq::powmod(F, h, F.order(), mu);
    Vec g = polyq::gcd(F, polyq::sub(F, h, t), mu);
    if (g.size() > 1 && g.size() < mu.size()) {
      auto [quo, rem] = polyq::divmod(F, mu, g);
      if (!rem.empty()) throw InternalInconsistency("ddf division left a remainder");
      return std::make_pair(g, std::move(quo));
    }
    if (g.size() == mu.size()) {
      // all irreducible factors have degree r; equal-degree split unless r = deg
      if (r == deg) return std::nullopt;
      for (int tries = 0; tries < 200; ++tries) {
        Vec hr(deg, 0);
        for (auto& x : hr) x = Elt(rng.below(F.order()));
        hr = polyq::trim(std::move(hr));
        if (hr.size() < 1) continue;
        Vec w;
        if (F.p() != 2) {
          // norm then (q-1)/2 power: h^( (q^r - 1)/2 ) = N(h)^((q-1)/2)
          Vec v = polyq::mod(F, hr, mu);
          Vec acc = v;
          for (std::size_t i = 1; i < r; ++i) {
            v = polyq::powmod(F, v, F.order(), mu);
            acc = polyq::mod(F, polyq::mul(F, acc, v), mu);
          }
          w = polyq::powmod(F, acc, (F.order() - 1) / 2, mu);
          w = polyq::sub(F, w, Vec{F.one()});
        } else {
          // trace map sum h^(2^i), i < r * log2(q)
          std::uint32_t k = 0, qq = F.order();
          while (qq > 1) {
            qq >>= 1;
            ++k;
          }
          Vec v = polyq::mod(F, hr, mu);
          Vec acc = v;
          for (std::size_t i = 1; i < std::size_t(r) * k; ++i) {
            v = polyq::mod(F, polyq::mul(F, v, v), mu);
            acc = polyq::add(F, acc, v);
          }
          w = acc;
        }
        Vec g2 = polyq::gcd(F, w, mu);
        if (g2.size() > 1 && g2.size() < mu.size()) {
          auto [quo, rem] = polyq::divmod(F, mu, g2);
          if (!rem.empty()) throw InternalInconsistency("edf division left a remainder");
          return std::make_pair(g2, std::move(quo));
        }
      }
      return std::nullopt;  // extraordinarily unlucky; caller retries with new x
    }
  }
  return std::nullopt;
}

// extended gcd over F[t]: returns (g, u, v) with u a + v b = g
std::tuple<Vec, Vec, Vec> poly_ext_gcd(const FiniteField& F, Vec a, Vec b) {
  Vec r0 = polyq::trim(std::move(a)), r1 = polyq::trim(std::move(b));
  Vec s0{F.one()}, s1{};
  Vec t0{}, t1{F.one()};
  while (!r1.empty()) {
    auto [q, rem] = polyq::divmod(F, r0, r1);
    Vec s2 = polyq::sub(F, s0, polyq::mul(F, q, s1));
    Vec t2 = polyq::sub(F, t0, polyq::mul(F, q, t1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (!r0.empty()) {
    Elt c = F.inv(r0.back());
    for (auto& x : r0) x = F.mul(x, c);
    for (auto& x : s0) x = F.mul(x, c);
    for (auto& x : t0) x = F.mul(x, c);
  }
  return {r0, s0, t0};
}

// evaluate a polynomial at x with x^0 := e
Mat eval_poly_with_unit(const FiniteField& F, const Vec& f, const Mat& x, const Mat& e) {
  Mat acc(F, x.rows(), x.cols());
  for (std::size_t i = f.size(); i-- > 0;) {
    acc = acc * x;
    if (f[i] != 0) acc = acc + scale(e, f[i]);
  }
  return acc;
}

void split_corner(const FiniteField& F, const Corner& c, Rng& rng, std::vector<Mat>& out) {
  if (c.basis.empty() || c.unit.is_zero()) return;
  if (c.basis.size() == 1) {
    out.push_back(c.unit);
    return;
  }
  auto zb = corner_center(F, c);
  auto B = berlekamp_subalgebra(F, zb, c.unit);
  // find b in B independent of the unit
  SpanIndex uspan(F, c.unit.rows() * c.unit.cols());
  uspan.insert(c.unit.data());
  Mat split_elt;
  bool have_central = false;
  for (const auto& b : B)
    if (!uspan.contains(b.data())) {
      split_elt = b;
      have_central = true;
      break;
    }
  if (have_central) {
    Vec mu = min_poly_in_corner(split_elt, c.unit);
    auto rts = polyq::roots(F, mu);
    if (rts.size() != mu.size() - 1)
      throw InternalInconsistency("berlekamp element has non-split minimal polynomial");
    for (Elt lam : rts) {
      // Lagrange idempotent for eigenvalue lam
      Mat eps = c.unit;
      for (Elt other : rts) {
        if (other == lam) continue;
        Mat num = split_elt - scale(c.unit, other);
        eps = eps * scale(num, F.inv(F.sub(lam, other)));
      }
      split_corner(F, sub_corner(F, c, eps), rng, out);
    }
    return;
  }
  // central Berlekamp dim 1: single simple factor; commutative => field
  bool comm = true;
  for (std::size_t i = 0; i < c.basis.size() && comm; ++i)
    for (std::size_t j = i + 1; j < c.basis.size(); ++j)
      if (!(c.basis[i] * c.basis[j] == c.basis[j] * c.basis[i])) {
        comm = false;
        break;
      }
  if (comm) {
    out.push_back(c.unit);
    return;
  }
  // matrix factor: find an element with reducible minimal polynomial
  for (int attempt = 0;; ++attempt) {
    if (attempt > 500) throw InternalInconsistency("failed to split a simple matrix factor");
    Mat x(F, c.unit.rows(), c.unit.cols());
    if (attempt < int(c.basis.size())) {
      x = c.basis[attempt];
    } else {
      for (const auto& b : c.basis)
        if (rng.below(2)) x = x + scale(b, Elt(1 + rng.below(F.order() - 1)));
    }
    if (x.is_zero()) continue;
    Vec mu = min_poly_in_corner(x, c.unit);
    if (mu.size() <= 2) continue;
    auto sp = coprime_split(F, mu, rng);
    if (!sp) continue;
    auto [f, g] = *sp;
    auto [gcd_fg, u, v] = poly_ext_gcd(F, f, g);
    if (gcd_fg.size() != 1) continue;  // not coprime (shouldn't happen: mu squarefree)
    // idempotent: (u f)(x) is 0 mod f-part, 1 mod g-part
    Vec uf = polyq::mul(F, u, f);
    Mat eps = eval_poly_with_unit(F, uf, x, c.unit);
    // reduce mod mu not needed: mu(x) = 0 kills higher terms exactly
    Mat eps2 = eps * eps;
    if (!(eps2 == eps) || eps.is_zero() || eps == c.unit) continue;
    split_corner(F, sub_corner(F, c, eps), rng, out);
    Mat rest = c.unit - eps;
    split_corner(F, sub_corner(F, c, rest), rng, out);
    return;
  }
}

}  // namespace

std::vector<Mat> split_primitive_idempotents(const MatrixAlgebra& a, Rng& rng) {
  if (a.basis.empty()) return {};
  const FiniteField& F = *a.F;
  auto J = radical(a);
  QuotientAlgebra q = quotient_by_radical(a, J);

  // split the unit of the semisimple quotient
  Corner top;
  top.basis = q.quo.basis;
  top.unit = q.quo.unit;
  std::vector<Mat> prims_quo;
  split_corner(F, top, rng, prims_quo);

  // pull idempotents of the quotient back to representatives in A.
  // quotient elements are s x s regular-rep matrices; coordinates of the
  // element are its action on the coordinates of 1.
  std::size_t s = q.quo.n;
  auto unit_coords = q.project(a.unit);
  if (!unit_coords) throw InternalInconsistency("split: unit projection failed");
  std::vector<Mat> reps;
  for (const auto& pq : prims_quo) {
    Vec coords = mat_vec(pq, *unit_coords);
    reps.push_back(q.lift(coords));
  }
  (void)s;

  // lift along the nilpotent radical: x -> x^(p^t), orthogonalized in turn
  std::uint32_t p = F.p();
  std::uint64_t pt = 1;
  while (pt < a.n + 1) pt *= p;
  std::vector<Mat> lifted;
  Mat E(F, a.n, a.n);
  for (std::size_t i = 0; i < reps.size(); ++i) {
    Mat x = reps[i];
    if (i + 1 == reps.size()) {
      lifted.push_back(a.unit - E);
      break;
    }
    Mat one_minus_E = a.unit - E;
    x = one_minus_E * x * one_minus_E;
    // iterate p-th powers until idempotent
    for (std::uint64_t k = 1; k <= pt; k *= p) {
      Mat xp = x;
      for (std::uint32_t t = 1; t < p; ++t) xp = xp * x;
      x = xp;
      Mat sq = x * x;
      if (sq == x) break;
    }
    if (!((x * x) == x)) throw InternalInconsistency("idempotent lifting failed to converge");
    lifted.push_back(x);
    E = E + x;
  }

  // exact verification
  Mat total(F, a.n, a.n);
  for (const auto& e : lifted) {
    if (!((e * e) == e)) throw InternalInconsistency("lifted element is not idempotent");
    total = total + e;
  }
  if (!(total == a.unit)) throw InternalInconsistency("lifted idempotents do not sum to the unit");
  for (std::size_t i = 0; i < lifted.size(); ++i)
    for (std::size_t j = i + 1; j < lifted.size(); ++j)
      if (!(lifted[i] * lifted[j]).is_zero() || !(lifted[j] * lifted[i]).is_zero())
        throw InternalInconsistency("lifted idempotents are not orthogonal");

  std::sort(lifted.begin(), lifted.end(),
            [](const Mat& x, const Mat& y) { return x.data() < y.data(); });
  return lifted;
}

}  // namespace blockdesc
