#include "blockdesc/linalg.hpp"

#include <algorithm>
#include <sstream>

#include "blockdesc/errors.hpp"

namespace blockdesc {

Mat Mat::identity(const FiniteField& F, std::size_t n) {
  Mat m(F, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = F.one();
  return m;
}

Mat Mat::transpose() const {
  Mat t(*F_, c_, r_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j) t.at(j, i) = at(i, j);
  return t;
}

bool Mat::is_zero() const {
  for (Elt x : a_)
    if (x != 0) return false;
  return true;
}

bool Mat::is_identity() const {
  if (r_ != c_) return false;
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j)
      if (at(i, j) != (i == j ? F_->one() : 0)) return false;
  return true;
}

void Mat::row_addmul(std::size_t dst, const Mat& src, std::size_t src_row, Elt scalar) {
  if (scalar == 0) return;
  Elt* d = row(dst);
  const Elt* s = src.row(src_row);
  const FiniteField& F = *F_;
  if (F.tables_available()) {
    const Elt* mr = F.mul_row(scalar);
    const Elt* add = nullptr;  // add_table is 2-d; index per element below
    (void)add;
    std::uint32_t q = F.order();
    const Elt* addt = F.add_row(0);  // base pointer; add_row(a) = base + a*q
    for (std::size_t j = 0; j < c_; ++j) {
      Elt prod = mr[s[j]];
      d[j] = addt[std::size_t(d[j]) * q + prod];
    }
  } else {
    for (std::size_t j = 0; j < c_; ++j) d[j] = F.add(d[j], F.mul(scalar, s[j]));
  }
}

static void check_same(const Mat& a, const Mat& b) {
  if (a.fld_ptr() != b.fld_ptr()) throw InputError("matrix operation across different fields");
}

Mat operator+(const Mat& a, const Mat& b) {
  check_same(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InputError("matrix add: shape mismatch");
  Mat c = a;
  const FiniteField& F = a.fld();
  for (std::size_t i = 0; i < c.data().size(); ++i) c.data()[i] = F.add(c.data()[i], b.data()[i]);
  return c;
}

Mat operator-(const Mat& a, const Mat& b) {
  check_same(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InputError("matrix sub: shape mismatch");
  Mat c = a;
  const FiniteField& F = a.fld();
  for (std::size_t i = 0; i < c.data().size(); ++i) c.data()[i] = F.sub(c.data()[i], b.data()[i]);
  return c;
}

Mat operator*(const Mat& a, const Mat& b) {
  check_same(a, b);
  if (a.cols() != b.rows()) throw InputError("matrix mul: shape mismatch");
  const FiniteField& F = a.fld();
  Mat c(F, a.rows(), b.cols());
  // accumulate row-by-row: c[i] += a[i][k] * b[k]
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      Elt s = a.at(i, k);
      if (s != 0) c.row_addmul(i, b, k, s);
    }
  return c;
}

Mat scale(const Mat& a, Elt c) {
  Mat m = a;
  const FiniteField& F = a.fld();
  for (auto& x : m.data()) x = F.mul(x, c);
  return m;
}

Vec mat_vec(const Mat& a, const Vec& v) {
  if (a.cols() != v.size()) throw InputError("mat_vec: shape mismatch");
  const FiniteField& F = a.fld();
  Vec r(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Elt s = 0;
    const Elt* row = a.row(i);
    for (std::size_t j = 0; j < v.size(); ++j) s = F.add(s, F.mul(row[j], v[j]));
    r[i] = s;
  }
  return r;
}

Vec vec_mat(const Vec& v, const Mat& a) {
  if (a.rows() != v.size()) throw InputError("vec_mat: shape mismatch");
  const FiniteField& F = a.fld();
  Vec r(a.cols(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Elt s = v[i];
    if (s == 0) continue;
    const Elt* row = a.row(i);
    for (std::size_t j = 0; j < a.cols(); ++j) r[j] = F.add(r[j], F.mul(s, row[j]));
  }
  return r;
}

Mat kronecker(const Mat& a, const Mat& b) {
  check_same(a, b);
  const FiniteField& F = a.fld();
  Mat c(F, a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      Elt s = a.at(i, j);
      if (s == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          c.at(i * b.rows() + k, j * b.cols() + l) = F.mul(s, b.at(k, l));
    }
  return c;
}

Mat block_diag(const std::vector<Mat>& blocks, const FiniteField& F) {
  std::size_t r = 0, c = 0;
  for (const auto& b : blocks) {
    r += b.rows();
    c += b.cols();
  }
  Mat m(F, r, c);
  std::size_t ro = 0, co = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) m.at(ro + i, co + j) = b.at(i, j);
    ro += b.rows();
    co += b.cols();
  }
  return m;
}

Mat hcat(const Mat& a, const Mat& b) {
  check_same(a, b);
  if (a.rows() != b.rows()) throw InputError("hcat: row mismatch");
  Mat c(a.fld(), a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::copy(a.row(i), a.row(i) + a.cols(), c.row(i));
    std::copy(b.row(i), b.row(i) + b.cols(), c.row(i) + a.cols());
  }
  return c;
}

Mat vcat(const Mat& a, const Mat& b) {
  check_same(a, b);
  if (a.cols() != b.cols()) throw InputError("vcat: col mismatch");
  Mat c(a.fld(), a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) std::copy(a.row(i), a.row(i) + a.cols(), c.row(i));
  for (std::size_t i = 0; i < b.rows(); ++i)
    std::copy(b.row(i), b.row(i) + b.cols(), c.row(a.rows() + i));
  return c;
}

std::vector<std::size_t> rref(Mat& m) {
  const FiniteField& F = m.fld();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t sel = r;
    while (sel < m.rows() && m.at(sel, c) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(r, j));
    Elt piv = m.at(r, c);
    if (piv != F.one()) {
      Elt pi = F.inv(piv);
      Elt* row = m.row(r);
      for (std::size_t j = c; j < m.cols(); ++j) row[j] = F.mul(row[j], pi);
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r) continue;
      Elt f = m.at(i, c);
      if (f != 0) m.row_addmul(i, m, r, F.neg(f));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(Mat m) { return rref(m).size(); }
std::size_t rank_of(const Mat& m) {
  Mat c = m;
  return rref(c).size();
}

Mat kernel_basis(const Mat& m) {
  const FiniteField& F = m.fld();
  Mat r = m;
  auto pivots = rref(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Mat k(F, m.cols(), free_cols.size());
  for (std::size_t fi = 0; fi < free_cols.size(); ++fi) {
    std::size_t fc = free_cols[fi];
    k.at(fc, fi) = F.one();
    for (std::size_t pi = 0; pi < pivots.size(); ++pi) k.at(pivots[pi], fi) = F.neg(r.at(pi, fc));
  }
  return k;
}

std::optional<SolveResult> solve(const Mat& m, const Vec& b) {
  if (b.size() != m.rows()) throw InputError("solve: rhs size mismatch");
  const FiniteField& F = m.fld();
  Mat aug(F, m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::copy(m.row(i), m.row(i) + m.cols(), aug.row(i));
    aug.at(i, m.cols()) = b[i];
  }
  auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;  // inconsistent
  Vec x(m.cols(), 0);
  for (std::size_t pi = 0; pi < pivots.size(); ++pi) x[pivots[pi]] = aug.at(pi, m.cols());
  return SolveResult{std::move(x), kernel_basis(m)};
}

std::optional<Mat> solve_matrix(const Mat& m, const Mat& rhs) {
  if (rhs.rows() != m.rows()) throw InputError("solve_matrix: rhs shape mismatch");
  const FiniteField& F = m.fld();
  Mat aug = hcat(m, rhs);
  auto pivots = rref(aug);
  for (auto p : pivots)
    if (p >= m.cols()) return std::nullopt;
  Mat x(F, m.cols(), rhs.cols());
  for (std::size_t pi = 0; pi < pivots.size(); ++pi)
    for (std::size_t j = 0; j < rhs.cols(); ++j) x.at(pivots[pi], j) = aug.at(pi, m.cols() + j);
  return x;
}

Mat column_space(const Mat& m) {
  Mat t = m.transpose();
  auto pivots = rref(t);
  Mat b(m.fld(), m.rows(), pivots.size());
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (std::size_t j = 0; j < m.rows(); ++j) b.at(j, i) = t.at(i, j);
  return b;
}

Mat column_space_intersection(const Mat& a, const Mat& b) {
  check_same(a, b);
  if (a.rows() != b.rows()) throw InputError("intersection: ambient dimension mismatch");
  // x = a u = b v  <=>  [a | -b] (u; v) = 0
  const FiniteField& F = a.fld();
  Mat neg_b = scale(b, F.neg(F.one()));
  Mat cat = hcat(a, neg_b);
  Mat k = kernel_basis(cat);
  // intersection vectors: a * (u-part of kernel columns)
  Mat u(F, a.cols(), k.cols());
  for (std::size_t i = 0; i < a.cols(); ++i)
    for (std::size_t j = 0; j < k.cols(); ++j) u.at(i, j) = k.at(i, j);
  return column_space(a * u);
}

bool in_column_span(const Mat& m, const Vec& v) { return solve(m, v).has_value(); }

Mat inverse(const Mat& m) {
  if (m.rows() != m.cols()) throw InputError("inverse of non-square matrix");
  auto x = solve_matrix(m, Mat::identity(m.fld(), m.rows()));
  if (!x) throw InputError("matrix is singular");
  // solve_matrix gives a right inverse; for square full-rank it is two-sided
  if (rank_of(m) != m.rows()) throw InputError("matrix is singular");
  return *x;
}

bool SpanIndex::insert(const Vec& v) {
  auto [red, combo] = reduce(v);
  ++inserted_;
  std::size_t piv = red.size();
  for (std::size_t j = 0; j < red.size(); ++j)
    if (red[j] != 0) {
      piv = j;
      break;
    }
  if (piv == red.size()) return false;  // dependent
  const FiniteField& F = *F_;
  Elt pi = F.inv(red[piv]);
  for (auto& x : red) x = F.mul(x, pi);
  for (auto& x : combo) x = F.mul(x, pi);
  combo.resize(inserted_, 0);
  // full reduction of existing rows against the new one keeps rows in RREF
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    Elt f = rows_[i][piv];
    if (f != 0) {
      for (std::size_t j = 0; j < width_; ++j) rows_[i][j] = F.sub(rows_[i][j], F.mul(f, red[j]));
      auto& t = transform_[i];
      t.resize(inserted_, 0);
      for (std::size_t j = 0; j < inserted_; ++j) t[j] = F.sub(t[j], F.mul(f, combo[j]));
    }
  }
  rows_.push_back(std::move(red));
  transform_.push_back(std::move(combo));
  pivots_.push_back(piv);
  return true;
}

std::pair<Vec, Vec> SpanIndex::reduce(const Vec& v) const {
  if (v.size() != width_) throw InputError("SpanIndex: width mismatch");
  const FiniteField& F = *F_;
  Vec red = v;
  Vec combo(inserted_ + 1, 0);
  combo[inserted_] = F.one();  // v itself
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    Elt f = red[pivots_[i]];
    if (f == 0) continue;
    for (std::size_t j = 0; j < width_; ++j) red[j] = F.sub(red[j], F.mul(f, rows_[i][j]));
    const auto& t = transform_[i];
    for (std::size_t j = 0; j < t.size(); ++j) combo[j] = F.sub(combo[j], F.mul(f, t[j]));
  }
  return {std::move(red), std::move(combo)};
}

bool SpanIndex::contains(const Vec& v) const {
  auto [red, combo] = reduce(v);
  for (Elt x : red)
    if (x != 0) return false;
  return true;
}

std::optional<Vec> SpanIndex::coords(const Vec& v) const {
  auto [red, combo] = reduce(v);
  for (Elt x : red)
    if (x != 0) return std::nullopt;
  // red = v - sum c_j inserted_j = 0, so v = sum c_j inserted_j with c = -combo
  // (combo has the +1*v entry at the end; drop it)
  const FiniteField& F = *F_;
  Vec out(inserted_, 0);
  for (std::size_t j = 0; j < inserted_; ++j)
    if (j < combo.size()) out[j] = F.neg(combo[j]);
  return out;
}

Vec min_poly(const Mat& m) {
  if (m.rows() != m.cols()) throw InputError("min_poly of non-square matrix");
  const FiniteField& F = m.fld();
  std::size_t n = m.rows();
  SpanIndex span(F, n * n);
  Mat cur = Mat::identity(F, n);
  std::vector<Mat> powers;
  while (true) {
    if (!span.insert(cur.data())) break;
    powers.push_back(cur);
    cur = cur * m;
  }
  auto c = span.coords(cur.data());
  if (!c) throw InternalInconsistency("min_poly: dependence not found");
  // cur = m^k = sum c_i m^i  =>  min poly = x^k - sum c_i x^i
  Vec f(powers.size() + 1, 0);
  for (std::size_t i = 0; i < powers.size(); ++i) f[i] = F.neg((*c)[i]);
  f.back() = F.one();
  return f;
}

namespace polyq {

Vec trim(Vec f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

Vec mul(const FiniteField& F, const Vec& a, const Vec& b) {
  if (a.empty() || b.empty()) return {};
  Vec c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      c[i + j] = F.add(c[i + j], F.mul(a[i], b[j]));
  }
  return trim(std::move(c));
}

Vec mod(const FiniteField& F, Vec a, const Vec& m) {
  if (m.empty()) throw InputError("polyq::mod by zero");
  Elt lead_inv = F.inv(m.back());
  a = trim(std::move(a));
  while (a.size() >= m.size()) {
    Elt c = F.mul(a.back(), lead_inv);
    std::size_t shift = a.size() - m.size();
    if (c != 0)
      for (std::size_t i = 0; i < m.size(); ++i)
        a[shift + i] = F.sub(a[shift + i], F.mul(c, m[i]));
    a.pop_back();
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  return a;
}

Vec add(const FiniteField& F, const Vec& a, const Vec& b) {
  Vec c(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = F.add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  return trim(std::move(c));
}

Vec sub(const FiniteField& F, const Vec& a, const Vec& b) {
  Vec c(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = F.sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  return trim(std::move(c));
}

std::pair<Vec, Vec> divmod(const FiniteField& F, Vec a, const Vec& b) {
  if (b.empty()) throw InputError("polyq::divmod by zero");
  a = trim(std::move(a));
  if (a.size() < b.size()) return {Vec{}, std::move(a)};
  Vec quo(a.size() - b.size() + 1, 0);
  Elt li = F.inv(b.back());
  while (a.size() >= b.size() && !a.empty()) {
    Elt c = F.mul(a.back(), li);
    std::size_t sh = a.size() - b.size();
    quo[sh] = F.add(quo[sh], c);
    for (std::size_t i = 0; i < b.size(); ++i) a[sh + i] = F.sub(a[sh + i], F.mul(c, b[i]));
    a = trim(std::move(a));
  }
  return {trim(std::move(quo)), std::move(a)};
}

Vec gcd(const FiniteField& F, Vec a, Vec b) {
  a = trim(std::move(a));
  b = trim(std::move(b));
  while (!b.empty()) {
    a = mod(F, std::move(a), b);
    std::swap(a, b);
  }
  if (!a.empty()) {
    Elt c = F.inv(a.back());
    for (auto& x : a) x = F.mul(x, c);
  }
  return a;
}

Vec powmod(const FiniteField& F, Vec base, std::uint64_t e, const Vec& m) {
  Vec r{F.one()};
  base = mod(F, std::move(base), m);
  while (e) {
    if (e & 1) r = mod(F, mul(F, r, base), m);
    base = mod(F, mul(F, base, base), m);
    e >>= 1;
  }
  return r;
}

Elt eval(const FiniteField& F, const Vec& f, Elt x) {
  Elt acc = 0;
  for (std::size_t i = f.size(); i-- > 0;) acc = F.add(F.mul(acc, x), f[i]);
  return acc;
}

std::vector<Elt> roots(const FiniteField& F, const Vec& f) {
  std::vector<Elt> rs;
  for (Elt x = 0; x < F.order(); ++x)
    if (eval(F, f, x) == 0) rs.push_back(x);
  return rs;
}

}  // namespace polyq

Mat eval_poly(const Vec& f, const Mat& m) {
  const FiniteField& F = m.fld();
  Mat acc = Mat::zero(F, m.rows(), m.cols());
  for (std::size_t i = f.size(); i-- > 0;) {
    acc = acc * m;
    if (f[i] != 0) {
      for (std::size_t d = 0; d < m.rows(); ++d) acc.at(d, d) = F.add(acc.at(d, d), f[i]);
    }
  }
  return acc;
}

RelativeBasis::RelativeBasis(const FiniteField& small, const FiniteField& large)
    : small_(&small), large_(&large) {
  if (small.p() != large.p() || large.degree() % small.degree() != 0)
    throw InputError("RelativeBasis: not a subfield pair");
  m_ = large.degree() / small.degree();
  const auto& emb = embedding(small, large);
  Elt beta = large.gen();
  beta_pow_.resize(m_);
  Elt cur = large.one();
  for (std::size_t j = 0; j < m_; ++j) {
    beta_pow_[j] = cur;
    cur = large.mul(cur, beta);
  }
  // digit matrix over GF(p): column (j, s) = digits of embed(g_small^s) * beta^j
  const FiniteField& Fp = field(small.p(), 1);
  std::uint32_t dl = large.degree(), ds = small.degree();
  Mat dm(Fp, dl, dl);
  for (std::size_t j = 0; j < m_; ++j) {
    Elt gs = small.one();
    for (std::uint32_t s = 0; s < ds; ++s) {
      Elt v = large.mul(emb.apply(gs), beta_pow_[j]);
      auto digs = large.decode(v);
      for (std::uint32_t r = 0; r < dl; ++r) dm.at(r, j * ds + s) = digs[r];
      gs = small.mul(gs, small.gen());
    }
  }
  solver_ = inverse(dm);
}

Vec RelativeBasis::to_coords(Elt lambda) const {
  const FiniteField& Fp = field(small_->p(), 1);
  auto digs = large_->decode(lambda);
  Vec d(digs.begin(), digs.end());
  Vec sol = mat_vec(solver_, d);
  (void)Fp;
  std::uint32_t ds = small_->degree();
  Vec out(m_, 0);
  for (std::size_t j = 0; j < m_; ++j) {
    Elt c = 0, gp = small_->one();
    for (std::uint32_t s = 0; s < ds; ++s) {
      c = small_->add(c, small_->mul(small_->from_int(sol[j * ds + s]), gp));
      gp = small_->mul(gp, small_->gen());
    }
    out[j] = c;
  }
  return out;
}

Elt RelativeBasis::from_coords(const Vec& coords) const {
  const auto& emb = embedding(*small_, *large_);
  Elt acc = 0;
  for (std::size_t j = 0; j < m_ && j < coords.size(); ++j)
    acc = large_->add(acc, large_->mul(emb.apply(coords[j]), beta_pow_[j]));
  return acc;
}

Mat RelativeBasis::mult_matrix(Elt lambda) const {
  Mat m(*small_, m_, m_);
  for (std::size_t j = 0; j < m_; ++j) {
    Vec col = to_coords(large_->mul(lambda, beta_pow_[j]));
    for (std::size_t i = 0; i < m_; ++i) m.at(i, j) = col[i];
  }
  return m;
}

std::string to_string(const Mat& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i == 0 ? "[" : " ");
    for (std::size_t j = 0; j < m.cols(); ++j) os << m.at(i, j) << (j + 1 < m.cols() ? " " : "");
    os << (i + 1 < m.rows() ? ";\n" : "]");
  }
  return os.str();
}

}  // namespace blockdesc
