#include "blockdesc/field.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

#include "blockdesc/errors.hpp"

namespace blockdesc {
namespace {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t i = 2; std::uint64_t(i) * i <= n; ++i)
    if (n % i == 0) return false;
  return true;
}

// Dense polynomials over GF(p), coefficients low-to-high, no trailing zeros.
using Poly = std::vector<std::uint32_t>;

Poly trim(Poly f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      c[i + j] = (c[i + j] + std::uint64_t(a[i]) * b[j]) % p;
  return trim(std::move(c));
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  // p prime, a != 0
  std::int64_t t = 0, newt = 1, r = p, newr = a % p;
  while (newr != 0) {
    std::int64_t q = r / newr;
    std::swap(t -= q * newt, newt);
    std::swap(r -= q * newr, newr);
  }
  return std::uint32_t((t % p + p) % p);
}

Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  std::uint32_t lead_inv = inv_mod(m.back(), p);
  while (a.size() >= m.size()) {
    std::uint32_t c = std::uint32_t(std::uint64_t(a.back()) * lead_inv % p);
    std::size_t shift = a.size() - m.size();
    if (c != 0)
      for (std::size_t i = 0; i < m.size(); ++i) {
        std::uint64_t v = std::uint64_t(c) * m[i] % p;
        a[shift + i] = std::uint32_t((a[shift + i] + p - v) % p);
      }
    a.pop_back();
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint32_t p) {
  return poly_mod(poly_mul(a, b, p), m, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& m, std::uint32_t p) {
  Poly r{1};
  base = poly_mod(std::move(base), m, p);
  while (e) {
    if (e & 1) r = poly_mulmod(r, base, m, p);
    base = poly_mulmod(base, base, m, p);
    e >>= 1;
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
  while (!b.empty()) {
    a = poly_mod(std::move(a), b, p);
    std::swap(a, b);
  }
  if (!a.empty()) {
    std::uint32_t c = inv_mod(a.back(), p);
    for (auto& x : a) x = std::uint32_t(std::uint64_t(x) * c % p);
  }
  return a;
}

std::vector<std::uint32_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint32_t> fs;
  for (std::uint64_t q = 2; q * q <= n; ++q)
    if (n % q == 0) {
      fs.push_back(std::uint32_t(q));
      while (n % q == 0) n /= q;
    }
  if (n > 1) fs.push_back(std::uint32_t(n));
  return fs;
}

// Rabin: f of degree d is irreducible over GF(p) iff x^(p^d) = x mod f and
// gcd(x^(p^(d/r)) - x, f) = 1 for every prime r | d.
bool is_irreducible(const Poly& f, std::uint32_t p) {
  std::uint32_t d = std::uint32_t(f.size() - 1);
  if (d == 0) return false;
  if (d == 1) return true;
  auto pow_p = [&](std::uint32_t e) {
    // x^(p^e) mod f by iterated p-th powers
    Poly r{0, 1};
    for (std::uint32_t i = 0; i < e; ++i) r = poly_powmod(r, p, f, p);
    return r;
  };
  Poly xq = pow_p(d);
  Poly x{0, 1};
  // xq - x must be 0 mod f
  Poly diff = xq;
  diff.resize(std::max(diff.size(), x.size()), 0);
  for (std::size_t i = 0; i < x.size(); ++i) diff[i] = (diff[i] + p - x[i]) % p;
  if (!trim(diff).empty()) return false;
  for (std::uint32_t r : prime_factors(d)) {
    Poly h = pow_p(d / r);
    Poly g = h;
    g.resize(std::max(g.size(), x.size()), 0);
    for (std::size_t i = 0; i < x.size(); ++i) g[i] = (g[i] + p - x[i]) % p;
    if (poly_gcd(trim(g), f, p).size() != 1) return false;
  }
  return true;
}

constexpr std::uint32_t kTableMax = 1024;  // full q x q tables below this

}  // namespace

FiniteField::FiniteField(std::uint32_t p, std::uint32_t d) : p_(p), d_(d) {
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < d; ++i) q *= p;
  q_ = std::uint32_t(q);

  // Deterministic modulus: the least monic irreducible of degree d, ordering
  // candidates by the base-p code of their low-coefficient vector.
  modulus_.assign(d + 1, 0);
  modulus_[d] = 1;
  for (std::uint64_t code = 0;; ++code) {
    if (code >= q_) throw InternalInconsistency("no irreducible modulus found");
    Poly f(d + 1, 0);
    std::uint64_t c = code;
    for (std::uint32_t i = 0; i < d; ++i) {
      f[i] = std::uint32_t(c % p);
      c /= p;
    }
    f[d] = 1;
    if (is_irreducible(f, p)) {
      modulus_.assign(f.begin(), f.end());
      break;
    }
  }

  one_ = 1;
  gen_ = (d == 1) ? (p - modulus_[0]) % p : p;  // class of x; for d=1, the root of x+c

  // Multiplication via residue polynomials, used to bootstrap the tables.
  auto decode_raw = [&](Elt a) {
    Poly f;
    while (a) {
      f.push_back(a % p);
      a /= p;
    }
    return f;
  };
  auto encode_raw = [&](const Poly& f) {
    Elt a = 0;
    for (std::size_t i = f.size(); i-- > 0;) a = a * p + f[i];
    return a;
  };
  auto raw_mul = [&](Elt a, Elt b) {
    if (a == 0 || b == 0) return Elt(0);
    return encode_raw(poly_mulmod(decode_raw(a), decode_raw(b), modulus_, p));
  };

  // Find a multiplicative generator and build exp/log.
  std::uint64_t m = q_ - 1;
  auto factors = prime_factors(m);
  auto elt_pow = [&](Elt a, std::uint64_t e) {
    Elt r = 1;
    while (e) {
      if (e & 1) r = raw_mul(r, a);
      a = raw_mul(a, a);
      e >>= 1;
    }
    return r;
  };
  primitive_ = 0;
  for (Elt g = 1; g < q_; ++g) {
    bool ok = true;
    for (std::uint32_t r : factors)
      if (elt_pow(g, m / r) == 1) {
        ok = false;
        break;
      }
    if (ok) {
      primitive_ = g;
      break;
    }
  }
  if (primitive_ == 0) throw InternalInconsistency("no multiplicative generator");

  exp_.resize(m + 1);
  log_.assign(q_, 0);
  Elt cur = 1;
  for (std::uint64_t i = 0; i < m; ++i) {
    exp_[i] = cur;
    log_[cur] = std::uint32_t(i);
    cur = raw_mul(cur, primitive_);
  }
  exp_[m] = 1;

  if (q_ <= kTableMax) {
    mul_table_.assign(std::size_t(q_) * q_, 0);
    add_table_.assign(std::size_t(q_) * q_, 0);
    neg_table_.assign(q_, 0);
    inv_table_.assign(q_, 0);
    for (Elt a = 0; a < q_; ++a)
      for (Elt b = 0; b < q_; ++b) {
        mul_table_[std::size_t(a) * q_ + b] = raw_mul(a, b);
        add_table_[std::size_t(a) * q_ + b] = add_slow(a, b);
      }
    for (Elt a = 0; a < q_; ++a) {
      // neg: digitwise p-complement
      Elt r = 0, mul = 1, x = a;
      for (std::uint32_t i = 0; i < d_; ++i) {
        std::uint32_t dig = x % p_;
        x /= p_;
        r += ((p_ - dig) % p_) * mul;
        mul *= p_;
      }
      neg_table_[a] = r;
      if (a != 0) inv_table_[a] = exp_[m - log_[a]];
    }
  }
}

FiniteField::Elt FiniteField::add_slow(Elt a, Elt b) const {
  if (p_ == 2) return a ^ b;
  Elt r = 0, mul = 1;
  for (std::uint32_t i = 0; i < d_; ++i) {
    std::uint32_t da = a % p_, db = b % p_;
    a /= p_;
    b /= p_;
    r += ((da + db) % p_) * mul;
    mul *= p_;
  }
  return r;
}

FiniteField::Elt FiniteField::mul_via_log(Elt a, Elt b) const {
  if (a == 0 || b == 0) return 0;
  std::uint64_t s = std::uint64_t(log_[a]) + log_[b];
  std::uint64_t m = q_ - 1;
  return exp_[s >= m ? s - m : s];
}

FiniteField::Elt FiniteField::add(Elt a, Elt b) const {
  if (!add_table_.empty()) return add_table_[std::size_t(a) * q_ + b];
  return add_slow(a, b);
}

FiniteField::Elt FiniteField::neg(Elt a) const {
  if (!neg_table_.empty()) return neg_table_[a];
  if (p_ == 2) return a;
  Elt r = 0, mul = 1;
  for (std::uint32_t i = 0; i < d_; ++i) {
    std::uint32_t dig = a % p_;
    a /= p_;
    r += ((p_ - dig) % p_) * mul;
    mul *= p_;
  }
  return r;
}

FiniteField::Elt FiniteField::sub(Elt a, Elt b) const { return add(a, neg(b)); }

FiniteField::Elt FiniteField::mul(Elt a, Elt b) const {
  if (!mul_table_.empty()) return mul_table_[std::size_t(a) * q_ + b];
  return mul_via_log(a, b);
}

FiniteField::Elt FiniteField::inv(Elt a) const {
  if (a == 0) throw InputError("division by zero in GF(" + std::to_string(q_) + ")");
  if (!inv_table_.empty()) return inv_table_[a];
  return exp_[(q_ - 1) - log_[a]];
}

FiniteField::Elt FiniteField::pow(Elt a, std::int64_t e) const {
  if (a == 0) {
    if (e < 0) throw InputError("0 to a negative power");
    return e == 0 ? one_ : 0;
  }
  std::int64_t m = q_ - 1;
  std::int64_t r = ((e % m) + m) % m;
  return exp_[std::uint64_t(log_[a]) * r % m];
}

FiniteField::Elt FiniteField::frobenius(Elt a, std::uint32_t i) const {
  if (a == 0) return 0;
  std::uint64_t m = q_ - 1;
  std::uint64_t f = 1;
  for (std::uint32_t j = 0; j < i % d_; ++j) f = f * p_ % m;
  return exp_[std::uint64_t(log_[a]) * f % m];
}

FiniteField::Elt FiniteField::from_int(std::int64_t n) const {
  std::int64_t r = n % std::int64_t(p_);
  if (r < 0) r += p_;
  return Elt(r);
}

std::vector<std::uint32_t> FiniteField::decode(Elt a) const {
  std::vector<std::uint32_t> c(d_, 0);
  for (std::uint32_t i = 0; i < d_; ++i) {
    c[i] = a % p_;
    a /= p_;
  }
  return c;
}

FiniteField::Elt FiniteField::encode(const std::vector<std::uint32_t>& coeffs) const {
  if (coeffs.size() > d_) throw InputError("coefficient vector longer than field degree");
  Elt a = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] >= p_) throw InputError("coefficient out of range");
    a = a * p_ + coeffs[i];
  }
  return a;
}

const FiniteField& field(std::uint32_t p, std::uint32_t d) {
  if (!is_prime(p)) throw InputError("field characteristic must be prime, got " + std::to_string(p));
  if (d == 0) throw InputError("field degree must be positive");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < d; ++i) {
    q *= p;
    if (q > kMaxFieldOrder)
      throw InputError("field order p^d exceeds the configured bound " +
                       std::to_string(kMaxFieldOrder));
  }
  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, std::uint32_t>, std::unique_ptr<FiniteField>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{p, d}];
  if (!slot) slot.reset(new FiniteField(p, d));
  return *slot;
}

FieldAut FieldAut::compose(const FieldAut& other) const {
  if (fld != other.fld) throw InputError("composing automorphisms of different fields");
  return FieldAut{fld, (exponent + other.exponent) % fld->degree()};
}

FieldAut FieldAut::inverse() const {
  std::uint32_t d = fld->degree();
  return FieldAut{fld, (d - exponent % d) % d};
}

SubfieldEmbedding::SubfieldEmbedding(const FiniteField& small, const FiniteField& large)
    : small_(&small), large_(&large) {
  if (small.p() != large.p()) throw InputError("subfield embedding requires equal characteristic");
  if (large.degree() % small.degree() != 0)
    throw InputError("subfield degree must divide the large field degree");

  if (&small == &large) {
    gen_image_ = small.gen();
  } else {
    // least root of the small modulus inside the large field
    const auto& m = small.modulus();
    gen_image_ = 0;
    bool found = false;
    for (FiniteField::Elt x = 0; x < large.order(); ++x) {
      FiniteField::Elt acc = 0, xp = large.one();
      for (std::size_t i = 0; i < m.size(); ++i) {
        acc = large.add(acc, large.mul(large.from_int(m[i]), xp));
        xp = large.mul(xp, x);
      }
      if (acc == 0) {
        gen_image_ = x;
        found = true;
        break;
      }
    }
    if (!found) throw InternalInconsistency("small modulus has no root in the large field");
  }
  basis_images_.resize(small.degree());
  FiniteField::Elt cur = large.one();
  for (std::uint32_t i = 0; i < small.degree(); ++i) {
    basis_images_[i] = cur;
    cur = large.mul(cur, gen_image_);
  }
}

FiniteField::Elt SubfieldEmbedding::apply(FiniteField::Elt a) const {
  if (small_ == large_) return a;
  auto coeffs = small_->decode(a);
  FiniteField::Elt r = 0;
  for (std::uint32_t i = 0; i < small_->degree(); ++i)
    r = large_->add(r, large_->mul(large_->from_int(coeffs[i]), basis_images_[i]));
  return r;
}

std::optional<FiniteField::Elt> SubfieldEmbedding::preimage(FiniteField::Elt y) const {
  if (small_ == large_) return y;
  // Solve sum c_i * basis_images_[i] = y for GF(p) digits c_i by Gaussian
  // elimination on the (large.d x small.d) digit matrix. Dimensions are tiny.
  std::uint32_t p = small_->p();
  std::uint32_t rows = large_->degree(), cols = small_->degree();
  std::vector<std::vector<std::uint32_t>> a(rows, std::vector<std::uint32_t>(cols + 1, 0));
  for (std::uint32_t j = 0; j < cols; ++j) {
    auto digs = large_->decode(basis_images_[j]);
    for (std::uint32_t i = 0; i < rows; ++i) a[i][j] = digs[i];
  }
  auto ydigs = large_->decode(y);
  for (std::uint32_t i = 0; i < rows; ++i) a[i][cols] = ydigs[i];

  std::vector<std::int32_t> pivot_of_col(cols, -1);
  std::uint32_t r = 0;
  for (std::uint32_t c = 0; c < cols && r < rows; ++c) {
    std::uint32_t sel = r;
    while (sel < rows && a[sel][c] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(a[sel], a[r]);
    std::uint32_t piv_inv = inv_mod(a[r][c], p);
    for (auto& x : a[r]) x = std::uint32_t(std::uint64_t(x) * piv_inv % p);
    for (std::uint32_t i = 0; i < rows; ++i)
      if (i != r && a[i][c] != 0) {
        std::uint32_t f = a[i][c];
        for (std::uint32_t j = 0; j <= cols; ++j)
          a[i][j] = std::uint32_t((a[i][j] + std::uint64_t(p - f) * a[r][j]) % p);
      }
    pivot_of_col[c] = std::int32_t(r);
    ++r;
  }
  for (std::uint32_t i = r; i < rows; ++i)
    if (a[i][cols] != 0) return std::nullopt;  // inconsistent: y not in image
  std::vector<std::uint32_t> coeffs(cols, 0);
  for (std::uint32_t c = 0; c < cols; ++c)
    if (pivot_of_col[c] >= 0) coeffs[c] = a[std::uint32_t(pivot_of_col[c])][cols];
  // coefficients are in the power basis of the small generator
  FiniteField::Elt res = 0, gp = small_->one();
  for (std::uint32_t i = 0; i < cols; ++i) {
    res = small_->add(res, small_->mul(small_->from_int(coeffs[i]), gp));
    gp = small_->mul(gp, small_->gen());
  }
  // decode/encode mismatch safety: verify
  if (apply(res) != y) return std::nullopt;
  return res;
}

const SubfieldEmbedding& embedding(const FiniteField& small, const FiniteField& large) {
  static std::mutex mu;
  static std::map<std::pair<const FiniteField*, const FiniteField*>,
                  std::unique_ptr<SubfieldEmbedding>>
      cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{&small, &large}];
  if (!slot) slot.reset(new SubfieldEmbedding(small, large));
  return *slot;
}

std::vector<FieldAut> galois_group(const FiniteField& large, std::uint32_t small_degree) {
  if (small_degree == 0 || large.degree() % small_degree != 0)
    throw InputError("galois_group: small degree must divide the extension degree");
  std::uint32_t n = large.degree() / small_degree;
  std::vector<FieldAut> gs;
  gs.reserve(n);
  for (std::uint32_t i = 0; i < n; ++i)
    gs.push_back(FieldAut{&large, (i * small_degree) % large.degree()});
  return gs;
}

std::vector<FieldAut> galois_group(const FiniteField& large, const FiniteField& small) {
  if (small.p() != large.p()) throw InputError("galois_group: mixed characteristics");
  return galois_group(large, small.degree());
}

FixedField stabilizer_fixed_field(const std::vector<FieldAut>& subgroup) {
  if (subgroup.empty()) throw InputError("stabilizer_fixed_field: empty input");
  const FiniteField* L = subgroup[0].fld;
  std::uint32_t d = L->degree();
  // exponents mod d, closed under addition <=> subgroup of Z/d
  std::vector<std::uint32_t> exps;
  for (const auto& s : subgroup) {
    if (s.fld != L) throw InputError("stabilizer_fixed_field: mixed fields");
    exps.push_back(s.exponent % d);
  }
  std::sort(exps.begin(), exps.end());
  exps.erase(std::unique(exps.begin(), exps.end()), exps.end());
  std::uint32_t g = d;
  for (auto e : exps) g = std::uint32_t(std::gcd(g, e));
  // subgroup of Z/d generated by g has order d/g; check closure
  if (exps.size() * g != d && !(exps.size() == 1 && exps[0] == 0))
    throw InputError("stabilizer_fixed_field: input is not a subgroup");
  for (auto e : exps)
    if (e % g != 0) throw InputError("stabilizer_fixed_field: input is not a subgroup");
  // fixed field of x -> x^(p^g) is GF(p^g)
  const FiniteField& F = field(L->p(), g == 0 ? d : g);
  return FixedField{&F, embedding(F, *L)};
}

}  // namespace blockdesc
