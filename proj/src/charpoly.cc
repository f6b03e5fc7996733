#include "qwalk/charpoly.h"

#include <algorithm>
#include <string>
#include <utility>

namespace qwalk {
namespace {

using u64 = uint64_t;
using u128 = unsigned __int128;

// Residues kept in Montgomery form, R = 2^64. Valid for odd moduli < 2^62,
// where t + m p cannot overflow 128 bits.
class MontgomeryField {
 public:
  explicit MontgomeryField(u64 p) : p_(p) {
    u64 inv = p;  // Newton iteration for p^-1 mod 2^64
    for (int i = 0; i < 6; ++i) inv *= 2 - p * inv;
    neg_inv_ = ~inv + 1;
    r2_ = static_cast<u64>((static_cast<u128>(1) << 64) % p);
    r2_ = static_cast<u64>(static_cast<u128>(r2_) * r2_ % p);
  }

  u64 from_int(u64 v) const { return mul(v % p_, r2_); }
  u64 to_int(u64 v) const { return reduce(v); }
  u64 zero() const { return 0; }
  u64 one() const { return from_int(1); }
  u64 add(u64 a, u64 b) const {
    u64 s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p_ - b; }
  u64 neg(u64 a) const { return a == 0 ? 0 : p_ - a; }
  u64 mul(u64 a, u64 b) const { return reduce(static_cast<u128>(a) * b); }
  u64 inv(u64 a) const { return pow(a, p_ - 2); }

 private:
  u64 reduce(u128 t) const {
    const u64 m = static_cast<u64>(t) * neg_inv_;
    const u64 u = static_cast<u64>((t + static_cast<u128>(m) * p_) >> 64);
    return u >= p_ ? u - p_ : u;
  }
  u64 pow(u64 a, u64 e) const {
    u64 r = one();
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  u64 p_;
  u64 neg_inv_;
  u64 r2_;
};

// Straightforward residues for moduli Montgomery form cannot handle.
class PlainField {
 public:
  explicit PlainField(u64 p) : p_(p) {}
  u64 from_int(u64 v) const { return v % p_; }
  u64 to_int(u64 v) const { return v; }
  u64 zero() const { return 0; }
  u64 one() const { return 1 % p_; }
  u64 add(u64 a, u64 b) const {
    u64 s = a + b;
    return (s >= p_ || s < a) ? s - p_ : s;
  }
  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + (p_ - b); }
  u64 neg(u64 a) const { return a == 0 ? 0 : p_ - a; }
  u64 mul(u64 a, u64 b) const { return static_cast<u64>(static_cast<u128>(a) * b % p_); }
  u64 inv(u64 a) const {
    u64 r = one(), e = p_ - 2;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

 private:
  u64 p_;
};

u64 ResidueOf(int64_t v, u64 p) {
  if (v >= 0) return static_cast<u64>(v) % p;
  const u64 r = static_cast<u64>(-(v + 1)) % p;  // avoids overflow on INT64_MIN
  return (p - 1 - r) % p;
}

template <typename Field>
ModPoly HessenbergCharPoly(const IntegerMatrix& m, u64 prime) {
  const Field f(prime);
  const size_t n = m.dim();
  std::vector<u64> h(n * n);
  for (size_t r = 0; r < n; ++r)
    for (size_t c = 0; c < n; ++c) h[r * n + c] = f.from_int(ResidueOf(m(r, c), prime));
  auto at = [&](size_t r, size_t c) -> u64& { return h[r * n + c]; };

  // Similarity reduction to upper Hessenberg form.
  std::vector<u64> multipliers;
  for (size_t col = 0; col + 2 < n; ++col) {
    size_t pivot = col + 1;
    while (pivot < n && at(pivot, col) == 0) ++pivot;
    if (pivot == n) continue;
    if (pivot != col + 1) {
      for (size_t c = 0; c < n; ++c) std::swap(at(pivot, c), at(col + 1, c));
      for (size_t r = 0; r < n; ++r) std::swap(at(r, pivot), at(r, col + 1));
    }
    // H <- L H L^-1 with L = I - sum_r u_r e_r e_{col+1}^T. The row updates
    // commute with each other, so all of them go first; the column update
    // then only rewrites column col+1 and can be done row by row.
    const u64 inv_pivot = f.inv(at(col + 1, col));
    multipliers.assign(n, 0);
    bool any = false;
    const u64* row_p = &at(col + 1, 0);
    for (size_t r = col + 2; r < n; ++r) {
      if (at(r, col) == 0) continue;
      const u64 u = f.mul(at(r, col), inv_pivot);
      multipliers[r] = u;
      any = true;
      u64* row_r = &at(r, 0);
      for (size_t c = col; c < n; ++c) row_r[c] = f.sub(row_r[c], f.mul(u, row_p[c]));
    }
    if (!any) continue;
    for (size_t k = 0; k < n; ++k) {
      const u64* row_k = &at(k, 0);
      u64 acc = row_k[col + 1];
      for (size_t r = col + 2; r < n; ++r) {
        if (multipliers[r] != 0) acc = f.add(acc, f.mul(multipliers[r], row_k[r]));
      }
      at(k, col + 1) = acc;
    }
  }

  // polys[k] is the characteristic polynomial of the leading k x k block,
  // stored constant term first while building.
  std::vector<std::vector<u64>> polys(n + 1);
  polys[0] = {f.one()};
  for (size_t k = 1; k <= n; ++k) {
    const size_t mcol = k - 1;
    std::vector<u64> p(k + 1, f.zero());
    // (x - h_kk) p_{k-1}
    const auto& prev = polys[k - 1];
    for (size_t d = 0; d < prev.size(); ++d) {
      p[d + 1] = f.add(p[d + 1], prev[d]);
      p[d] = f.sub(p[d], f.mul(at(mcol, mcol), prev[d]));
    }
    // - sum_{i<k} h_{i,k} (prod_{j=i+1}^{k} h_{j,j-1}) p_{i-1}
    u64 prod = f.one();
    for (size_t i = mcol; i-- > 0;) {
      prod = f.mul(prod, at(i + 1, i));
      if (prod == 0) break;
      const u64 coef = f.mul(at(i, mcol), prod);
      if (coef == 0) continue;
      const auto& q = polys[i];
      for (size_t d = 0; d < q.size(); ++d) p[d] = f.sub(p[d], f.mul(coef, q[d]));
    }
    polys[k] = std::move(p);
  }
  ModPoly out(n + 1);
  for (size_t d = 0; d <= n; ++d) out[n - d] = f.to_int(polys[n][d]);
  return out;
}

void AddScaled(mpz_class& acc, int64_t a, const mpz_class& b) {
  if (a == 0) return;
  if (a == 1) {
    acc += b;
  } else if (a == -1) {
    acc -= b;
  } else if (a > 0) {
    mpz_addmul_ui(acc.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(a));
  } else {
    mpz_submul_ui(acc.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(-a));
  }
}

}  // namespace

IntPoly CharPolyExact(const IntegerMatrix& m, size_t cutoff) {
  const size_t n = m.dim();
  if (n > cutoff) {
    throw DimensionOverCutoff("exact characteristic polynomial limited to dimension " +
                              std::to_string(cutoff) + " (got " +
                              std::to_string(n) + "); use modular signatures");
  }
  IntPoly poly = {1};
  std::vector<mpz_class> v, w;
  for (size_t r = 0; r < n; ++r) {
    // Leading (r+1) x (r+1) block: previous block A, new column C, new row
    // R, corner a. Toeplitz column t = [1, -a, -RC, -RAC, ..., -R A^{r-1} C].
    std::vector<mpz_class> t(r + 2);
    t[0] = 1;
    t[1] = -m(r, r);
    v.assign(r, 0);
    for (size_t i = 0; i < r; ++i) v[i] = m(i, r);
    for (size_t k = 2; k < r + 2; ++k) {
      mpz_class dot = 0;
      for (size_t i = 0; i < r; ++i) AddScaled(dot, m(r, i), v[i]);
      t[k] = -dot;
      if (k + 1 < r + 2) {
        w.assign(r, 0);
        for (size_t i = 0; i < r; ++i)
          for (size_t j = 0; j < r; ++j) AddScaled(w[i], m(i, j), v[j]);
        v.swap(w);
      }
    }
    IntPoly next(r + 2);
    for (size_t i = 0; i < r + 2; ++i) {
      for (size_t j = 0; j <= std::min(i, r); ++j) {
        if (poly[j] != 0 && t[i - j] != 0) next[i] += t[i - j] * poly[j];
      }
    }
    poly = std::move(next);
  }
  return poly;
}

ModPoly CharPolyModP(const IntegerMatrix& m, uint64_t prime) {
  if (prime <= 1) {
    throw std::invalid_argument("modulus must be a prime, got " + std::to_string(prime));
  }
  if ((prime & 1) && prime < (static_cast<u64>(1) << 62)) {
    return HessenbergCharPoly<MontgomeryField>(m, prime);
  }
  return HessenbergCharPoly<PlainField>(m, prime);
}

ModPoly ReduceMod(const IntPoly& poly, uint64_t prime) {
  ModPoly out(poly.size());
  mpz_class r;
  for (size_t i = 0; i < poly.size(); ++i) {
    mpz_fdiv_r_ui(r.get_mpz_t(), poly[i].get_mpz_t(), prime);
    out[i] = r.get_ui();
  }
  return out;
}

IntPoly Multiply(const IntPoly& a, const IntPoly& b) {
  IntPoly out(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

IntPoly Monomial(size_t k) {
  IntPoly p(k + 1);
  p[0] = 1;
  return p;
}

IntPoly PowerOf(const IntPoly& p, size_t e) {
  IntPoly out = {1};
  for (size_t i = 0; i < e; ++i) out = Multiply(out, p);
  return out;
}

}  // namespace qwalk
