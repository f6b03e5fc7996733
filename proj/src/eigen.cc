#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "qwalk/spectrum.h"

namespace qwalk {
namespace {

using Real = long double;

constexpr size_t kMaxEigenDimension = 2000;
constexpr int kIterationsPerEigenvalue = 300;

class Dense {
 public:
  explicit Dense(size_t n) : n_(n), a_(n * n) {}
  Real& operator()(size_t r, size_t c) { return a_[r * n_ + c]; }
  size_t n() const { return n_; }

 private:
  size_t n_;
  std::vector<Real> a_;
};

// Parlett-Reinsch balancing: diagonal similarity by powers of two so that row
// and column norms become comparable. Exact in binary floating point.
void Balance(Dense& a) {
  const size_t n = a.n();
  constexpr Real kRadix = 2;
  constexpr Real kSqRadix = kRadix * kRadix;
  bool done = false;
  while (!done) {
    done = true;
    for (size_t i = 0; i < n; ++i) {
      Real r = 0, c = 0;
      for (size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        c += std::fabs(a(j, i));
        r += std::fabs(a(i, j));
      }
      if (c == 0 || r == 0) continue;
      Real g = r / kRadix;
      Real f = 1;
      const Real s = c + r;
      while (c < g) {
        f *= kRadix;
        c *= kSqRadix;
      }
      g = r * kRadix;
      while (c > g) {
        f /= kRadix;
        c /= kSqRadix;
      }
      if ((c + r) / f < 0.95L * s) {
        done = false;
        g = 1 / f;
        for (size_t j = 0; j < n; ++j) a(i, j) *= g;
        for (size_t j = 0; j < n; ++j) a(j, i) *= f;
      }
    }
  }
}

// Gaussian elimination with partial pivoting to upper Hessenberg form.
void ToHessenberg(Dense& a) {
  const size_t n = a.n();
  for (size_t m = 1; m + 1 < n; ++m) {
    Real x = 0;
    size_t i = m;
    for (size_t j = m; j < n; ++j) {
      if (std::fabs(a(j, m - 1)) > std::fabs(x)) {
        x = a(j, m - 1);
        i = j;
      }
    }
    if (i != m) {
      for (size_t j = m - 1; j < n; ++j) std::swap(a(i, j), a(m, j));
      for (size_t j = 0; j < n; ++j) std::swap(a(j, i), a(j, m));
    }
    if (x == 0) continue;
    for (i = m + 1; i < n; ++i) {
      Real y = a(i, m - 1);
      if (y == 0) continue;
      y /= x;
      a(i, m - 1) = y;
      for (size_t j = m; j < n; ++j) a(i, j) -= y * a(m, j);
      for (size_t j = 0; j < n; ++j) a(j, m) += y * a(j, i);
    }
  }
  for (size_t r = 2; r < n; ++r)
    for (size_t c = 0; c + 1 < r; ++c) a(r, c) = 0;
}

// Francis double-shift QR on an upper Hessenberg matrix (EISPACK hqr).
std::vector<std::pair<Real, Real>> HessenbergEigenvalues(Dense& a) {
  const int n = static_cast<int>(a.n());
  std::vector<std::pair<Real, Real>> out(n);
  Real anorm = 0;
  for (int i = 0; i < n; ++i)
    for (int j = std::max(i - 1, 0); j < n; ++j) anorm += std::fabs(a(i, j));

  int nn = n - 1;
  Real t = 0;
  Real p = 0, q = 0, r = 0, s, w, x, y, z;
  while (nn >= 0) {
    int its = 0;
    int l;
    do {
      for (l = nn; l >= 1; --l) {
        s = std::fabs(a(l - 1, l - 1)) + std::fabs(a(l, l));
        if (s == 0) s = anorm;
        if (std::fabs(a(l, l - 1)) + s == s) {
          a(l, l - 1) = 0;
          break;
        }
      }
      x = a(nn, nn);
      if (l == nn) {
        out[nn--] = {x + t, 0};
      } else {
        y = a(nn - 1, nn - 1);
        w = a(nn, nn - 1) * a(nn - 1, nn);
        if (l == nn - 1) {
          p = 0.5L * (y - x);
          q = p * p + w;
          z = std::sqrt(std::fabs(q));
          x += t;
          if (q >= 0) {
            z = p + std::copysign(z, p);
            out[nn - 1] = out[nn] = {x + z, 0};
            if (z != 0) out[nn] = {x - w / z, 0};
          } else {
            out[nn - 1] = {x + p, z};
            out[nn] = {x + p, -z};
          }
          nn -= 2;
        } else {
          if (its == kIterationsPerEigenvalue) {
            throw EigenNonConvergence("QR iteration did not converge for eigenvalue " +
                                      std::to_string(nn) + " of " + std::to_string(n));
          }
          if (its > 0 && its % 10 == 0) {
            // Exceptional shift; the multiplier varies so that repeated
            // stalls (common for orthogonal input) do not cycle.
            t += x;
            for (int i = 0; i <= nn; ++i) a(i, i) -= x;
            s = std::fabs(a(nn, nn - 1)) + std::fabs(a(nn - 1, nn - 2));
            const Real mult = 0.75L + 0.0625L * ((its / 10) % 5);
            y = x = mult * s;
            w = -0.4375L * s * s;
          }
          ++its;
          int m;
          for (m = nn - 2; m >= l; --m) {
            z = a(m, m);
            r = x - z;
            s = y - z;
            p = (r * s - w) / a(m + 1, m) + a(m, m + 1);
            q = a(m + 1, m + 1) - z - r - s;
            r = a(m + 2, m + 1);
            s = std::fabs(p) + std::fabs(q) + std::fabs(r);
            p /= s;
            q /= s;
            r /= s;
            if (m == l) break;
            const Real u = std::fabs(a(m, m - 1)) * (std::fabs(q) + std::fabs(r));
            const Real v = std::fabs(p) * (std::fabs(a(m - 1, m - 1)) + std::fabs(z) +
                                           std::fabs(a(m + 1, m + 1)));
            if (u + v == v) break;
          }
          for (int i = m + 2; i <= nn; ++i) {
            a(i, i - 2) = 0;
            if (i != m + 2) a(i, i - 3) = 0;
          }
          for (int k = m; k <= nn - 1; ++k) {
            if (k != m) {
              p = a(k, k - 1);
              q = a(k + 1, k - 1);
              r = 0;
              if (k != nn - 1) r = a(k + 2, k - 1);
              if ((x = std::fabs(p) + std::fabs(q) + std::fabs(r)) != 0) {
                p /= x;
                q /= x;
                r /= x;
              }
            }
            s = std::copysign(std::sqrt(p * p + q * q + r * r), p);
            if (s == 0) continue;
            if (k == m) {
              if (l != m) a(k, k - 1) = -a(k, k - 1);
            } else {
              a(k, k - 1) = -s * x;
            }
            p += s;
            x = p / s;
            y = q / s;
            z = r / s;
            q /= p;
            r /= p;
            for (int j = k; j <= nn; ++j) {
              p = a(k, j) + q * a(k + 1, j);
              if (k != nn - 1) {
                p += r * a(k + 2, j);
                a(k + 2, j) -= p * z;
              }
              a(k + 1, j) -= p * y;
              a(k, j) -= p * x;
            }
            const int mmin = nn < k + 3 ? nn : k + 3;
            for (int i = l; i <= mmin; ++i) {
              p = x * a(i, k) + y * a(i, k + 1);
              if (k != nn - 1) {
                p += z * a(i, k + 2);
                a(i, k + 2) -= p * r;
              }
              a(i, k + 1) -= p * q;
              a(i, k) -= p;
            }
          }
        }
      }
    } while (l < nn - 1);
  }
  return out;
}

}  // namespace

ComplexSpectrum EigFloat(const RealMatrix& m) {
  const size_t n = m.dim();
  if (n > kMaxEigenDimension) {
    throw std::invalid_argument("eigensolver limited to dimension " +
                                std::to_string(kMaxEigenDimension));
  }
  Dense a(n);
  for (size_t r = 0; r < n; ++r)
    for (size_t c = 0; c < n; ++c) a(r, c) = m(r, c);
  Balance(a);
  ToHessenberg(a);
  ComplexSpectrum out;
  out.values.reserve(n);
  for (const auto& [re, im] : HessenbergEigenvalues(a)) {
    out.values.emplace_back(static_cast<double>(re), static_cast<double>(im));
  }
  return out;
}

}  // namespace qwalk
