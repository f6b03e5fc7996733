#include "qwalk/spectrum.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace qwalk {
namespace {

bool LexLess(const Complex& a, const Complex& b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

// Greedy pairing per the documented rule; returns the largest pair distance,
// stopping early once it exceeds `stop_above`.
double GreedyDistance(const ComplexSpectrum& a, const ComplexSpectrum& b,
                      double stop_above) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  const auto sa = a.Sorted().values;
  const auto sb = b.Sorted().values;
  std::vector<bool> used(sb.size(), false);
  double worst = 0;
  for (const Complex& z : sa) {
    size_t best = sb.size();
    double best_d = std::numeric_limits<double>::infinity();
    for (size_t j = 0; j < sb.size(); ++j) {
      if (used[j]) continue;
      const double d = std::abs(z - sb[j]);
      if (d < best_d) {
        best_d = d;
        best = j;
      }
    }
    used[best] = true;
    worst = std::max(worst, best_d);
    if (worst > stop_above) return worst;
  }
  return worst;
}

void RequireRegularInput(const ComplexSpectrum& spectrum, int n, int k) {
  if (k < 3) throw std::invalid_argument("closed form needs k >= 3, got " + std::to_string(k));
  if (n < 1 || spectrum.size() != static_cast<size_t>(n)) {
    throw std::invalid_argument("adjacency spectrum must have n = " + std::to_string(n) +
                                " values");
  }
}

// The 2n non-unit values of S+(U).
std::vector<Complex> SPlusUPairs(const ComplexSpectrum& adjacency_spectrum, int k) {
  std::vector<Complex> out;
  for (const Complex& z : adjacency_spectrum.values) {
    const double a = z.real();
    const double rad = k - 1 - a * a / 4;
    if (rad >= 0) {
      out.emplace_back(a / 2, std::sqrt(rad));
      out.emplace_back(a / 2, -std::sqrt(rad));
    } else {
      out.emplace_back(a / 2 + std::sqrt(-rad), 0);
      out.emplace_back(a / 2 - std::sqrt(-rad), 0);
    }
  }
  return out;
}

}  // namespace

ComplexSpectrum ComplexSpectrum::Sorted() const {
  ComplexSpectrum out = *this;
  std::sort(out.values.begin(), out.values.end(), LexLess);
  return out;
}

ComplexSpectrum ComplexSpectrum::Conjugated() const {
  ComplexSpectrum out = *this;
  for (auto& z : out.values) z = std::conj(z);
  return out;
}

size_t ComplexSpectrum::CountNear(Complex z, double tol) const {
  return static_cast<size_t>(std::count_if(values.begin(), values.end(),
                                           [&](const Complex& v) { return std::abs(v - z) <= tol; }));
}

bool MultisetEq(const ComplexSpectrum& a, const ComplexSpectrum& b, double tol) {
  if (tol < 0) throw std::invalid_argument("tolerance must be non-negative");
  return GreedyDistance(a, b, tol) <= tol;
}

double MultisetDistance(const ComplexSpectrum& a, const ComplexSpectrum& b) {
  return GreedyDistance(a, b, std::numeric_limits<double>::infinity());
}

ComplexSpectrum SpectrumFromT(const ComplexSpectrum& t_spectrum, int n, int m, double tol) {
  if (m < n) {
    throw std::invalid_argument("spectrum from T needs m >= n (m = " + std::to_string(m) +
                                ", n = " + std::to_string(n) + ")");
  }
  if (t_spectrum.size() != static_cast<size_t>(n)) {
    throw std::invalid_argument("spectrum of T must have n = " + std::to_string(n) + " values");
  }
  ComplexSpectrum out;
  out.values.reserve(2 * static_cast<size_t>(m));
  for (const Complex& z : t_spectrum.values) {
    const double t = z.real();
    if (std::abs(t) > 1 + tol || std::abs(z.imag()) > tol) {
      throw std::invalid_argument("eigenvalue of T outside [-1, 1]: " + std::to_string(t) +
                                  (z.imag() != 0 ? " + " + std::to_string(z.imag()) + "i" : ""));
    }
    const double im = std::sqrt(std::max(0.0, 1 - t * t));
    out.values.emplace_back(t, im);
    out.values.emplace_back(t, -im);
  }
  out.values.insert(out.values.end(), m - n, Complex(1, 0));
  out.values.insert(out.values.end(), m - n, Complex(-1, 0));
  return out;
}

ComplexSpectrum SPlusUSpectrumClosed(const ComplexSpectrum& adjacency_spectrum, int n, int k,
                                     int plus_ones) {
  RequireRegularInput(adjacency_spectrum, n, k);
  const int units = n * (k - 2);
  if (plus_ones < 0 || plus_ones > units) {
    throw std::invalid_argument("number of +1 values must lie in [0, " +
                                std::to_string(units) + "]");
  }
  ComplexSpectrum out{SPlusUPairs(adjacency_spectrum, k)};
  out.values.insert(out.values.end(), plus_ones, Complex(1, 0));
  out.values.insert(out.values.end(), units - plus_ones, Complex(-1, 0));
  return out;
}

int UnitSplitFromReference(const ComplexSpectrum& adjacency_spectrum, int n, int k,
                           const ComplexSpectrum& reference, double tol) {
  RequireRegularInput(adjacency_spectrum, n, k);
  const ComplexSpectrum pairs{SPlusUPairs(adjacency_spectrum, k)};
  const long diff = static_cast<long>(reference.CountNear(Complex(1, 0), tol)) -
                    static_cast<long>(pairs.CountNear(Complex(1, 0), tol));
  return static_cast<int>(std::clamp(diff, 0L, static_cast<long>(n) * (k - 2)));
}

ComplexSpectrum SPlusU2SpectrumClosed(const ComplexSpectrum& adjacency_spectrum, int n, int k) {
  RequireRegularInput(adjacency_spectrum, n, k);
  ComplexSpectrum out;
  for (const Complex& z : adjacency_spectrum.values) {
    const double a = z.real();
    const double re = a * a / 2 + 2 - k;
    const double rad = k - 1 - a * a / 4;
    // Squares of the S+(U) pair: a real pair when the radicand is negative.
    if (rad >= 0) {
      const double im = a * std::sqrt(rad);
      out.values.emplace_back(re, im);
      out.values.emplace_back(re, -im);
    } else {
      const double off = std::abs(a) * std::sqrt(-rad);
      out.values.emplace_back(re + off, 0);
      out.values.emplace_back(re - off, 0);
    }
  }
  out.values.insert(out.values.end(), static_cast<size_t>(n) * (k - 2), Complex(2, 0));
  return out;
}

}  // namespace qwalk
