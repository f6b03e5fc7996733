#include "qwalk/signature.h"

#include <charconv>
#include <sstream>
#include <stdexcept>

namespace qwalk {
namespace {

std::vector<std::string_view> Split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  size_t start = 0;
  while (true) {
    const size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

uint64_t ParseU64(std::string_view s) {
  uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::invalid_argument("bad integer in signature: '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

const char* ModeName(SignatureMode mode) {
  return mode == SignatureMode::kExact ? "exact" : "modular";
}

SignatureMode ParseMode(std::string_view name) {
  if (name == "exact") return SignatureMode::kExact;
  if (name == "modular") return SignatureMode::kModular;
  throw std::invalid_argument("unknown signature mode '" + std::string(name) +
                              "' (expected exact or modular)");
}

CharPolySignature CharPolySignature::FromExact(IntPoly poly) {
  CharPolySignature s;
  s.degree = poly.size() - 1;
  s.mode = SignatureMode::kExact;
  s.exact = std::move(poly);
  return s;
}

CharPolySignature CharPolySignature::Reduced(std::span<const uint64_t> primes) const {
  if (mode != SignatureMode::kExact) {
    throw std::logic_error("only exact signatures can be reduced");
  }
  CharPolySignature s;
  s.degree = degree;
  s.mode = SignatureMode::kModular;
  for (uint64_t p : primes) s.residues.emplace_back(p, ReduceMod(exact, p));
  return s;
}

std::string CharPolySignature::Serialize() const {
  std::ostringstream os;
  os << degree << ':' << ModeName(mode) << ':';
  auto put = [&](const auto& coeffs) {
    for (size_t i = 0; i < coeffs.size(); ++i) os << (i ? "," : "") << coeffs[i];
  };
  if (mode == SignatureMode::kExact) {
    os << "Z=";
    put(exact);
  } else {
    for (size_t i = 0; i < residues.size(); ++i) {
      os << (i ? ";" : "") << residues[i].first << '=';
      put(residues[i].second);
    }
  }
  return os.str();
}

CharPolySignature CharPolySignature::Parse(std::string_view text) {
  const size_t c1 = text.find(':');
  const size_t c2 = c1 == std::string_view::npos ? c1 : text.find(':', c1 + 1);
  if (c2 == std::string_view::npos) {
    throw std::invalid_argument("signature needs the form degree:mode:fields");
  }
  CharPolySignature s;
  s.degree = ParseU64(text.substr(0, c1));
  s.mode = ParseMode(text.substr(c1 + 1, c2 - c1 - 1));
  for (std::string_view field : Split(text.substr(c2 + 1), ';')) {
    const size_t eq = field.find('=');
    if (eq == std::string_view::npos) throw std::invalid_argument("signature field lacks '='");
    const auto name = field.substr(0, eq);
    const auto coeffs = Split(field.substr(eq + 1), ',');
    if (coeffs.size() != s.degree + 1) {
      throw std::invalid_argument("signature field has " + std::to_string(coeffs.size()) +
                                  " coefficients, expected " + std::to_string(s.degree + 1));
    }
    if (s.mode == SignatureMode::kExact) {
      if (name != "Z" || !s.exact.empty()) throw std::invalid_argument("bad exact signature");
      for (auto c : coeffs) {
        mpz_class v;
        if (v.set_str(std::string(c), 10) != 0) {
          throw std::invalid_argument("bad integer in signature: '" + std::string(c) + "'");
        }
        s.exact.push_back(v);
      }
    } else {
      ModPoly poly;
      for (auto c : coeffs) poly.push_back(ParseU64(c));
      s.residues.emplace_back(ParseU64(name), std::move(poly));
    }
  }
  return s;
}

CharPolySignature Signature(const IntegerMatrix& m, SignatureMode mode,
                            std::span<const uint64_t> primes, size_t exact_cutoff) {
  if (mode == SignatureMode::kExact) {
    return CharPolySignature::FromExact(CharPolyExact(m, exact_cutoff));
  }
  CharPolySignature s;
  s.degree = m.dim();
  s.mode = SignatureMode::kModular;
  for (uint64_t p : primes) s.residues.emplace_back(p, CharPolyModP(m, p));
  return s;
}

std::string FormatPolynomial(const IntPoly& poly) {
  std::ostringstream os;
  const size_t n = poly.size() - 1;
  bool first = true;
  for (size_t i = 0; i < poly.size(); ++i) {
    if (poly[i] == 0) continue;
    const size_t e = n - i;
    mpz_class mag = abs(poly[i]);
    os << (poly[i] < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    if (mag != 1 || e == 0) os << mag;
    if (e > 0) os << 'x';
    if (e > 1) os << '^' << e;
    first = false;
  }
  if (first) os << '0';
  return os.str();
}

}  // namespace qwalk
