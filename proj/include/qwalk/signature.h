#ifndef QWALK_SIGNATURE_H_
#define QWALK_SIGNATURE_H_

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qwalk/charpoly.h"
#include "qwalk/matrix.h"

namespace qwalk {

// The four primes used by every modular signature, largest first. Changing
// them changes every serialized signature.
inline constexpr std::array<uint64_t, 4> kSignaturePrimes = {
    2305843009213693951ULL,  // 2^61 - 1
    2305843009213693921ULL,
    2305843009213693907ULL,
    2305843009213693723ULL,
};

enum class SignatureMode { kExact, kModular };

const char* ModeName(SignatureMode mode);
SignatureMode ParseMode(std::string_view name);

// Characteristic polynomial of a square integer matrix in a form that can be
// compared for equality and serialized.
//
// Serialized form: "<degree>:<mode>:<field>=<coeffs>[;<field>=<coeffs>...]"
// where mode is "exact" or "modular", field is "Z" for the exact polynomial
// or the decimal prime, and coeffs are comma-separated decimals, leading
// coefficient first. Modular residues lie in [0, prime).
struct CharPolySignature {
  size_t degree = 0;
  SignatureMode mode = SignatureMode::kExact;
  IntPoly exact;                                  // exact mode
  std::vector<std::pair<uint64_t, ModPoly>> residues;  // modular mode

  static CharPolySignature FromExact(IntPoly poly);
  static CharPolySignature Parse(std::string_view text);

  // The exact polynomial reduced to the given primes.
  CharPolySignature Reduced(std::span<const uint64_t> primes = kSignaturePrimes) const;

  std::string Serialize() const;

  friend bool operator==(const CharPolySignature& a, const CharPolySignature& b) {
    return a.degree == b.degree && a.mode == b.mode && a.exact == b.exact &&
           a.residues == b.residues;
  }
};

// Exact mode: CharPolyExact (subject to `exact_cutoff`). Modular mode:
// CharPolyModP over each of `primes`.
CharPolySignature Signature(const IntegerMatrix& m, SignatureMode mode,
                            std::span<const uint64_t> primes = kSignaturePrimes,
                            size_t exact_cutoff = kDefaultExactCutoff);

std::string FormatPolynomial(const IntPoly& poly);

}  // namespace qwalk

#endif  // QWALK_SIGNATURE_H_
