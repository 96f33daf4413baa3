#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace vh {

// Exact arithmetic everywhere: no floating point is used on any verdict path.
using Rat = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotFiniteType : Error {
  using Error::Error;
};
struct InvalidDelta0 : Error {
  using Error::Error;
};
struct OddRank : Error {
  using Error::Error;
};
struct DimensionMismatch : Error {
  using Error::Error;
};
struct ShapeMismatch : Error {
  using Error::Error;
};
struct InvalidEll : Error {
  using Error::Error;
};
struct MissingEll : Error {
  using Error::Error;
};
struct NotInner : Error {
  using Error::Error;
};
struct NotConnected : Error {
  using Error::Error;
};

inline std::string rat_str(const Rat& x) { return x.str(); }

// Accepts "p", "-p", "p/q" with arbitrary-precision parts and q != 0.
inline std::optional<Rat> parse_rat(const std::string& s) {
  if (s.empty()) return std::nullopt;
  for (char ch : s)
    if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == '/'))
      return std::nullopt;
  try {
    Rat r(s);
    if (denominator(r) == 0) return std::nullopt;
    return r;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace vh
