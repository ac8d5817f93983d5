#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/gmp.hpp>

namespace recip {

/// Arbitrary-precision signed integer used for every coefficient and
/// matrix entry in the library.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

/// Raised when an operation is called outside its domain (non-monic
/// divisor, zero polynomial where a degree is needed, p | a, ...).
class precondition_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an internal identity that must hold does not. Seeing one
/// means a bug, not bad input.
class consistency_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Modulus n >= 2 for residue-ring reductions.
class Modulus {
 public:
  explicit Modulus(Integer n) : n_(std::move(n)) {
    if (n_ < 2) throw precondition_error("modulus must be at least 2");
  }
  explicit Modulus(std::int64_t n) : Modulus(Integer(n)) {}

  const Integer& value() const noexcept { return n_; }

  /// Canonical residue in [0, n).
  Integer reduce(const Integer& a) const {
    Integer r = a % n_;
    if (r < 0) r += n_;
    return r;
  }

  friend bool operator==(const Modulus&, const Modulus&) = default;

 private:
  Integer n_;
};

inline std::string to_string(const Integer& a) { return a.str(); }

}  // namespace recip
