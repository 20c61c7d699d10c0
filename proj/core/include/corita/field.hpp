#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace corita {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Raised on malformed inputs: dimension mismatches, bad scalars, schema
/// violations. The CLI maps it to exit code 2.
class input_error : public std::runtime_error {
 public:
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when an internal construction that is guaranteed by the theory
/// fails (a map that must descend to a quotient does not, an inverse that
/// must exist is missing). Indicates a bug, not bad user data.
class internal_error : public std::logic_error {
 public:
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

/// Arithmetic context: the rationals or a prime field F_p.
///
/// Scalars are held as canonical cpp_rational values. Over F_p every scalar
/// is an integer residue in [0, p); `canon` re-establishes that form after
/// raw arithmetic. All operations are exact and deterministic.
class Field {
 public:
  static Field rationals() { return Field(0); }
  static Field prime(std::uint32_t p);

  bool is_rational() const { return p_ == 0; }
  std::uint32_t characteristic() const { return p_; }

  Rat canon(const Rat& a) const;
  Rat add(const Rat& a, const Rat& b) const { return canon(a + b); }
  Rat sub(const Rat& a, const Rat& b) const { return canon(a - b); }
  Rat mul(const Rat& a, const Rat& b) const { return canon(a * b); }
  Rat neg(const Rat& a) const { return canon(-a); }
  Rat inv(const Rat& a) const;
  Rat div(const Rat& a, const Rat& b) const { return mul(a, inv(b)); }
  Rat from_long(long v) const { return canon(Rat(v)); }
  bool is_zero(const Rat& a) const { return a.is_zero(); }

  /// "3", "-2/5" over Q; a residue "4" over F_p.
  std::string str(const Rat& a) const;
  Rat parse(const std::string& s) const;

  bool operator==(const Field& o) const { return p_ == o.p_; }
  bool operator!=(const Field& o) const { return p_ != o.p_; }
  std::string name() const;

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;  // 0 = rationals
};

}  // namespace corita
