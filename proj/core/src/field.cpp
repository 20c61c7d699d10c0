#include "corita/field.hpp"

namespace corita {

namespace {

bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// residue of a cpp_int mod p, in [0, p)
std::int64_t residue(const Int& v, std::uint32_t p) {
  Int r = v % p;
  if (r < 0) r += p;
  return static_cast<std::int64_t>(r);
}

std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, nt = 1, r = p, nr = a % p;
  if (nr < 0) nr += p;
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::swap(t -= q * nt, nt);
    std::swap(r -= q * nr, nr);
  }
  if (r != 1) throw input_error("not invertible mod p");
  return t < 0 ? t + p : t;
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (!is_prime_u32(p)) throw input_error("field characteristic must be prime: " + std::to_string(p));
  return Field(p);
}

Rat Field::canon(const Rat& a) const {
  if (p_ == 0) return a;  // cpp_rational keeps lowest terms itself
  Int num = boost::multiprecision::numerator(a);
  Int den = boost::multiprecision::denominator(a);
  std::int64_t n = residue(num, p_);
  std::int64_t d = residue(den, p_);
  if (d == 0) throw input_error("denominator divisible by p in F_p scalar");
  if (d != 1) n = (n * inv_mod(d, p_)) % p_;
  return Rat(n);
}

Rat Field::inv(const Rat& a) const {
  if (a.is_zero()) throw input_error("division by zero");
  if (p_ == 0) return Rat(1) / a;
  Int num = boost::multiprecision::numerator(canon(a));
  return Rat(inv_mod(static_cast<std::int64_t>(num), p_));
}

std::string Field::str(const Rat& a) const {
  Rat c = canon(a);
  Int num = boost::multiprecision::numerator(c);
  Int den = boost::multiprecision::denominator(c);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rat Field::parse(const std::string& s) const {
  if (s.empty()) throw input_error("empty scalar");
  std::size_t slash = s.find('/');
  try {
    if (slash == std::string::npos) return canon(Rat(Int(s)));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw input_error("zero denominator in scalar '" + s + "'");
    return canon(Rat(num, den));
  } catch (const std::runtime_error&) {
    throw input_error("malformed scalar '" + s + "'");
  }
}

std::string Field::name() const {
  return p_ == 0 ? "Q" : "F_" + std::to_string(p_);
}

}  // namespace corita
