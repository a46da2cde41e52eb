#include "pk/field.hpp"

namespace pk {

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

} // namespace

/* Deterministic Miller-Rabin; the fixed witness set is exact for all 64-bit n. */
bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

FieldSpec FieldSpec::gf(std::uint64_t p) {
  PrimeField f(p); // validates
  return f.spec();
}

FieldSpec FieldSpec::parse(const std::string& tag) {
  if (tag == "rational") return FieldSpec::rational();
  if (tag.rfind("gf:", 0) == 0) {
    const std::string digits = tag.substr(3);
    check(!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos,
          errc::bad_input, "bad field tag '" + tag + "'");
    check(digits.size() <= 19, errc::bad_input, "modulus out of range in '" + tag + "'");
    return FieldSpec::gf(std::stoull(digits));
  }
  fail(errc::bad_input, "bad field tag '" + tag + "' (expected 'rational' or 'gf:<p>')");
}

std::string FieldSpec::tag() const {
  if (kind == Kind::rational) return "rational";
  return "gf:" + std::to_string(p);
}

} // namespace pk
