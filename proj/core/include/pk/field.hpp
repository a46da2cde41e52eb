#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "pk/error.hpp"

namespace pk {

bool is_prime_u64(std::uint64_t n);

/* Runtime tag selecting the coefficient field of a computation. */
struct FieldSpec {
  enum class Kind { rational, prime };
  Kind kind = Kind::rational;
  std::uint32_t p = 0; // prime modulus, meaningful for Kind::prime only

  static FieldSpec rational() { return FieldSpec{}; }
  static FieldSpec gf(std::uint64_t p);
  static FieldSpec parse(const std::string& tag); // "rational" or "gf:<p>"
  std::string tag() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/* Exact rationals backed by GMP. Entries are kept canonical by mpq_class. */
struct RationalField {
  using Elem = mpq_class;

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem from_long(long v) const { return Elem(v); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const {
    check(sgn(a) != 0, errc::bad_input, "division by zero");
    return Elem(1) / a;
  }
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  bool is_one(const Elem& a) const { return a == 1; }
  FieldSpec spec() const { return FieldSpec::rational(); }
};

/* GF(p) for an odd or even prime p < 2^31. Elements are canonical residues. */
struct PrimeField {
  using Elem = std::uint32_t;
  std::uint32_t p = 2;

  PrimeField() = default;
  explicit PrimeField(std::uint64_t prime) {
    check(prime >= 2 && prime < (1ull << 31), errc::bad_input,
          "prime modulus must satisfy 2 <= p < 2^31");
    check(is_prime_u64(prime), errc::bad_input,
          "modulus " + std::to_string(prime) + " is not prime");
    p = static_cast<std::uint32_t>(prime);
  }

  Elem zero() const { return 0; }
  Elem one() const { return p == 1 ? 0 : 1 % p; }
  Elem from_long(long v) const {
    long r = v % static_cast<long>(p);
    if (r < 0) r += p;
    return static_cast<Elem>(r);
  }
  Elem add(Elem a, Elem b) const {
    std::uint64_t s = std::uint64_t(a) + b;
    if (s >= p) s -= p;
    return static_cast<Elem>(s);
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p - b; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>((std::uint64_t(a) * b) % p);
  }
  Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
  Elem inv(Elem a) const {
    check(a != 0, errc::bad_input, "division by zero");
    // extended Euclid on (a, p)
    std::int64_t t = 0, nt = 1, r = p, nr = a;
    while (nr != 0) {
      std::int64_t q = r / nr;
      std::int64_t tmp = t - q * nt;
      t = nt;
      nt = tmp;
      tmp = r - q * nr;
      r = nr;
      nr = tmp;
    }
    if (t < 0) t += p;
    return static_cast<Elem>(t);
  }
  bool is_zero(Elem a) const { return a == 0; }
  bool eq(Elem a, Elem b) const { return a == b; }
  bool is_one(Elem a) const { return a == 1; }
  FieldSpec spec() const {
    FieldSpec s;
    s.kind = FieldSpec::Kind::prime;
    s.p = p;
    return s;
  }
};

/* Calls fn with the concrete field object selected by spec. */
template <class Fn>
auto with_field(const FieldSpec& fs, Fn&& fn) {
  if (fs.kind == FieldSpec::Kind::rational) return fn(RationalField{});
  return fn(PrimeField{fs.p});
}

} // namespace pk
