#pragma once

// Element-level arithmetic policies used by the dense kernels. Each policy
// exposes value_type and the handful of operations the kernels need.

#include <cstdint>
#include <utility>

#include <gmpxx.h>

#include "hopfmon/errors.hpp"
#include "hopfmon/scalar.hpp"

namespace hopfmon {

struct ModP {
  using value_type = std::uint32_t;

  std::uint32_t p;

  value_type zero() const noexcept { return 0; }
  value_type one() const noexcept { return 1; }
  bool is_zero(value_type a) const noexcept { return a == 0; }
  value_type add(value_type a, value_type b) const noexcept {
    const std::uint32_t s = a + b;
    return s >= p ? s - p : s;
  }
  value_type sub(value_type a, value_type b) const noexcept { return a >= b ? a - b : a + (p - b); }
  value_type neg(value_type a) const noexcept { return a == 0 ? 0 : p - a; }
  value_type mul(value_type a, value_type b) const noexcept {
    return static_cast<value_type>((static_cast<std::uint64_t>(a) * b) % p);
  }
  // acc += a * b
  void fma(value_type& acc, value_type a, value_type b) const noexcept {
    acc = static_cast<value_type>((acc + static_cast<std::uint64_t>(a) * b) % p);
  }
  value_type inv(value_type a) const {
    if (a == 0) throw PreconditionError("inverse of zero in prime field");
    // Fermat: a^(p-2)
    std::uint64_t base = a, result = 1;
    std::uint32_t e = p - 2;
    while (e != 0) {
      if (e & 1U) result = (result * base) % p;
      base = (base * base) % p;
      e >>= 1U;
    }
    return static_cast<value_type>(result);
  }
  value_type from_int(long long v) const noexcept {
    long long r = v % static_cast<long long>(p);
    if (r < 0) r += p;
    return static_cast<value_type>(r);
  }
  Scalar to_scalar(value_type a) const { return Scalar(FieldSpec::prime_field(p), static_cast<long long>(a)); }
  value_type from_scalar(const Scalar& s) const { return s.residue(); }
};

struct RationalOps {
  using value_type = mpq_class;

  value_type zero() const { return mpq_class(0); }
  value_type one() const { return mpq_class(1); }
  bool is_zero(const value_type& a) const { return sgn(a) == 0; }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  void fma(value_type& acc, const value_type& a, const value_type& b) const { acc += a * b; }
  value_type inv(const value_type& a) const {
    if (sgn(a) == 0) throw PreconditionError("inverse of zero rational");
    return 1 / a;
  }
  value_type from_int(long long v) const { return mpq_class(static_cast<long>(v)); }
  Scalar to_scalar(const value_type& a) const { return Scalar(FieldSpec::rationals(), a); }
  value_type from_scalar(const Scalar& s) const { return s.rational(); }
};

// Calls fn(ops) with the policy matching the field.
template <class Fn>
decltype(auto) with_field_ops(const FieldSpec& field, Fn&& fn) {
  if (field.is_prime()) return std::forward<Fn>(fn)(ModP{field.characteristic()});
  return std::forward<Fn>(fn)(RationalOps{});
}

}  // namespace hopfmon
