#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace hopfmon {

// Base field k: either the rationals or a prime field F_p with p < 2^31.
class FieldSpec {
 public:
  enum class Kind { rationals, prime };

  static FieldSpec rationals() noexcept { return FieldSpec(Kind::rationals, 0); }
  // Throws FieldError unless p is a prime below 2^31.
  static FieldSpec prime_field(std::uint64_t p);
  // Accepts "rationals" or "prime-field P".
  static FieldSpec parse(std::string_view text);

  Kind kind() const noexcept { return kind_; }
  bool is_prime() const noexcept { return kind_ == Kind::prime; }
  // 0 for the rationals.
  std::uint32_t characteristic() const noexcept { return p_; }
  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  FieldSpec(Kind kind, std::uint32_t p) noexcept : kind_(kind), p_(p) {}

  Kind kind_;
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n) noexcept;

// An exact element of a FieldSpec, kept in canonical form: a residue in [0, p)
// or a fraction in lowest terms with positive denominator.
class Scalar {
 public:
  Scalar(FieldSpec field, long long value);
  // Over F_p the fraction is mapped through num * den^{-1}; throws FieldError
  // when the denominator vanishes mod p.
  Scalar(FieldSpec field, const mpq_class& value);

  static Scalar zero(FieldSpec field) { return Scalar(field, 0); }
  static Scalar one(FieldSpec field) { return Scalar(field, 1); }
  // Integers ("-3") or fractions ("1/2"); throws ParseError on malformed text
  // or a zero denominator.
  static Scalar parse(FieldSpec field, std::string_view text);

  FieldSpec field() const noexcept { return field_; }
  bool is_zero() const;
  bool is_one() const;

  // Throws PreconditionError for zero.
  Scalar inverse() const;

  std::uint32_t residue() const { return std::get<std::uint32_t>(value_); }
  const mpq_class& rational() const { return std::get<mpq_class>(value_); }

  // Canonical text: "r" for residues, "n" or "n/d" for rationals.
  std::string to_string() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  struct RawResidue {};
  Scalar(FieldSpec field, std::uint32_t residue, RawResidue) : field_(field), value_(residue) {}

  FieldSpec field_;
  std::variant<std::uint32_t, mpq_class> value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);
std::ostream& operator<<(std::ostream& os, const FieldSpec& f);

}  // namespace hopfmon
