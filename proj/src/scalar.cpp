#include "hopfmon/scalar.hpp"

#include <charconv>
#include <ostream>

#include "hopfmon/errors.hpp"
#include "hopfmon/field_ops.hpp"

namespace hopfmon {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime_field(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31U) || !hopfmon::is_prime(p)) {
    throw FieldError("prime-field characteristic must be a prime below 2^31, got " + std::to_string(p));
  }
  return FieldSpec(Kind::prime, static_cast<std::uint32_t>(p));
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "rationals") return rationals();
  constexpr std::string_view prefix = "prime-field ";
  if (text.substr(0, prefix.size()) == prefix) {
    const std::string_view digits = text.substr(prefix.size());
    std::uint64_t p = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec == std::errc() && ptr == digits.data() + digits.size() && !digits.empty()) {
      return prime_field(p);
    }
  }
  throw ParseError("unrecognised field spec '" + std::string(text) + "'");
}

std::string FieldSpec::to_string() const {
  return is_prime() ? "prime-field " + std::to_string(p_) : std::string("rationals");
}

Scalar::Scalar(FieldSpec field, long long value) : field_(field), value_(std::uint32_t{0}) {
  if (field.is_prime()) {
    value_ = ModP{field.characteristic()}.from_int(value);
  } else {
    value_ = mpq_class(static_cast<long>(value));
  }
}

Scalar::Scalar(FieldSpec field, const mpq_class& value) : field_(field), value_(std::uint32_t{0}) {
  if (!field.is_prime()) {
    mpq_class q = value;
    q.canonicalize();
    value_ = std::move(q);
    return;
  }
  const ModP ops{field.characteristic()};
  const mpz_class p(static_cast<unsigned long>(field.characteristic()));
  mpz_class num = value.get_num() % p;
  mpz_class den = value.get_den() % p;
  if (num < 0) num += p;
  if (den < 0) den += p;
  if (den == 0) throw FieldError("denominator vanishes in " + field.to_string());
  value_ = ops.mul(static_cast<std::uint32_t>(num.get_ui()), ops.inv(static_cast<std::uint32_t>(den.get_ui())));
}

Scalar Scalar::parse(FieldSpec field, std::string_view text) {
  auto bad = [&](const std::string& why) {
    return ParseError("malformed scalar '" + std::string(text) + "': " + why);
  };
  if (text.empty()) throw bad("empty");
  const auto slash = text.find('/');
  const std::string num_text(text.substr(0, slash));
  const std::string den_text = slash == std::string_view::npos ? "1" : std::string(text.substr(slash + 1));
  auto valid_integer = [](const std::string& s) {
    std::size_t i = (s.size() > 1 && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') return false;
    }
    return true;
  };
  if (!valid_integer(num_text) || !valid_integer(den_text)) throw bad("not an integer or fraction");
  mpz_class num(num_text[0] == '+' ? num_text.substr(1) : num_text, 10);
  mpz_class den(den_text[0] == '+' ? den_text.substr(1) : den_text, 10);
  if (den == 0) throw bad("zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  try {
    return Scalar(field, q);
  } catch (const FieldError& e) {
    throw bad(e.what());
  }
}

bool Scalar::is_zero() const {
  if (field_.is_prime()) return residue() == 0;
  return sgn(rational()) == 0;
}

bool Scalar::is_one() const {
  if (field_.is_prime()) return residue() == 1;
  return rational() == 1;
}

namespace {

void require_same_field(const Scalar& a, const Scalar& b) {
  if (a.field() != b.field()) {
    throw FieldError("scalar field mismatch: " + a.field().to_string() + " vs " + b.field().to_string());
  }
}

}  // namespace

Scalar Scalar::inverse() const {
  if (is_zero()) throw PreconditionError("inverse of zero scalar");
  if (field_.is_prime()) return Scalar(field_, ModP{field_.characteristic()}.inv(residue()), RawResidue{});
  return Scalar(field_, mpq_class(1 / rational()));
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  require_same_field(a, b);
  if (a.field_.is_prime()) return Scalar(a.field_, ModP{a.field_.characteristic()}.add(a.residue(), b.residue()), Scalar::RawResidue{});
  return Scalar(a.field_, mpq_class(a.rational() + b.rational()));
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  require_same_field(a, b);
  if (a.field_.is_prime()) return Scalar(a.field_, ModP{a.field_.characteristic()}.sub(a.residue(), b.residue()), Scalar::RawResidue{});
  return Scalar(a.field_, mpq_class(a.rational() - b.rational()));
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  require_same_field(a, b);
  if (a.field_.is_prime()) return Scalar(a.field_, ModP{a.field_.characteristic()}.mul(a.residue(), b.residue()), Scalar::RawResidue{});
  return Scalar(a.field_, mpq_class(a.rational() * b.rational()));
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

Scalar Scalar::operator-() const {
  if (field_.is_prime()) return Scalar(field_, ModP{field_.characteristic()}.neg(residue()), RawResidue{});
  return Scalar(field_, mpq_class(-rational()));
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.field_ != b.field_) return false;
  return a.value_ == b.value_;
}

std::string Scalar::to_string() const {
  if (field_.is_prime()) return std::to_string(residue());
  return rational().get_str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }
std::ostream& operator<<(std::ostream& os, const FieldSpec& f) { return os << f.to_string(); }

}  // namespace hopfmon
