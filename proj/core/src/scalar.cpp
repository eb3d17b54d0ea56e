#include "hopfkit/scalar.hpp"

#include <ostream>

namespace hopfkit {

namespace {

constexpr std::uint64_t kMaxPrime = std::uint64_t{1} << 61;

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  mpz_class z(std::to_string(n));
  return mpz_probab_prime_p(z.get_mpz_t(), 40) > 0;
}

std::uint64_t mod_of(const mpz_class& z, std::uint64_t p) {
  mpz_class r;
  mpz_class pz(std::to_string(p));
  mpz_fdiv_r(r.get_mpz_t(), z.get_mpz_t(), pz.get_mpz_t());
  return std::stoull(r.get_str());
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  while (exp > 0) {
    if (exp & 1U) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    exp >>= 1U;
  }
  return result;
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (p >= kMaxPrime || !is_prime(p)) {
    throw UnsupportedField("GF(p) requires a prime p < 2^61, got " + std::to_string(p));
  }
  return Field(p);
}

Field Field::parse(const std::string& text) {
  if (text == "Q" || text == "QQ") return rationals();
  if (text.size() >= 2 && (text[0] == 'F' || text[0] == 'f')) {
    std::size_t pos = 0;
    unsigned long long p = 0;
    try {
      p = std::stoull(text.substr(1), &pos);
    } catch (const std::exception&) {
      throw UnsupportedField("cannot parse field '" + text + "'");
    }
    if (pos + 1 != text.size()) throw UnsupportedField("cannot parse field '" + text + "'");
    return prime(p);
  }
  throw UnsupportedField("cannot parse field '" + text + "' (expected Q or F<p>)");
}

std::string Field::name() const { return is_rational() ? "Q" : "F" + std::to_string(p_); }

Scalar::Scalar(Field field, long value) : field_(field) {
  if (field.is_rational()) {
    value_ = mpq_class(value);
  } else {
    value_ = mod_of(mpz_class(value), field.characteristic());
  }
}

Scalar::Scalar(Field field, const mpz_class& numerator, const mpz_class& denominator)
    : field_(field) {
  if (denominator == 0) throw DivisionByZero("zero denominator");
  if (field.is_rational()) {
    mpq_class q(numerator, denominator);
    q.canonicalize();
    value_ = q;
  } else {
    const auto p = field.characteristic();
    const auto den = mod_of(denominator, p);
    if (den == 0) throw DivisionByZero("denominator vanishes in " + field.name());
    value_ = mul_mod(mod_of(numerator, p), pow_mod(den, p - 2, p), p);
  }
}

bool Scalar::is_zero() const {
  if (auto* q = std::get_if<mpq_class>(&value_)) return sgn(*q) == 0;
  return std::get<std::uint64_t>(value_) == 0;
}

bool Scalar::is_one() const {
  if (auto* q = std::get_if<mpq_class>(&value_)) return *q == 1;
  return std::get<std::uint64_t>(value_) == 1;
}

void Scalar::require_same_field(const Scalar& rhs) const {
  if (!(field_ == rhs.field_)) {
    throw FieldMismatch("field mismatch: " + field_.name() + " vs " + rhs.field_.name());
  }
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (auto* q = std::get_if<mpq_class>(&r.value_)) {
    *q = -*q;
  } else {
    auto& v = std::get<std::uint64_t>(r.value_);
    if (v != 0) v = field_.characteristic() - v;
  }
  return r;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  require_same_field(rhs);
  if (auto* q = std::get_if<mpq_class>(&value_)) {
    *q += std::get<mpq_class>(rhs.value_);
  } else {
    const auto p = field_.characteristic();
    auto& v = std::get<std::uint64_t>(value_);
    v += std::get<std::uint64_t>(rhs.value_);
    if (v >= p) v -= p;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) { return *this += -rhs; }

Scalar& Scalar::operator*=(const Scalar& rhs) {
  require_same_field(rhs);
  if (auto* q = std::get_if<mpq_class>(&value_)) {
    *q *= std::get<mpq_class>(rhs.value_);
  } else {
    auto& v = std::get<std::uint64_t>(value_);
    v = mul_mod(v, std::get<std::uint64_t>(rhs.value_), field_.characteristic());
  }
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  Scalar r = *this;
  if (auto* q = std::get_if<mpq_class>(&r.value_)) {
    *q = 1 / *q;
  } else {
    const auto p = field_.characteristic();
    auto& v = std::get<std::uint64_t>(r.value_);
    v = pow_mod(v, p - 2, p);
  }
  return r;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  require_same_field(rhs);
  return *this *= rhs.inverse();
}

bool Scalar::operator==(const Scalar& rhs) const {
  require_same_field(rhs);
  return value_ == rhs.value_;
}

mpz_class Scalar::numerator() const {
  if (auto* q = std::get_if<mpq_class>(&value_)) return q->get_num();
  return mpz_class(std::to_string(std::get<std::uint64_t>(value_)));
}

mpz_class Scalar::denominator() const {
  if (auto* q = std::get_if<mpq_class>(&value_)) return q->get_den();
  return mpz_class(1);
}

std::string Scalar::str() const {
  if (auto* q = std::get_if<mpq_class>(&value_)) return q->get_str();
  return std::to_string(std::get<std::uint64_t>(value_));
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace hopfkit
