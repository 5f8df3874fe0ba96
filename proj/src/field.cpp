#include "lclab/field.hpp"

#include <charconv>
#include <stdexcept>

namespace lclab {

namespace {

std::uint32_t reduce(std::int64_t n, std::uint32_t p) {
  std::int64_t r = n % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

std::uint32_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint32_t p) {
  std::uint64_t result = 1;
  base %= p;
  while (exp > 0) {
    if (exp & 1U) result = result * base % p;
    base = base * base % p;
    exp >>= 1U;
  }
  return static_cast<std::uint32_t>(result);
}

const Residue& as_residue(const std::variant<mpq_class, Residue>& v, std::uint32_t p) {
  const auto* r = std::get_if<Residue>(&v);
  if (r == nullptr || r->modulus != p) throw std::invalid_argument("field mismatch");
  return *r;
}

}  // namespace

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

Field Field::prime(std::uint32_t p) {
  if (p >= (1U << 31U) || !is_prime(p)) {
    throw std::invalid_argument("field characteristic must be a prime below 2^31, got " +
                                std::to_string(p));
  }
  return Field(p);
}

Field Field::parse(std::string_view text) {
  if (text == "rational" || text == "Q") return rational();
  if (text.starts_with("p:")) {
    auto digits = text.substr(2);
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || p >= (1ULL << 31U)) {
      throw std::invalid_argument("bad field '" + std::string(text) + "'");
    }
    return prime(static_cast<std::uint32_t>(p));
  }
  throw std::invalid_argument("bad field '" + std::string(text) + "', expected rational or p:<prime>");
}

std::string Field::name() const {
  return is_rational() ? std::string("rational") : "p:" + std::to_string(p_);
}

FieldScalar::FieldScalar(const Field& field, std::int64_t n) {
  if (field.is_rational()) {
    value_ = mpq_class(static_cast<long>(n));
  } else {
    value_ = Residue{reduce(n, field.characteristic()), field.characteristic()};
  }
}

FieldScalar::FieldScalar(const Field& field, const mpq_class& q) {
  if (field.is_rational()) {
    mpq_class c = q;
    c.canonicalize();
    value_ = std::move(c);
    return;
  }
  const std::uint32_t p = field.characteristic();
  mpq_class c = q;
  c.canonicalize();
  mpz_class num = c.get_num() % p;
  mpz_class den = c.get_den() % p;
  if (den == 0) throw std::domain_error("denominator vanishes modulo " + std::to_string(p));
  auto n = reduce(num.get_si(), p);
  auto d = reduce(den.get_si(), p);
  value_ = Residue{static_cast<std::uint32_t>(std::uint64_t{n} * pow_mod(d, p - 2, p) % p), p};
}

bool FieldScalar::is_zero() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return sgn(*q) == 0;
  return std::get<Residue>(value_).value == 0;
}

Field FieldScalar::field() const {
  if (is_rational()) return Field::rational();
  return Field::prime(std::get<Residue>(value_).modulus);
}

mpq_class FieldScalar::to_rational() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return *q;
  return mpq_class(static_cast<unsigned long>(std::get<Residue>(value_).value));
}

std::string FieldScalar::to_string() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return q->get_str();
  return std::to_string(std::get<Residue>(value_).value);
}

FieldScalar FieldScalar::operator-() const {
  FieldScalar out = *this;
  if (auto* q = std::get_if<mpq_class>(&out.value_)) {
    *q = -*q;
  } else {
    auto& r = std::get<Residue>(out.value_);
    r.value = r.value == 0 ? 0 : r.modulus - r.value;
  }
  return out;
}

FieldScalar& FieldScalar::operator+=(const FieldScalar& o) {
  if (auto* q = std::get_if<mpq_class>(&value_)) {
    const auto* oq = std::get_if<mpq_class>(&o.value_);
    if (oq == nullptr) throw std::invalid_argument("field mismatch");
    *q += *oq;
  } else {
    auto& r = std::get<Residue>(value_);
    const auto& s = as_residue(o.value_, r.modulus);
    r.value = static_cast<std::uint32_t>((std::uint64_t{r.value} + s.value) % r.modulus);
  }
  return *this;
}

FieldScalar& FieldScalar::operator-=(const FieldScalar& o) { return *this += -o; }

FieldScalar& FieldScalar::operator*=(const FieldScalar& o) {
  if (auto* q = std::get_if<mpq_class>(&value_)) {
    const auto* oq = std::get_if<mpq_class>(&o.value_);
    if (oq == nullptr) throw std::invalid_argument("field mismatch");
    *q *= *oq;
  } else {
    auto& r = std::get<Residue>(value_);
    const auto& s = as_residue(o.value_, r.modulus);
    r.value = static_cast<std::uint32_t>(std::uint64_t{r.value} * s.value % r.modulus);
  }
  return *this;
}

FieldScalar& FieldScalar::operator/=(const FieldScalar& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  if (auto* q = std::get_if<mpq_class>(&value_)) {
    const auto* oq = std::get_if<mpq_class>(&o.value_);
    if (oq == nullptr) throw std::invalid_argument("field mismatch");
    *q /= *oq;
  } else {
    auto& r = std::get<Residue>(value_);
    const auto& s = as_residue(o.value_, r.modulus);
    r.value = static_cast<std::uint32_t>(std::uint64_t{r.value} *
                                         pow_mod(s.value, r.modulus - 2, r.modulus) % r.modulus);
  }
  return *this;
}

bool operator==(const FieldScalar& a, const FieldScalar& b) {
  if (a.value_.index() != b.value_.index()) return false;
  if (const auto* q = std::get_if<mpq_class>(&a.value_)) return *q == std::get<mpq_class>(b.value_);
  return std::get<Residue>(a.value_) == std::get<Residue>(b.value_);
}

}  // namespace lclab
