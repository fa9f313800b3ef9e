#include "pbw/scalar.hpp"

#include <ostream>

#include "pbw/errors.hpp"

namespace pbw {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint32_t reduce_mod(const mpz_class& z, std::uint32_t p) {
  mpz_class r = z % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint32_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (p == 2) throw InputError("field of characteristic 2 is not supported");
  if (!is_prime(p)) throw InputError("Fp requires a prime, got " + std::to_string(p));
  if (p >= (1u << 31)) throw InputError("prime too large: " + std::to_string(p));
  return Field(p);
}

Field Field::parse(const std::string& spec) {
  if (spec == "Q" || spec == "QQ") return rationals();
  if (spec.rfind("Fp:", 0) == 0) {
    std::string digits = spec.substr(3);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
      throw InputError("bad field spec '" + spec + "'");
    unsigned long p = std::stoul(digits);
    return prime(static_cast<std::uint32_t>(p));
  }
  throw InputError("bad field spec '" + spec + "' (expected Q or Fp:<p>)");
}

std::string Field::name() const {
  return is_rational() ? std::string("Q") : "Fp:" + std::to_string(p_);
}

Scalar Scalar::zero(const Field& f) { return from_int(f, 0); }

Scalar Scalar::from_int(const Field& f, long n) {
  if (f.is_rational()) return Scalar(f, mpq_class(n));
  long p = f.characteristic();
  long r = n % p;
  if (r < 0) r += p;
  return Scalar(f, static_cast<std::uint32_t>(r));
}

Scalar Scalar::from_rational(const Field& f, const mpq_class& q) {
  if (f.is_rational()) return Scalar(f, q);
  std::uint32_t p = f.characteristic();
  std::uint32_t num = reduce_mod(q.get_num(), p);
  std::uint32_t den = reduce_mod(q.get_den(), p);
  if (den == 0) throw InputError("denominator divisible by the characteristic");
  return Scalar(f, static_cast<std::uint32_t>(std::uint64_t(num) * pow_mod(den, p - 2, p) % p));
}

Scalar Scalar::parse(const Field& f, const std::string& text) {
  std::string t;
  for (char c : text)
    if (c != ' ') t += c;
  if (t.empty()) throw InputError("empty scalar");
  auto valid_int = [](const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    return i < s.size() && s.find_first_not_of("0123456789", i) == std::string::npos;
  };
  auto slash = t.find('/');
  std::string a = t.substr(0, slash);
  std::string b = slash == std::string::npos ? "1" : t.substr(slash + 1);
  if (!valid_int(a) || !valid_int(b) || b[0] == '-' || b[0] == '+')
    throw InputError("bad scalar '" + text + "'");
  if (a[0] == '+') a = a.substr(1);
  mpz_class num(a), den(b);
  if (den == 0) throw InputError("zero denominator in '" + text + "'");
  mpq_class q(num, den);
  q.canonicalize();
  return from_rational(f, q);
}

bool Scalar::is_zero() const {
  if (auto* q = std::get_if<mpq_class>(&v_)) return *q == 0;
  return std::get<std::uint32_t>(v_) == 0;
}

bool Scalar::is_one() const {
  if (auto* q = std::get_if<mpq_class>(&v_)) return *q == 1;
  return std::get<std::uint32_t>(v_) == 1;
}

std::string Scalar::to_string() const {
  if (auto* q = std::get_if<mpq_class>(&v_)) return q->get_str();
  return std::to_string(std::get<std::uint32_t>(v_));
}

void Scalar::check_same(const Scalar& o) const {
  if (f_ != o.f_) throw FieldMismatch("arithmetic across fields " + f_.name() + " and " + o.f_.name());
}

Scalar Scalar::operator-() const {
  if (auto* q = std::get_if<mpq_class>(&v_)) return Scalar(f_, mpq_class(-*q));
  std::uint32_t m = std::get<std::uint32_t>(v_);
  return Scalar(f_, m == 0 ? 0u : f_.characteristic() - m);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (auto* q = std::get_if<mpq_class>(&v_)) return Scalar(f_, mpq_class(1 / *q));
  std::uint32_t p = f_.characteristic();
  return Scalar(f_, pow_mod(std::get<std::uint32_t>(v_), p - 2, p));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same(o);
  if (auto* q = std::get_if<mpq_class>(&v_)) {
    *q += std::get<mpq_class>(o.v_);
  } else {
    std::uint64_t s = std::uint64_t(std::get<std::uint32_t>(v_)) + std::get<std::uint32_t>(o.v_);
    v_ = static_cast<std::uint32_t>(s % f_.characteristic());
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same(o);
  if (auto* q = std::get_if<mpq_class>(&v_)) {
    *q *= std::get<mpq_class>(o.v_);
  } else {
    std::uint64_t s = std::uint64_t(std::get<std::uint32_t>(v_)) * std::get<std::uint32_t>(o.v_);
    v_ = static_cast<std::uint32_t>(s % f_.characteristic());
  }
  return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.f_ != b.f_) return false;
  return a.v_ == b.v_;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace pbw
