#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace pbw {

// Ground field: the rationals or a prime field F_p with p odd.
class Field {
 public:
  Field() = default;
  static Field rationals() { return Field(); }
  static Field prime(std::uint32_t p);
  // "Q" or "Fp:<p>"
  static Field parse(const std::string& spec);

  bool is_rational() const { return p_ == 0; }
  std::uint32_t characteristic() const { return p_; }
  std::string name() const;

  friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }
  friend bool operator!=(const Field& a, const Field& b) { return a.p_ != b.p_; }

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

class Scalar {
 public:
  Scalar() : f_(), v_(mpq_class(0)) {}
  static Scalar zero(const Field& f);
  static Scalar one(const Field& f) { return from_int(f, 1); }
  static Scalar from_int(const Field& f, long n);
  static Scalar from_rational(const Field& f, const mpq_class& q);
  // Accepts "n", "-n", "a/b".
  static Scalar parse(const Field& f, const std::string& text);

  const Field& field() const { return f_; }
  bool is_zero() const;
  bool is_one() const;
  std::string to_string() const;

  Scalar operator-() const;
  Scalar inverse() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

 private:
  Scalar(const Field& f, std::uint32_t m) : f_(f), v_(m) {}
  Scalar(const Field& f, mpq_class q) : f_(f), v_(std::move(q)) {}
  void check_same(const Scalar& o) const;

  Field f_;
  std::variant<mpq_class, std::uint32_t> v_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace pbw
