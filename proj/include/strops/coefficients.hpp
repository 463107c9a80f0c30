#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

#include "strops/errors.hpp"

namespace strops {

using Integer = boost::multiprecision::cpp_int;

/// Ground ring of a presentation: the integers or a prime field F_p.
class Coefficients {
 public:
  Coefficients() = default;

  static Coefficients integers() { return Coefficients(0); }

  static Coefficients prime_field(int p) {
    if (!is_prime(p)) {
      throw DomainError("coefficient characteristic " + std::to_string(p) + " is not prime");
    }
    return Coefficients(p);
  }

  /// Accepts "Z", "F2", "F3", ... (also "Z2"-style aliases for prime fields).
  static Coefficients parse(std::string_view text) {
    if (text == "Z" || text == "z" || text == "ZZ") return integers();
    std::string_view digits;
    if (text.size() > 1 && (text[0] == 'F' || text[0] == 'f' || text[0] == 'Z' || text[0] == 'z')) {
      digits = text.substr(1);
    }
    if (digits.empty()) throw DomainError("unknown coefficients '" + std::string(text) + "'");
    int p = 0;
    for (char c : digits) {
      if (c < '0' || c > '9' || p > 1000000) {
        throw DomainError("unknown coefficients '" + std::string(text) + "'");
      }
      p = p * 10 + (c - '0');
    }
    return prime_field(p);
  }

  bool is_integers() const { return p_ == 0; }
  bool is_prime_field() const { return p_ != 0; }
  /// 0 for the integers.
  int characteristic() const { return p_; }

  std::string name() const { return p_ == 0 ? "Z" : "F" + std::to_string(p_); }

  Integer normalize(Integer value) const {
    if (p_ == 0) return value;
    value %= p_;
    if (value < 0) value += p_;
    return value;
  }

  bool is_unit(const Integer& value) const {
    if (p_ == 0) return value == 1 || value == -1;
    return normalize(value) != 0;
  }

  Integer inverse(const Integer& value) const {
    if (!is_unit(value)) throw DomainError("coefficient is not a unit in " + name());
    if (p_ == 0) return value;
    std::int64_t a = static_cast<std::int64_t>(normalize(value));
    std::int64_t m = p_, x0 = 0, x1 = 1;
    while (a > 1) {
      std::int64_t q = a / m;
      std::int64_t t = m;
      m = a % m;
      a = t;
      t = x0;
      x0 = x1 - q * x0;
      x1 = t;
    }
    return normalize(Integer(x1));
  }

  friend bool operator==(const Coefficients&, const Coefficients&) = default;

 private:
  explicit Coefficients(int p) : p_(p) {}

  static bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d) {
      if (p % d == 0) return false;
    }
    return true;
  }

  int p_ = 0;
};

}  // namespace strops
