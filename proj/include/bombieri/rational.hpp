#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

#include <gmpxx.h>

namespace bombieri {

/// Exact rational number, always stored in lowest terms with a positive
/// denominator. Thin value wrapper over GMP's mpq_class.
class BigRational {
 public:
  BigRational() = default;
  BigRational(std::int64_t value);  // NOLINT(google-explicit-constructor)
  BigRational(std::int64_t num, std::int64_t den);

  static BigRational from_string(const std::string& text);

  std::string numerator() const;
  std::string denominator() const;
  std::string to_string() const;  // "p/q", or "p" when q == 1
  double to_double() const;

  int sign() const { return sgn(value_); }
  bool is_integer() const;

  BigRational operator-() const;
  BigRational& operator+=(const BigRational& rhs);
  BigRational& operator-=(const BigRational& rhs);
  BigRational& operator*=(const BigRational& rhs);
  BigRational& operator/=(const BigRational& rhs);

  friend BigRational operator+(BigRational lhs, const BigRational& rhs) { return lhs += rhs; }
  friend BigRational operator-(BigRational lhs, const BigRational& rhs) { return lhs -= rhs; }
  friend BigRational operator*(BigRational lhs, const BigRational& rhs) { return lhs *= rhs; }
  friend BigRational operator/(BigRational lhs, const BigRational& rhs) { return lhs /= rhs; }

  friend bool operator==(const BigRational& a, const BigRational& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const BigRational& r) { return os << r.to_string(); }

 private:
  explicit BigRational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

  mpq_class value_;
};

}  // namespace bombieri
