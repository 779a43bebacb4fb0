#include "bombieri/rational.hpp"

#include <cmath>
#include <cstdint>

#include "bombieri/errors.hpp"

namespace bombieri {

namespace {

mpz_class to_mpz(std::int64_t v) {
  // mpz_class has no portable int64 constructor; go through the string form.
  return mpz_class(std::to_string(v));
}

}  // namespace

BigRational::BigRational(std::int64_t value) : value_(to_mpz(value)) {}

BigRational::BigRational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DomainError("BigRational: zero denominator");
  value_ = mpq_class(to_mpz(num), to_mpz(den));
  value_.canonicalize();
}

BigRational BigRational::from_string(const std::string& text) {
  mpq_class v;
  if (v.set_str(text, 10) != 0) throw DomainError("BigRational: cannot parse '" + text + "'");
  if (v.get_den() == 0) throw DomainError("BigRational: zero denominator");
  return BigRational(std::move(v));
}

std::string BigRational::numerator() const { return value_.get_num().get_str(); }
std::string BigRational::denominator() const { return value_.get_den().get_str(); }
std::string BigRational::to_string() const { return value_.get_str(); }
// mpq get_d truncates; this rounds to nearest. The quotient is scaled to 64
// bits with a sticky low bit, so the single uint64 -> double conversion rounds
// exactly as the full quotient would.
double BigRational::to_double() const {
  if (sgn(value_) == 0) return 0.0;
  const mpz_class a = abs(value_.get_num());
  const mpz_class& b = value_.get_den();
  long e = 64 - static_cast<long>(mpz_sizeinbase(a.get_mpz_t(), 2)) + static_cast<long>(mpz_sizeinbase(b.get_mpz_t(), 2));
  mpz_class scaled_a = a, scaled_b = b;
  if (e >= 0) {
    mpz_mul_2exp(scaled_a.get_mpz_t(), a.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
  } else {
    mpz_mul_2exp(scaled_b.get_mpz_t(), b.get_mpz_t(), static_cast<mp_bitcnt_t>(-e));
  }
  mpz_class q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), scaled_a.get_mpz_t(), scaled_b.get_mpz_t());
  // q now has 64 or 65 bits; drop one bit into the sticky position if needed.
  if (mpz_sizeinbase(q.get_mpz_t(), 2) > 64) {
    if (mpz_odd_p(q.get_mpz_t())) r = 1;
    q >>= 1;
    --e;
  }
  std::uint64_t bits = 0;
  mpz_export(&bits, nullptr, -1, sizeof(bits), 0, 0, q.get_mpz_t());
  if (r != 0) bits |= 1U;
  const double magnitude = std::ldexp(static_cast<double>(bits), static_cast<int>(-e));
  return sgn(value_) < 0 ? -magnitude : magnitude;
}
bool BigRational::is_integer() const { return value_.get_den() == 1; }

BigRational BigRational::operator-() const { return BigRational(mpq_class(-value_)); }

BigRational& BigRational::operator+=(const BigRational& rhs) {
  value_ += rhs.value_;
  return *this;
}

BigRational& BigRational::operator-=(const BigRational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

BigRational& BigRational::operator*=(const BigRational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

BigRational& BigRational::operator/=(const BigRational& rhs) {
  if (rhs.sign() == 0) throw DomainError("BigRational: division by zero");
  value_ /= rhs.value_;
  return *this;
}

}  // namespace bombieri
