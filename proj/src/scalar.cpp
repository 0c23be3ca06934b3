#include "dhgb/scalar.hpp"

namespace dhgb {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>((u128)a * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) { d >>= 1; ++s; }
  // Sufficient witness set for n < 2^64.
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) { composite = false; break; }
    }
    if (composite) return false;
  }
  return true;
}

Scalar Scalar::zero(const FieldSpec& f) {
  Scalar s;
  s.field_ = f;
  return s;
}

Scalar Scalar::one(const FieldSpec& f) { return from_int(1, f); }

Scalar Scalar::from_int(long v, const FieldSpec& f) {
  Scalar s;
  s.field_ = f;
  if (f.kind == FieldSpec::Kind::Rationals) {
    s.q_ = v;
  } else {
    long m = static_cast<long>(f.p);
    long r = v % m;
    if (r < 0) r += m;
    s.r_ = static_cast<std::uint64_t>(r);
  }
  return s;
}

Scalar Scalar::from_fraction(long num, long den, const FieldSpec& f) {
  if (den == 0) throw domain_error("zero denominator");
  if (f.kind == FieldSpec::Kind::Rationals) {
    Scalar s;
    s.field_ = f;
    s.q_ = mpq_class(num, den);
    s.q_.canonicalize();
    return s;
  }
  return from_int(num, f) * from_int(den, f).inverse();
}

Scalar Scalar::from_mpq(mpq_class q, const FieldSpec& f) {
  if (f.kind != FieldSpec::Kind::Rationals)
    throw context_error("rational literal in a prime field context");
  Scalar s;
  s.field_ = f;
  q.canonicalize();
  s.q_ = std::move(q);
  return s;
}

bool Scalar::is_zero() const {
  return field_.kind == FieldSpec::Kind::Rationals ? q_ == 0 : r_ == 0;
}

bool Scalar::is_one() const {
  return field_.kind == FieldSpec::Kind::Rationals ? q_ == 1 : r_ == 1;
}

void Scalar::check_same(const Scalar& o) const {
  if (!(field_ == o.field_)) throw context_error("scalar field mismatch");
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same(o);
  Scalar s;
  s.field_ = field_;
  if (field_.kind == FieldSpec::Kind::Rationals) {
    s.q_ = q_ + o.q_;
  } else {
    std::uint64_t v = r_ + o.r_;
    if (v >= field_.p) v -= field_.p;
    s.r_ = v;
  }
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  check_same(o);
  Scalar s;
  s.field_ = field_;
  if (field_.kind == FieldSpec::Kind::Rationals) {
    s.q_ = q_ * o.q_;
  } else {
    s.r_ = mulmod(r_, o.r_, field_.p);
  }
  return s;
}

Scalar Scalar::operator-() const {
  Scalar s;
  s.field_ = field_;
  if (field_.kind == FieldSpec::Kind::Rationals) {
    s.q_ = -q_;
  } else {
    s.r_ = r_ == 0 ? 0 : field_.p - r_;
  }
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw zero_input_error("inverse of zero");
  Scalar s;
  s.field_ = field_;
  if (field_.kind == FieldSpec::Kind::Rationals) {
    s.q_ = 1 / q_;
  } else {
    s.r_ = powmod(r_, field_.p - 2, field_.p);
  }
  return s;
}

bool Scalar::operator==(const Scalar& o) const {
  if (!(field_ == o.field_)) return false;
  return field_.kind == FieldSpec::Kind::Rationals ? q_ == o.q_ : r_ == o.r_;
}

std::string Scalar::str() const {
  if (field_.kind == FieldSpec::Kind::Rationals) return q_.get_str();
  return std::to_string(r_);
}

}  // namespace dhgb
