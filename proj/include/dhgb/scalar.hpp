#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace dhgb {

struct domain_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised when an operation mixes values from different ring contexts or
/// coefficient fields.
struct context_error : domain_error {
  using domain_error::domain_error;
};

/// Raised when an operation requires a nonzero input (leading data, LH,
/// homogenization of 0, ...).
struct zero_input_error : domain_error {
  using domain_error::domain_error;
};

/// Raised when a documented precondition fails (non-homogeneous input to a
/// graded-ideal operation, missing commutators, bad degree bound, ...).
struct precondition_error : domain_error {
  using domain_error::domain_error;
};

/// Coefficient field: the rationals, or GF(p) for a prime p.
struct FieldSpec {
  enum class Kind { Rationals, Prime };
  Kind kind = Kind::Rationals;
  std::uint64_t p = 0;  // modulus when kind == Prime

  bool operator==(const FieldSpec&) const = default;
};

/// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

/// Exact field element: a rational in lowest terms with positive denominator,
/// or a residue in [0, p).
class Scalar {
public:
  Scalar() = default;  // zero over Q

  static Scalar zero(const FieldSpec& f);
  static Scalar one(const FieldSpec& f);
  static Scalar from_int(long v, const FieldSpec& f);
  static Scalar from_fraction(long num, long den, const FieldSpec& f);
  static Scalar from_mpq(mpq_class q, const FieldSpec& f);

  bool is_zero() const;
  bool is_one() const;
  const FieldSpec& field() const { return field_; }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inverse() const;  // throws zero_input_error on zero

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  std::string str() const;

private:
  void check_same(const Scalar& o) const;

  FieldSpec field_;
  mpq_class q_;           // Rationals
  std::uint64_t r_ = 0;   // Prime residue
};

}  // namespace dhgb
