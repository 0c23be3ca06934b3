#pragma once

#include <map>
#include <string>
#include <vector>

#include "dhgb/ring.hpp"

namespace dhgb {

/// A polynomial: finite map from basis monomials to nonzero scalars. Term
/// storage is ordering-independent; a monomial ordering is supplied per
/// operation.
class Poly {
public:
  Poly() = default;
  explicit Poly(Ctx ctx) : ctx_(std::move(ctx)) {}
  Poly(Ctx ctx, const Mono& m, const Scalar& c);

  const Ctx& ctx() const { return ctx_; }
  const std::map<Mono, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const Mono& m, const Scalar& c);  // merges, drops zeros

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly scaled(const Scalar& c) const;
  bool operator==(const Poly& o) const;

  struct Leading {
    Mono lm;
    Scalar lc;
  };
  /// LM/LC under the given ordering. Throws zero_input_error on 0.
  Leading leading(const OrderingSpec& ord) const;

  /// Sum of the terms of maximal weighted degree. Throws zero_input_error on 0.
  Poly leading_homogeneous() const;

  struct Homogeneity {
    enum class Kind { Zero, Homogeneous, No } kind;
    unsigned deg = 0;  // valid when Homogeneous
  };
  Homogeneity homogeneity() const;
  bool is_homogeneous_nonzero() const;

  /// Weighted degree of the highest component. Throws zero_input_error on 0.
  unsigned degree() const;

  Poly monic(const OrderingSpec& ord) const;

  /// Terms strictly descending under the given ordering.
  std::vector<std::pair<Mono, Scalar>> sorted_terms(const OrderingSpec& ord) const;
  std::string str(const OrderingSpec& ord) const;

private:
  void check_ctx(const Poly& o) const;

  Ctx ctx_;
  std::map<Mono, Scalar> terms_;
};

Poly mono_poly(const Ctx& ctx, const Mono& m);

}  // namespace dhgb
