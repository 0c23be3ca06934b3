#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dhgb/scalar.hpp"

namespace dhgb {

enum class RingKind { Commutative, Noncommutative };

/// Declares the ambient ring: a commutative polynomial ring or a free algebra,
/// with named variables, positive integer weights, a coefficient field, and an
/// optional designated homogenization variable (which must have weight 1).
struct RingContext {
  RingKind kind = RingKind::Commutative;
  std::vector<std::string> vars;
  std::vector<unsigned> weights;
  FieldSpec field;
  std::optional<std::size_t> homog_var;

  std::size_t nvars() const { return vars.size(); }
  std::size_t index_of(const std::string& name) const;  // throws context_error

  bool same_shape(const RingContext& o) const {
    return kind == o.kind && vars == o.vars && weights == o.weights &&
           field == o.field && homog_var == o.homog_var;
  }
};

using Ctx = std::shared_ptr<const RingContext>;

/// Builds a context, validating uniqueness of names, positivity of weights,
/// primality of the modulus, and weight 1 on the homogenization variable.
Ctx make_context(RingKind kind, std::vector<std::string> vars,
                 std::vector<unsigned> weights, FieldSpec field,
                 std::optional<std::size_t> homog_var = std::nullopt);

/// A basis monomial. Interpretation depends on the context kind:
/// commutative -> exponent vector aligned to the context variables;
/// noncommutative -> sequence of letter indices (empty = identity).
struct Mono {
  std::vector<std::uint32_t> data;

  // Structural order, used only as a map key; not the monomial ordering.
  auto operator<=>(const Mono&) const = default;
};

Mono identity_mono(const RingContext& ctx);
bool is_identity(const Mono& m, const RingContext& ctx);
unsigned degree(const Mono& m, const RingContext& ctx);
Mono mono_mul(const Mono& a, const Mono& b, const RingContext& ctx);

/// Divisibility witness v = left * u * right (commutative: right is the
/// identity and left the exponent quotient; noncommutative: the leftmost
/// occurrence of u as a subword of v).
struct DivWitness {
  Mono left, right;
};
std::optional<DivWitness> divide_monomial(const Mono& u, const Mono& v,
                                          const RingContext& ctx);

enum class OrdExtension { None, CentralT, NoncentralT };

/// Weighted graded lex over a declared precedence, optionally extended for a
/// homogenization variable. Precedence is ascending: the last listed variable
/// is compared first on a degree tie.
struct OrderingSpec {
  std::vector<std::size_t> precedence;  // variable indices, ascending
  OrdExtension ext = OrdExtension::None;
};

OrderingSpec default_ordering(const RingContext& ctx);

std::strong_ordering compare(const Mono& a, const Mono& b,
                             const RingContext& ctx, const OrderingSpec& ord);

std::string mono_str(const Mono& m, const RingContext& ctx);

}  // namespace dhgb
