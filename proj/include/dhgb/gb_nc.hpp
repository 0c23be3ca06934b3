#pragma once

#include "dhgb/gb_comm.hpp"

namespace dhgb {

/// Overlap ambiguity between words u and v: the ambiguity word equals both
/// left_u * u * right_u and left_v * v * right_v.
struct Overlap {
  Mono word;
  Mono left_u, right_u;
  Mono left_v, right_v;
};

/// All proper suffix/prefix overlaps of u with v (u's suffix matching v's
/// prefix) plus containments of v inside u, excluding disjoint placements.
/// Call with both argument orders to get every ambiguity of a pair.
std::vector<Overlap> overlaps(const Mono& u, const Mono& v, const RingContext& ctx);

/// Degree-bounded completion in the free algebra. The returned basis is
/// inter-reduced; complete == true iff no pending S-element exceeded the bound.
GroebnerBasis complete_nc(const std::vector<Poly>& F, const OrderingSpec& ord,
                          unsigned degree_bound);

/// True iff every overlap S-element of degree <= degree_bound reduces to zero.
VerifyResult verify_groebner_nc(const std::vector<Poly>& G, const OrderingSpec& ord,
                                unsigned degree_bound);

/// Inter-reduction for a noncommutative basis (also valid commutatively).
GroebnerBasis interreduce_nc(const GroebnerBasis& G);

}  // namespace dhgb
