#pragma once

#include <vector>

#include "dhgb/poly.hpp"

namespace dhgb {

/// One division step: f was reduced by coeff * left * G[divisor] * right.
struct TraceStep {
  std::size_t divisor;
  Mono left, right;
  Scalar coeff;
};

/// Division record: replaying the steps reconstructs
/// f = sum coeff_i * left_i * G[d_i] * right_i + remainder.
struct ReductionTrace {
  std::vector<TraceStep> steps;
  Poly remainder;
};

/// Deterministic division algorithm: at each step reduce the largest reducible
/// monomial by the first eligible divisor in G's stored order, using the
/// leftmost factorization. The remainder is supported on N(G). Zero members of
/// G are rejected.
ReductionTrace normal_form(const Poly& f, const std::vector<Poly>& G,
                           const OrderingSpec& ord);

bool reduces_to_zero(const Poly& f, const std::vector<Poly>& G,
                     const OrderingSpec& ord);

/// Exact replay identity check (test support): f == traced combination + remainder.
bool trace_replays(const Poly& f, const std::vector<Poly>& G,
                   const ReductionTrace& tr);

std::string trace_str(const ReductionTrace& tr, const std::vector<Poly>& G,
                      const OrderingSpec& ord);

}  // namespace dhgb
