#pragma once

#include "dhgb/dh_central.hpp"
#include "dhgb/dh_noncentral.hpp"

namespace dhgb {

/// Monomials divisible by no leading monomial of the generating basis,
/// enumerated exhaustively by weighted degree up to a cap.
struct NormalMonomialSet {
  std::vector<std::vector<Mono>> by_degree;  // index = weighted degree

  std::vector<std::size_t> dims() const;
  std::size_t total() const;
};

/// All monomials of the given weighted degree (exponent vectors or words).
std::vector<Mono> monomials_of_degree(const RingContext& ctx, unsigned deg);

NormalMonomialSet normal_monomials(const std::vector<Poly>& G, const Ctx& ctx,
                                   const OrderingSpec& ord, unsigned max_degree);

std::vector<std::size_t> quotient_dims(const std::vector<Poly>& G, const Ctx& ctx,
                                       const OrderingSpec& ord, unsigned max_degree);

/// {LH(g)}: top weighted-degree homogeneous components. Rejects zero elements.
std::vector<Poly> lh_set(const std::vector<Poly>& G);

/// Defining-relation report for A = R/<G_*>, its associated graded algebra,
/// and the Rees algebra R[t]/<G>, with per-degree dimension tables.
struct PresentationReport {
  std::vector<Poly> a_relations;       // dehomogenized basis
  std::vector<Poly> graded_relations;  // LH of the dehomogenized basis
  std::vector<Poly> rees_relations;    // the dh-closed homogeneous basis itself
  std::vector<std::size_t> dims_a;
  std::vector<std::size_t> dims_graded;
  std::vector<std::size_t> dims_rees;
};

/// Gate: the input must generate a dh-closed graded ideal; throws
/// precondition_error naming the offending leading monomial otherwise.
PresentationReport presentation_report_central(const CentralDhContext& dh,
                                               const std::vector<Poly>& G,
                                               unsigned max_degree);

PresentationReport presentation_report_noncentral(const NoncentralDhContext& dh,
                                                  const std::vector<Poly>& G,
                                                  unsigned max_degree,
                                                  unsigned degree_bound);

}  // namespace dhgb
