#pragma once

#include "dhgb/gb_comm.hpp"

namespace dhgb {

/// Pairing of a commutative base ring with its central homogenization
/// extension R[t]: t appended as the last variable with weight 1, base ordering
/// extended to the block order (B-part major, t-exponent minor).
struct CentralDhContext {
  Ctx base;
  Ctx ext;
  OrderingSpec ord_base;
  OrderingSpec ord_ext;
  /// Maps original variable index -> extended index, recorded when the
  /// extension came from reordering an existing ring (treat_variable_as_t).
  std::vector<std::size_t> var_perm;
};

CentralDhContext make_central_dh(const Ctx& base, const OrderingSpec& ord_base,
                                 const std::string& t_name = "t");

/// Reinterprets an m-variable commutative ring with variable i (weight 1) as
/// the homogenization variable over the remaining variables.
CentralDhContext treat_variable_as_t(const Ctx& ring, const OrderingSpec& ord,
                                     std::size_t i);

/// Moves a polynomial of the full ring into the extended ring of a
/// treat_variable_as_t context (variable permutation only).
Poly into_extended(const CentralDhContext& dh, const Poly& f);

/// f* : each lower homogeneous component multiplied by the matching t power.
Poly homogenize(const CentralDhContext& dh, const Poly& f);

/// F_* : evaluation t -> 1.
Poly dehomogenize(const CentralDhContext& dh, const Poly& F);

/// Cheap criterion: t does not divide LM(F) under the extended ordering.
/// Requires F nonzero homogeneous.
bool is_dh_closed_element(const CentralDhContext& dh, const Poly& F);

/// Definition route (F_*)* == F; test cross-check for the LM criterion.
bool dh_closed_by_definition(const CentralDhContext& dh, const Poly& F);

GroebnerBasis homogenize_basis(const CentralDhContext& dh, const GroebnerBasis& G);
GroebnerBasis dehomogenize_basis(const CentralDhContext& dh, const GroebnerBasis& G);

struct DhIdealVerdict {
  bool closed = true;
  GroebnerBasis reduced;        // canonicalized basis the verdict was read from
  std::optional<Mono> witness;  // offending leading monomial when not closed
};
DhIdealVerdict is_dh_closed_ideal(const CentralDhContext& dh,
                                  const std::vector<Poly>& G);

struct CentralPipelineReport {
  GroebnerBasis gb_Sstar;  // reduced GB of <S*> in R[t]
  GroebnerBasis gb_I;      // reduced GB of I = <S> in R
  GroebnerBasis gb_Istar;  // (gb_I)* , GB of <I*>
  bool ideals_equal = true;  // <S*> == <I*>
};
CentralPipelineReport pipeline_central(const CentralDhContext& dh,
                                       const std::vector<Poly>& S);

}  // namespace dhgb
