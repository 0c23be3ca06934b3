#pragma once

#include "dhgb/gb_nc.hpp"

namespace dhgb {

/// Pairing of a free algebra K<X> with its noncentral homogenization extension
/// K<X,T>: T appended with weight 1 and lowest precedence, base graded lex
/// extended to the graded lex with T smallest.
struct NoncentralDhContext {
  Ctx base;
  Ctx ext;
  OrderingSpec ord_base;
  OrderingSpec ord_ext;
  std::vector<Poly> commutators;        // X_i T - T X_i, one per base letter
  std::vector<std::size_t> var_perm;    // original index -> ext index (treat_variable_as_T)
};

NoncentralDhContext make_noncentral_dh(const Ctx& base, const OrderingSpec& ord_base,
                                       const std::string& t_name = "T");

/// Reinterprets a free algebra on n letters with letter i (weight 1) as the
/// homogenization letter over the remaining letters; T is reordered to lowest
/// precedence, recorded in var_perm.
NoncentralDhContext treat_variable_as_T(const Ctx& ring, const OrderingSpec& ord,
                                        std::size_t i);

Poly into_extended_nc(const NoncentralDhContext& dh, const Poly& f);

/// f~ : T powers multiplied on the left of each lower homogeneous component.
Poly homogenize_nc(const NoncentralDhContext& dh, const Poly& f);

/// F~ : erase every T letter (the letter-erasing homomorphism).
Poly dehomogenize_nc(const NoncentralDhContext& dh, const Poly& F);

/// Normal form against the commutator basis: all T letters migrate left,
/// producing the unique representative in span N(C). Requires F homogeneous.
Poly normalize_mod_commutators(const NoncentralDhContext& dh, const Poly& F);

/// Every monomial has the T-left shape T^r w with w a T-free word.
bool is_t_left_normal(const NoncentralDhContext& dh, const Poly& F);

/// Normalizes mod the commutators, then tests (H~)~ == H.
bool is_dh_closed_element_nc(const NoncentralDhContext& dh, const Poly& F);

/// Lemma-style LM criterion on an already T-left-normalized homogeneous H.
bool dh_closed_lm_criterion_nc(const NoncentralDhContext& dh, const Poly& H);

/// {g~} plus the commutator set; valid GB of <I~> when G is a GB of I.
GroebnerBasis homogenize_basis_nc(const NoncentralDhContext& dh, const GroebnerBasis& G,
                                  unsigned degree_bound);

/// Erase-T images with zeros (commutator images) dropped; GB of J~.
/// Requires the commutators to reduce to zero against G.
struct NcDehomogenized {
  GroebnerBasis basis;
  std::size_t dropped_zero_images = 0;
};
NcDehomogenized dehomogenize_basis_nc(const NoncentralDhContext& dh,
                                      const GroebnerBasis& G);

struct DhIdealVerdictNc {
  bool closed = true;
  GroebnerBasis reduced;
  std::optional<Mono> witness;
};
/// Canonicalizes (bounded completion of G plus the commutators), then reads
/// the verdict from the non-commutator elements. Commutators must lie in <G>.
DhIdealVerdictNc is_dh_closed_ideal_nc(const NoncentralDhContext& dh,
                                       const std::vector<Poly>& G,
                                       unsigned degree_bound);

struct NoncentralPipelineReport {
  GroebnerBasis gb_Stilde;
  GroebnerBasis gb_I;
  GroebnerBasis gb_Itilde;
  bool ideals_equal = true;  // decided within the degree bound
  bool complete = true;
};
NoncentralPipelineReport pipeline_noncentral(const NoncentralDhContext& dh,
                                             const std::vector<Poly>& S,
                                             unsigned degree_bound);

}  // namespace dhgb
