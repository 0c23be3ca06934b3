#pragma once

#include <optional>

#include "dhgb/reduce.hpp"

namespace dhgb {

/// A canonicalized Groebner basis: monic elements sorted ascending by LM.
struct GroebnerBasis {
  std::vector<Poly> elems;
  OrderingSpec ord;
  bool minimal = false;
  bool reduced = false;
  bool complete = false;
  std::optional<unsigned> degree_bound;

  bool empty() const { return elems.empty(); }
};

/// lcm(LM f, LM g)/LT(f) * f - lcm/LT(g) * g.
Poly s_polynomial(const Poly& f, const Poly& g, const OrderingSpec& ord);

/// Buchberger completion; returns the reduced Groebner basis of <F>.
GroebnerBasis buchberger(const std::vector<Poly>& F, const OrderingSpec& ord);

/// Drops elements whose LM is divisible by another element's LM.
GroebnerBasis minimalize(const GroebnerBasis& G);

/// Minimalize + full tail reduction; the unique reduced basis of the ideal.
GroebnerBasis interreduce(const GroebnerBasis& G);

struct VerifyResult {
  bool ok = true;
  std::vector<ReductionTrace> certificates;  // one per S-polynomial checked
};

/// True iff every S-polynomial of pairs in G reduces to zero by G.
VerifyResult verify_groebner(const std::vector<Poly>& G, const OrderingSpec& ord);

/// Sorts ascending by LM, makes elements monic, drops zeros.
void canonicalize_elems(std::vector<Poly>& elems, const OrderingSpec& ord);

}  // namespace dhgb
