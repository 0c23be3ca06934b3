#include "dhgb/dh_central.hpp"

namespace dhgb {

namespace {

Mono lift_mono(const Mono& m) {
  Mono r = m;
  r.data.push_back(0);
  return r;
}

void check_base(const CentralDhContext& dh, const Poly& f) {
  if (!f.ctx()->same_shape(*dh.base)) throw context_error("expected a base-ring polynomial");
}

void check_ext(const CentralDhContext& dh, const Poly& f) {
  if (!f.ctx()->same_shape(*dh.ext)) throw context_error("expected an extended-ring polynomial");
}

void require_verified(const std::vector<Poly>& G, const OrderingSpec& ord,
                      const char* what) {
  if (!verify_groebner(G, ord).ok)
    throw precondition_error(std::string(what) + ": input set is not a Groebner basis");
}

}  // namespace

CentralDhContext make_central_dh(const Ctx& base, const OrderingSpec& ord_base,
                                 const std::string& t_name) {
  if (base->kind != RingKind::Commutative)
    throw context_error("central homogenization needs a commutative base ring");
  CentralDhContext dh;
  dh.base = base;
  dh.ord_base = ord_base;
  auto vars = base->vars;
  vars.push_back(t_name);
  auto weights = base->weights;
  weights.push_back(1);
  dh.ext = make_context(RingKind::Commutative, std::move(vars), std::move(weights),
                        base->field, base->nvars());
  dh.ord_ext.ext = OrdExtension::CentralT;
  dh.ord_ext.precedence.push_back(base->nvars());  // t smallest
  for (auto i : ord_base.precedence) dh.ord_ext.precedence.push_back(i);
  return dh;
}

CentralDhContext treat_variable_as_t(const Ctx& ring, const OrderingSpec& ord,
                                     std::size_t i) {
  if (ring->kind != RingKind::Commutative)
    throw context_error("treat_variable_as_t needs a commutative ring");
  if (i >= ring->nvars()) throw precondition_error("variable index out of range");
  if (ring->weights[i] != 1)
    throw precondition_error("homogenization variable must have weight 1");

  std::vector<std::string> base_vars;
  std::vector<unsigned> base_weights;
  std::vector<std::size_t> perm(ring->nvars());
  for (std::size_t j = 0, k = 0; j < ring->nvars(); ++j) {
    if (j == i) continue;
    perm[j] = k++;
    base_vars.push_back(ring->vars[j]);
    base_weights.push_back(ring->weights[j]);
  }
  perm[i] = ring->nvars() - 1;

  Ctx base = make_context(RingKind::Commutative, base_vars, base_weights, ring->field);
  OrderingSpec ord_base;
  for (auto v : ord.precedence)
    if (v != i) ord_base.precedence.push_back(perm[v]);
  CentralDhContext dh = make_central_dh(base, ord_base, ring->vars[i]);
  dh.var_perm = std::move(perm);
  return dh;
}

Poly into_extended(const CentralDhContext& dh, const Poly& f) {
  Poly r(dh.ext);
  if (f.ctx()->same_shape(*dh.base)) {
    for (const auto& [m, c] : f.terms()) r.add_term(lift_mono(m), c);
    return r;
  }
  if (!dh.var_perm.empty() && f.ctx()->nvars() == dh.ext->nvars()) {
    for (const auto& [m, c] : f.terms()) {
      Mono t;
      t.data.resize(m.data.size());
      for (std::size_t j = 0; j < m.data.size(); ++j) t.data[dh.var_perm[j]] = m.data[j];
      r.add_term(t, c);
    }
    return r;
  }
  throw context_error("polynomial fits neither the base nor the original ring");
}

Poly homogenize(const CentralDhContext& dh, const Poly& f) {
  check_base(dh, f);
  if (f.is_zero()) throw zero_input_error("homogenize(0)");
  unsigned p = f.degree();
  Poly r(dh.ext);
  for (const auto& [m, c] : f.terms()) {
    Mono t = lift_mono(m);
    t.data.back() = p - degree(m, *dh.base);
    r.add_term(t, c);
  }
  return r;
}

Poly dehomogenize(const CentralDhContext& dh, const Poly& F) {
  check_ext(dh, F);
  Poly r(dh.base);
  for (const auto& [m, c] : F.terms()) {
    Mono t = m;
    t.data.pop_back();
    r.add_term(t, c);
  }
  return r;
}

bool is_dh_closed_element(const CentralDhContext& dh, const Poly& F) {
  check_ext(dh, F);
  if (F.is_zero()) throw zero_input_error("dh-closedness of 0");
  if (!F.is_homogeneous_nonzero())
    throw precondition_error("dh-closedness is defined for homogeneous elements");
  return F.leading(dh.ord_ext).lm.data.back() == 0;
}

bool dh_closed_by_definition(const CentralDhContext& dh, const Poly& F) {
  return homogenize(dh, dehomogenize(dh, F)) == F;
}

GroebnerBasis homogenize_basis(const CentralDhContext& dh, const GroebnerBasis& G) {
  require_verified(G.elems, G.ord, "homogenize_basis");
  GroebnerBasis out;
  out.ord = dh.ord_ext;
  out.minimal = G.minimal;
  out.reduced = G.reduced;
  out.complete = true;
  for (const auto& g : G.elems) out.elems.push_back(homogenize(dh, g));
  canonicalize_elems(out.elems, out.ord);
  return out;
}

GroebnerBasis dehomogenize_basis(const CentralDhContext& dh, const GroebnerBasis& G) {
  for (const auto& g : G.elems)
    if (!g.is_homogeneous_nonzero())
      throw precondition_error("dehomogenize_basis needs homogeneous elements (graded ideal)");
  require_verified(G.elems, G.ord, "dehomogenize_basis");
  GroebnerBasis out;
  out.ord = dh.ord_base;
  out.complete = G.complete;
  for (const auto& g : G.elems) {
    Poly d = dehomogenize(dh, g);
    if (!d.is_zero()) out.elems.push_back(d);
  }
  canonicalize_elems(out.elems, out.ord);
  return out;
}

DhIdealVerdict is_dh_closed_ideal(const CentralDhContext& dh,
                                  const std::vector<Poly>& G) {
  for (const auto& g : G)
    if (!g.is_zero() && !g.is_homogeneous_nonzero())
      throw precondition_error("dh-closedness of an ideal needs homogeneous generators");
  DhIdealVerdict v;
  v.reduced = buchberger(G, dh.ord_ext);
  for (const auto& g : v.reduced.elems) {
    if (!is_dh_closed_element(dh, g)) {
      v.closed = false;
      v.witness = g.leading(dh.ord_ext).lm;
      break;
    }
  }
  return v;
}

CentralPipelineReport pipeline_central(const CentralDhContext& dh,
                                       const std::vector<Poly>& S) {
  CentralPipelineReport rep;
  std::vector<Poly> Sstar;
  for (const auto& f : S)
    if (!f.is_zero()) Sstar.push_back(homogenize(dh, f));

  rep.gb_Sstar = buchberger(Sstar, dh.ord_ext);
  rep.gb_I = interreduce(dehomogenize_basis(dh, rep.gb_Sstar));
  rep.gb_Istar = homogenize_basis(dh, rep.gb_I);

  for (const auto& g : rep.gb_Istar.elems)
    if (!reduces_to_zero(g, rep.gb_Sstar.elems, dh.ord_ext)) rep.ideals_equal = false;
  for (const auto& g : rep.gb_Sstar.elems)
    if (!reduces_to_zero(g, rep.gb_Istar.elems, dh.ord_ext)) rep.ideals_equal = false;
  return rep;
}

}  // namespace dhgb
