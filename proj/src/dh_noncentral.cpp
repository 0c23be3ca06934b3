#include "dhgb/dh_noncentral.hpp"

#include <algorithm>

namespace dhgb {

namespace {

void check_base(const NoncentralDhContext& dh, const Poly& f) {
  if (!f.ctx()->same_shape(*dh.base)) throw context_error("expected a base-algebra polynomial");
}

void check_ext(const NoncentralDhContext& dh, const Poly& f) {
  if (!f.ctx()->same_shape(*dh.ext)) throw context_error("expected an extended-algebra polynomial");
}

std::size_t t_index(const NoncentralDhContext& dh) { return *dh.ext->homog_var; }

bool is_commutator_of(const NoncentralDhContext& dh, const Poly& g) {
  return std::any_of(dh.commutators.begin(), dh.commutators.end(),
                     [&](const Poly& c) { return c == g; });
}

}  // namespace

NoncentralDhContext make_noncentral_dh(const Ctx& base, const OrderingSpec& ord_base,
                                       const std::string& t_name) {
  if (base->kind != RingKind::Noncommutative)
    throw context_error("noncentral homogenization needs a free-algebra base");
  NoncentralDhContext dh;
  dh.base = base;
  dh.ord_base = ord_base;
  auto vars = base->vars;
  vars.push_back(t_name);
  auto weights = base->weights;
  weights.push_back(1);
  std::size_t t = base->nvars();
  dh.ext = make_context(RingKind::Noncommutative, std::move(vars), std::move(weights),
                        base->field, t);
  dh.ord_ext.ext = OrdExtension::NoncentralT;
  dh.ord_ext.precedence.push_back(t);  // T smallest
  for (auto i : ord_base.precedence) dh.ord_ext.precedence.push_back(i);

  Scalar one = Scalar::one(base->field);
  for (std::size_t i = 0; i < base->nvars(); ++i) {
    Poly c(dh.ext);
    c.add_term(Mono{{static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(t)}}, one);
    c.add_term(Mono{{static_cast<std::uint32_t>(t), static_cast<std::uint32_t>(i)}}, -one);
    dh.commutators.push_back(std::move(c));
  }
  return dh;
}

NoncentralDhContext treat_variable_as_T(const Ctx& ring, const OrderingSpec& ord,
                                        std::size_t i) {
  if (ring->kind != RingKind::Noncommutative)
    throw context_error("treat_variable_as_T needs a free algebra");
  if (i >= ring->nvars()) throw precondition_error("letter index out of range");
  if (ring->weights[i] != 1)
    throw precondition_error("homogenization letter must have weight 1");

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

  Ctx base = make_context(RingKind::Noncommutative, base_vars, base_weights, ring->field);
  OrderingSpec ord_base;
  for (auto v : ord.precedence)
    if (v != i) ord_base.precedence.push_back(perm[v]);
  NoncentralDhContext dh = make_noncentral_dh(base, ord_base, ring->vars[i]);
  dh.var_perm = std::move(perm);
  return dh;
}

Poly into_extended_nc(const NoncentralDhContext& dh, const Poly& f) {
  Poly r(dh.ext);
  if (f.ctx()->same_shape(*dh.base)) {
    for (const auto& [m, c] : f.terms()) r.add_term(m, c);  // letter indices agree
    return r;
  }
  if (!dh.var_perm.empty() && f.ctx()->nvars() == dh.ext->nvars()) {
    for (const auto& [m, c] : f.terms()) {
      Mono t = m;
      for (auto& l : t.data) l = static_cast<std::uint32_t>(dh.var_perm[l]);
      r.add_term(t, c);
    }
    return r;
  }
  throw context_error("polynomial fits neither the base nor the original algebra");
}

Poly homogenize_nc(const NoncentralDhContext& dh, const Poly& f) {
  check_base(dh, f);
  if (f.is_zero()) throw zero_input_error("homogenize(0)");
  unsigned p = f.degree();
  std::uint32_t t = static_cast<std::uint32_t>(t_index(dh));
  Poly r(dh.ext);
  for (const auto& [m, c] : f.terms()) {
    Mono w;
    w.data.assign(p - degree(m, *dh.base), t);  // T powers on the left
    w.data.insert(w.data.end(), m.data.begin(), m.data.end());
    r.add_term(w, c);
  }
  return r;
}

Poly dehomogenize_nc(const NoncentralDhContext& dh, const Poly& F) {
  check_ext(dh, F);
  std::uint32_t t = static_cast<std::uint32_t>(t_index(dh));
  Poly r(dh.base);
  for (const auto& [m, c] : F.terms()) {
    Mono w;
    for (auto l : m.data)
      if (l != t) w.data.push_back(l);
    r.add_term(w, c);
  }
  return r;
}

Poly normalize_mod_commutators(const NoncentralDhContext& dh, const Poly& F) {
  check_ext(dh, F);
  if (!F.is_zero() && !F.is_homogeneous_nonzero())
    throw precondition_error("normalization mod commutators needs a homogeneous input");
  return normal_form(F, dh.commutators, dh.ord_ext).remainder;
}

bool is_t_left_normal(const NoncentralDhContext& dh, const Poly& F) {
  std::uint32_t t = static_cast<std::uint32_t>(t_index(dh));
  for (const auto& [m, c] : F.terms()) {
    bool seen_letter = false;
    for (auto l : m.data) {
      if (l != t) seen_letter = true;
      else if (seen_letter) return false;
    }
  }
  return true;
}

bool is_dh_closed_element_nc(const NoncentralDhContext& dh, const Poly& F) {
  check_ext(dh, F);
  if (F.is_zero()) throw zero_input_error("dh-closedness of 0");
  if (!F.is_homogeneous_nonzero())
    throw precondition_error("dh-closedness is defined for homogeneous elements");
  Poly H = normalize_mod_commutators(dh, F);
  if (H.is_zero()) return false;  // F lies in the commutator ideal
  return homogenize_nc(dh, dehomogenize_nc(dh, H)) == H;
}

bool dh_closed_lm_criterion_nc(const NoncentralDhContext& dh, const Poly& H) {
  std::uint32_t t = static_cast<std::uint32_t>(t_index(dh));
  const Mono lm = H.leading(dh.ord_ext).lm;
  return lm.data.empty() || lm.data.front() != t;
}

GroebnerBasis homogenize_basis_nc(const NoncentralDhContext& dh, const GroebnerBasis& G,
                                  unsigned degree_bound) {
  if (!verify_groebner_nc(G.elems, G.ord, degree_bound).ok)
    throw precondition_error("homogenize_basis_nc: input set is not a Groebner basis");
  GroebnerBasis out;
  out.ord = dh.ord_ext;
  out.complete = G.complete;
  out.degree_bound = G.degree_bound;
  for (const auto& g : G.elems) out.elems.push_back(homogenize_nc(dh, g));
  for (const auto& c : dh.commutators) out.elems.push_back(c);
  canonicalize_elems(out.elems, out.ord);
  return out;
}

NcDehomogenized dehomogenize_basis_nc(const NoncentralDhContext& dh,
                                      const GroebnerBasis& G) {
  for (const auto& g : G.elems)
    if (!g.is_homogeneous_nonzero())
      throw precondition_error("dehomogenize_basis_nc needs homogeneous elements");
  for (const auto& c : dh.commutators)
    if (!reduces_to_zero(c, G.elems, G.ord))
      throw precondition_error("dehomogenize_basis_nc: commutators not contained in the ideal");
  NcDehomogenized out;
  out.basis.ord = dh.ord_base;
  out.basis.complete = G.complete;
  out.basis.degree_bound = G.degree_bound;
  for (const auto& g : G.elems) {
    Poly d = dehomogenize_nc(dh, g);
    if (d.is_zero()) {
      ++out.dropped_zero_images;
    } else {
      out.basis.elems.push_back(d);
    }
  }
  canonicalize_elems(out.basis.elems, out.basis.ord);
  return out;
}

DhIdealVerdictNc is_dh_closed_ideal_nc(const NoncentralDhContext& dh,
                                       const std::vector<Poly>& G,
                                       unsigned degree_bound) {
  for (const auto& g : G)
    if (!g.is_zero() && !g.is_homogeneous_nonzero())
      throw precondition_error("dh-closedness of an ideal needs homogeneous generators");
  DhIdealVerdictNc v;
  GroebnerBasis pre = complete_nc(G, dh.ord_ext, degree_bound);
  for (const auto& c : dh.commutators)
    if (!reduces_to_zero(c, pre.elems, dh.ord_ext))
      throw precondition_error("is_dh_closed_ideal_nc: commutators not contained in the ideal");
  v.reduced = pre;
  for (const auto& g : v.reduced.elems) {
    if (is_commutator_of(dh, g)) continue;
    // Reduced elements of an ideal containing the commutators are T-left normal.
    if (!is_t_left_normal(dh, g))
      throw precondition_error("canonicalized basis element not T-left normal");
    if (!dh_closed_lm_criterion_nc(dh, g)) {
      v.closed = false;
      v.witness = g.leading(dh.ord_ext).lm;
      break;
    }
  }
  return v;
}

NoncentralPipelineReport pipeline_noncentral(const NoncentralDhContext& dh,
                                             const std::vector<Poly>& S,
                                             unsigned degree_bound) {
  NoncentralPipelineReport rep;
  std::vector<Poly> Stilde;
  for (const auto& f : S)
    if (!f.is_zero()) Stilde.push_back(homogenize_nc(dh, f));
  for (const auto& c : dh.commutators) Stilde.push_back(c);

  rep.gb_Stilde = complete_nc(Stilde, dh.ord_ext, degree_bound);
  rep.complete = rep.gb_Stilde.complete;
  rep.gb_I = interreduce(dehomogenize_basis_nc(dh, rep.gb_Stilde).basis);
  rep.gb_I.complete = rep.gb_Stilde.complete;
  rep.gb_I.degree_bound = degree_bound;
  rep.gb_Itilde = homogenize_basis_nc(dh, rep.gb_I, degree_bound);

  for (const auto& g : rep.gb_Itilde.elems)
    if (!reduces_to_zero(g, rep.gb_Stilde.elems, dh.ord_ext)) rep.ideals_equal = false;
  for (const auto& g : rep.gb_Stilde.elems)
    if (!reduces_to_zero(g, rep.gb_Itilde.elems, dh.ord_ext)) rep.ideals_equal = false;
  return rep;
}

}  // namespace dhgb
