#include "dhgb/quotient.hpp"

namespace dhgb {

std::vector<std::size_t> NormalMonomialSet::dims() const {
  std::vector<std::size_t> d;
  d.reserve(by_degree.size());
  for (const auto& v : by_degree) d.push_back(v.size());
  return d;
}

std::size_t NormalMonomialSet::total() const {
  std::size_t n = 0;
  for (const auto& v : by_degree) n += v.size();
  return n;
}

std::vector<Mono> monomials_of_degree(const RingContext& ctx, unsigned deg) {
  std::vector<Mono> out;
  if (ctx.kind == RingKind::Commutative) {
    Mono cur = identity_mono(ctx);
    auto rec = [&](auto&& self, std::size_t var, unsigned rem) -> void {
      if (var == ctx.nvars()) {
        if (rem == 0) out.push_back(cur);
        return;
      }
      unsigned w = ctx.weights[var];
      for (unsigned e = 0; e * w <= rem; ++e) {
        cur.data[var] = e;
        self(self, var + 1, rem - e * w);
      }
      cur.data[var] = 0;
    };
    rec(rec, 0, deg);
  } else {
    Mono cur;
    auto rec = [&](auto&& self, unsigned rem) -> void {
      if (rem == 0) {
        out.push_back(cur);
        return;
      }
      for (std::uint32_t l = 0; l < ctx.nvars(); ++l) {
        if (ctx.weights[l] > rem) continue;
        cur.data.push_back(l);
        self(self, rem - ctx.weights[l]);
        cur.data.pop_back();
      }
    };
    rec(rec, deg);
  }
  return out;
}

NormalMonomialSet normal_monomials(const std::vector<Poly>& G, const Ctx& ctx,
                                   const OrderingSpec& ord, unsigned max_degree) {
  std::vector<Mono> lms;
  for (const auto& g : G)
    if (!g.is_zero()) lms.push_back(g.leading(ord).lm);
  NormalMonomialSet out;
  out.by_degree.resize(max_degree + 1);
  for (unsigned p = 0; p <= max_degree; ++p) {
    for (auto& m : monomials_of_degree(*ctx, p)) {
      bool normal = true;
      for (const auto& lm : lms) {
        if (divide_monomial(lm, m, *ctx)) {
          normal = false;
          break;
        }
      }
      if (normal) out.by_degree[p].push_back(std::move(m));
    }
  }
  return out;
}

std::vector<std::size_t> quotient_dims(const std::vector<Poly>& G, const Ctx& ctx,
                                       const OrderingSpec& ord, unsigned max_degree) {
  return normal_monomials(G, ctx, ord, max_degree).dims();
}

std::vector<Poly> lh_set(const std::vector<Poly>& G) {
  std::vector<Poly> out;
  for (const auto& g : G) {
    if (g.is_zero()) throw zero_input_error("LH of the zero polynomial");
    out.push_back(g.leading_homogeneous());
  }
  return out;
}

namespace {

PresentationReport build_report(std::vector<Poly> a_rel, std::vector<Poly> rees,
                                const Ctx& base, const OrderingSpec& ord_base,
                                const Ctx& ext, const OrderingSpec& ord_ext,
                                unsigned max_degree) {
  PresentationReport rep;
  rep.a_relations = std::move(a_rel);
  rep.graded_relations = lh_set(rep.a_relations);
  rep.rees_relations = std::move(rees);
  rep.dims_a = quotient_dims(rep.a_relations, base, ord_base, max_degree);
  rep.dims_graded = quotient_dims(rep.graded_relations, base, ord_base, max_degree);
  rep.dims_rees = quotient_dims(rep.rees_relations, ext, ord_ext, max_degree);
  return rep;
}

}  // namespace

PresentationReport presentation_report_central(const CentralDhContext& dh,
                                               const std::vector<Poly>& G,
                                               unsigned max_degree) {
  auto verdict = is_dh_closed_ideal(dh, G);
  if (!verdict.closed)
    throw precondition_error("ideal is not dh-closed; offending leading monomial " +
                             mono_str(*verdict.witness, *dh.ext));
  auto a_rel = interreduce(dehomogenize_basis(dh, verdict.reduced));
  return build_report(a_rel.elems, verdict.reduced.elems, dh.base, dh.ord_base,
                      dh.ext, dh.ord_ext, max_degree);
}

PresentationReport presentation_report_noncentral(const NoncentralDhContext& dh,
                                                  const std::vector<Poly>& G,
                                                  unsigned max_degree,
                                                  unsigned degree_bound) {
  auto verdict = is_dh_closed_ideal_nc(dh, G, degree_bound);
  if (!verdict.closed)
    throw precondition_error("ideal is not dh-closed; offending leading monomial " +
                             mono_str(*verdict.witness, *dh.ext));
  auto a_rel = interreduce(dehomogenize_basis_nc(dh, verdict.reduced).basis);
  return build_report(a_rel.elems, verdict.reduced.elems, dh.base, dh.ord_base,
                      dh.ext, dh.ord_ext, max_degree);
}

}  // namespace dhgb
