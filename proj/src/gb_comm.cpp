#include "dhgb/gb_comm.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace dhgb {

namespace {

Mono mono_lcm(const Mono& a, const Mono& b) {
  Mono r;
  r.data.resize(a.data.size());
  for (std::size_t i = 0; i < a.data.size(); ++i)
    r.data[i] = std::max(a.data[i], b.data[i]);
  return r;
}

bool coprime(const Mono& a, const Mono& b) {
  for (std::size_t i = 0; i < a.data.size(); ++i)
    if (a.data[i] > 0 && b.data[i] > 0) return false;
  return true;
}

Mono mono_quot(const Mono& num, const Mono& den) {
  Mono r;
  r.data.resize(num.data.size());
  for (std::size_t i = 0; i < num.data.size(); ++i)
    r.data[i] = num.data[i] - den.data[i];
  return r;
}

}  // namespace

Poly s_polynomial(const Poly& f, const Poly& g, const OrderingSpec& ord) {
  if (f.ctx()->kind != RingKind::Commutative)
    throw context_error("s_polynomial is defined in the commutative instance");
  auto lf = f.leading(ord);
  auto lg = g.leading(ord);
  Mono l = mono_lcm(lf.lm, lg.lm);
  Poly a = mono_poly(f.ctx(), mono_quot(l, lf.lm)) * f;
  Poly b = mono_poly(g.ctx(), mono_quot(l, lg.lm)) * g;
  return a.scaled(lf.lc.inverse()) - b.scaled(lg.lc.inverse());
}

void canonicalize_elems(std::vector<Poly>& elems, const OrderingSpec& ord) {
  std::vector<Poly> out;
  for (const auto& g : elems)
    if (!g.is_zero()) out.push_back(g.monic(ord));
  std::sort(out.begin(), out.end(), [&](const Poly& a, const Poly& b) {
    auto c = compare(a.leading(ord).lm, b.leading(ord).lm, *a.ctx(), ord);
    if (c != std::strong_ordering::equal) return c < 0;
    // Equal LMs: break the tie on the monomial supports to keep sorting stable.
    return std::lexicographical_compare(
        a.terms().begin(), a.terms().end(), b.terms().begin(), b.terms().end(),
        [](const auto& x, const auto& y) { return x.first < y.first; });
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  elems = std::move(out);
}

GroebnerBasis minimalize(const GroebnerBasis& G) {
  GroebnerBasis out;
  out.ord = G.ord;
  out.complete = G.complete;
  out.degree_bound = G.degree_bound;
  std::vector<Poly> kept;
  for (std::size_t i = 0; i < G.elems.size(); ++i) {
    const Mono lmi = G.elems[i].leading(G.ord).lm;
    bool drop = false;
    for (std::size_t j = 0; j < G.elems.size() && !drop; ++j) {
      if (i == j) continue;
      const Mono lmj = G.elems[j].leading(G.ord).lm;
      if (divide_monomial(lmj, lmi, *G.elems[i].ctx())) {
        // Equal LMs: keep the earlier element.
        if (lmj == lmi && j > i) continue;
        drop = true;
      }
    }
    if (!drop) kept.push_back(G.elems[i]);
  }
  canonicalize_elems(kept, out.ord);
  out.elems = std::move(kept);
  out.minimal = true;
  return out;
}

GroebnerBasis interreduce(const GroebnerBasis& G) {
  GroebnerBasis out = minimalize(G);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < out.elems.size(); ++i) {
      std::vector<Poly> others;
      for (std::size_t j = 0; j < out.elems.size(); ++j)
        if (j != i) others.push_back(out.elems[j]);
      Poly r = normal_form(out.elems[i], others, out.ord).remainder;
      if (!(r == out.elems[i])) {
        changed = true;
        if (r.is_zero()) {
          out.elems.erase(out.elems.begin() + i);
        } else {
          out.elems[i] = r.monic(out.ord);
        }
        break;
      }
    }
  }
  canonicalize_elems(out.elems, out.ord);
  out.minimal = true;
  out.reduced = true;
  return out;
}

GroebnerBasis buchberger(const std::vector<Poly>& F, const OrderingSpec& ord) {
  GroebnerBasis gb;
  gb.ord = ord;
  gb.complete = true;

  std::vector<Poly> basis;
  for (const auto& f : F)
    if (!f.is_zero()) basis.push_back(f.monic(ord));
  if (basis.empty()) {
    gb.minimal = gb.reduced = true;
    return gb;
  }
  const Ctx ctx = basis.front().ctx();
  if (ctx->kind != RingKind::Commutative)
    throw context_error("buchberger requires a commutative context");

  std::vector<Mono> lms;
  for (const auto& g : basis) lms.push_back(g.leading(ord).lm);

  // Normal selection strategy: smallest lcm degree first, FIFO tie-break.
  using Pair = std::tuple<unsigned, std::size_t, std::size_t, std::size_t>;
  std::set<Pair> pending;
  std::set<std::pair<std::size_t, std::size_t>> treated;
  std::size_t serial = 0;
  auto push_pairs = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i)
      pending.insert({degree(mono_lcm(lms[i], lms[j]), *ctx), serial++, i, j});
  };
  for (std::size_t j = 1; j < basis.size(); ++j) push_pairs(j);

  while (!pending.empty()) {
    auto [d, s, i, j] = *pending.begin();
    pending.erase(pending.begin());
    treated.insert({i, j});
    if (coprime(lms[i], lms[j])) continue;  // product criterion
    // Chain criterion: a third LM dividing the lcm, with both sub-pairs done.
    Mono l = mono_lcm(lms[i], lms[j]);
    bool skip = false;
    for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
      if (k == i || k == j) continue;
      if (!divide_monomial(lms[k], l, *ctx)) continue;
      auto p1 = std::minmax(i, k);
      auto p2 = std::minmax(j, k);
      if (treated.count({p1.first, p1.second}) && treated.count({p2.first, p2.second}))
        skip = true;
    }
    if (skip) continue;

    Poly r = normal_form(s_polynomial(basis[i], basis[j], ord), basis, ord).remainder;
    if (!r.is_zero()) {
      basis.push_back(r.monic(ord));
      lms.push_back(r.leading(ord).lm);
      push_pairs(basis.size() - 1);
    }
  }

  gb.elems = std::move(basis);
  return interreduce(gb);
}

VerifyResult verify_groebner(const std::vector<Poly>& G, const OrderingSpec& ord) {
  VerifyResult res;
  for (std::size_t i = 0; i < G.size(); ++i) {
    for (std::size_t j = i + 1; j < G.size(); ++j) {
      auto tr = normal_form(s_polynomial(G[i], G[j], ord), G, ord);
      if (!tr.remainder.is_zero()) res.ok = false;
      res.certificates.push_back(std::move(tr));
    }
  }
  return res;
}

}  // namespace dhgb
