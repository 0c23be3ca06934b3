#include "dhgb/gb_nc.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace dhgb {

std::vector<Overlap> overlaps(const Mono& u, const Mono& v, const RingContext& ctx) {
  if (ctx.kind != RingKind::Noncommutative)
    throw context_error("overlaps are defined for words only");
  if (u.data.empty() || v.data.empty())
    throw precondition_error("overlaps of the empty word");
  std::vector<Overlap> out;
  const std::size_t m = u.data.size(), n = v.data.size();

  // Proper suffix(u)/prefix(v) overlaps.
  for (std::size_t k = 1; k < std::min(m, n); ++k) {
    if (!std::equal(u.data.end() - k, u.data.end(), v.data.begin())) continue;
    Overlap o;
    o.word.data = u.data;
    o.word.data.insert(o.word.data.end(), v.data.begin() + k, v.data.end());
    o.right_u.data.assign(v.data.begin() + k, v.data.end());
    o.left_v.data.assign(u.data.begin(), u.data.end() - k);
    out.push_back(std::move(o));
  }

  // Containments of v inside u (excluding u == v at position 0).
  if (n <= m && u.data != v.data) {
    for (std::size_t pos = 0; pos + n <= m; ++pos) {
      if (!std::equal(v.data.begin(), v.data.end(), u.data.begin() + pos)) continue;
      Overlap o;
      o.word.data = u.data;
      o.left_v.data.assign(u.data.begin(), u.data.begin() + pos);
      o.right_v.data.assign(u.data.begin() + pos + n, u.data.end());
      out.push_back(std::move(o));
    }
  }
  return out;
}

namespace {

Poly s_element(const Poly& f, const Poly& g, const Overlap& o) {
  // Elements are monic, so the S-element is the plain difference of placements.
  Poly a = mono_poly(f.ctx(), o.left_u) * f * mono_poly(f.ctx(), o.right_u);
  Poly b = mono_poly(g.ctx(), o.left_v) * g * mono_poly(g.ctx(), o.right_v);
  return a - b;
}

}  // namespace

GroebnerBasis interreduce_nc(const GroebnerBasis& G) { return interreduce(G); }

GroebnerBasis complete_nc(const std::vector<Poly>& F, const OrderingSpec& ord,
                          unsigned degree_bound) {
  GroebnerBasis gb;
  gb.ord = ord;
  gb.complete = true;
  gb.degree_bound = degree_bound;

  std::vector<Poly> basis;
  for (const auto& f : F)
    if (!f.is_zero()) basis.push_back(f.monic(ord));
  if (basis.empty()) {
    gb.minimal = gb.reduced = true;
    return gb;
  }
  const Ctx ctx = basis.front().ctx();
  if (ctx->kind != RingKind::Noncommutative)
    throw context_error("complete_nc requires a free-algebra context");
  for (const auto& f : basis)
    if (f.degree() > degree_bound)
      throw precondition_error("degree bound below generator degree");

  auto unit_basis = [&]() {
    GroebnerBasis u;
    u.ord = ord;
    u.complete = true;
    u.minimal = u.reduced = true;
    u.degree_bound = degree_bound;
    u.elems = {mono_poly(ctx, identity_mono(*ctx))};
    return u;
  };

  std::vector<Mono> lms;
  for (const auto& g : basis) {
    Mono lm = g.leading(ord).lm;
    // a unit generator collapses the ideal to the whole algebra
    if (lm.data.empty()) return unit_basis();
    lms.push_back(std::move(lm));
  }

  // Pending S-elements ordered by (ambiguity degree, creation index).
  struct Item {
    std::size_t i, j;
    Overlap o;
  };
  std::vector<Item> items;
  using Key = std::tuple<unsigned, std::size_t>;
  std::set<std::pair<Key, std::size_t>> queue;  // (key, item index)
  std::size_t serial = 0;
  auto enqueue_pair = [&](std::size_t i, std::size_t j) {
    auto push = [&](std::size_t a, std::size_t b, const Overlap& o) {
      unsigned d = degree(o.word, *ctx);
      items.push_back({a, b, o});
      queue.insert({{d, serial++}, items.size() - 1});
    };
    for (const auto& o : overlaps(lms[i], lms[j], *ctx)) push(i, j, o);
    if (i != j)
      for (const auto& o : overlaps(lms[j], lms[i], *ctx)) push(j, i, o);
  };
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i <= j; ++i) enqueue_pair(i, j);

  while (!queue.empty()) {
    auto [key, idx] = *queue.begin();
    queue.erase(queue.begin());
    if (std::get<0>(key) > degree_bound) {
      gb.complete = false;
      continue;
    }
    const Item& it = items[idx];
    Poly r = normal_form(s_element(basis[it.i], basis[it.j], it.o), basis, ord).remainder;
    if (r.is_zero()) continue;
    basis.push_back(r.monic(ord));
    Mono lm = basis.back().leading(ord).lm;
    if (lm.data.empty()) return unit_basis();
    lms.push_back(std::move(lm));
    std::size_t last = basis.size() - 1;
    for (std::size_t i = 0; i <= last; ++i) enqueue_pair(i, last);
  }

  gb.elems = std::move(basis);
  bool complete = gb.complete;
  gb = interreduce(gb);
  gb.complete = complete;
  gb.degree_bound = degree_bound;
  return gb;
}

VerifyResult verify_groebner_nc(const std::vector<Poly>& G, const OrderingSpec& ord,
                                unsigned degree_bound) {
  VerifyResult res;
  if (G.empty()) return res;
  const Ctx ctx = G.front().ctx();
  std::vector<Poly> monic;
  std::vector<Mono> lms;
  for (const auto& g : G) {
    monic.push_back(g.monic(ord));
    lms.push_back(g.leading(ord).lm);
  }
  auto check = [&](std::size_t i, std::size_t j, const Overlap& o) {
    if (degree(o.word, *ctx) > degree_bound) return;
    auto tr = normal_form(s_element(monic[i], monic[j], o), monic, ord);
    if (!tr.remainder.is_zero()) res.ok = false;
    res.certificates.push_back(std::move(tr));
  };
  for (std::size_t j = 0; j < G.size(); ++j) {
    for (std::size_t i = 0; i <= j; ++i) {
      // a unit member reduces every ambiguity; the empty word has no overlaps
      if (lms[i].data.empty() || lms[j].data.empty()) continue;
      for (const auto& o : overlaps(lms[i], lms[j], *ctx)) check(i, j, o);
      if (i != j)
        for (const auto& o : overlaps(lms[j], lms[i], *ctx)) check(j, i, o);
    }
  }
  return res;
}

}  // namespace dhgb
