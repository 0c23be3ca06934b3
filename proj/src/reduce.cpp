#include "dhgb/reduce.hpp"

#include <sstream>

namespace dhgb {

ReductionTrace normal_form(const Poly& f, const std::vector<Poly>& G,
                           const OrderingSpec& ord) {
  for (const auto& g : G)
    if (g.is_zero()) throw precondition_error("zero divisor in reduction set");

  ReductionTrace tr;
  tr.remainder = Poly(f.ctx());
  const RingContext& ctx = *f.ctx();

  std::vector<Poly::Leading> lead;
  lead.reserve(G.size());
  for (const auto& g : G) lead.push_back(g.leading(ord));

  Poly h = f;
  while (!h.is_zero()) {
    auto [lm, lc] = h.leading(ord);
    bool reduced = false;
    for (std::size_t j = 0; j < G.size(); ++j) {
      auto w = divide_monomial(lead[j].lm, lm, ctx);
      if (!w) continue;
      Scalar coeff = lc * lead[j].lc.inverse();
      Poly sub = mono_poly(f.ctx(), w->left) * G[j] * mono_poly(f.ctx(), w->right);
      h = h - sub.scaled(coeff);
      tr.steps.push_back({j, w->left, w->right, coeff});
      reduced = true;
      break;
    }
    if (!reduced) {
      // LT(h) is normal; move it to the remainder and continue on the tail.
      tr.remainder.add_term(lm, lc);
      h.add_term(lm, -lc);
    }
  }
  return tr;
}

bool reduces_to_zero(const Poly& f, const std::vector<Poly>& G,
                     const OrderingSpec& ord) {
  return normal_form(f, G, ord).remainder.is_zero();
}

bool trace_replays(const Poly& f, const std::vector<Poly>& G,
                   const ReductionTrace& tr) {
  Poly acc = tr.remainder;
  for (const auto& s : tr.steps) {
    Poly piece = mono_poly(f.ctx(), s.left) * G[s.divisor] * mono_poly(f.ctx(), s.right);
    acc = acc + piece.scaled(s.coeff);
  }
  return acc == f;
}

std::string trace_str(const ReductionTrace& tr, const std::vector<Poly>& G,
                      const OrderingSpec& ord) {
  std::ostringstream os;
  for (const auto& s : tr.steps) {
    const RingContext& ctx = *G[s.divisor].ctx();
    os << "  - " << s.coeff.str() << " * " << mono_str(s.left, ctx) << " * g"
       << (s.divisor + 1) << " * " << mono_str(s.right, ctx) << "\n";
  }
  os << "  remainder: " << tr.remainder.str(ord) << "\n";
  return os.str();
}

}  // namespace dhgb
