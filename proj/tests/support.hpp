#pragma once

#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dhgb/session.hpp"

namespace support {

using namespace dhgb;

inline Session sess(const std::string& text) {
  std::istringstream is(text);
  return parse_session(is);
}

inline Poly find_poly(const Session& s, const std::string& name) {
  for (const auto& [n, p] : s.polys)
    if (n == name) return p;
  throw std::runtime_error("no poly named " + name);
}

/// Parses one expression by wrapping it in a throwaway session.
inline Poly P(const std::string& decl, const std::string& expr) {
  return find_poly(sess(decl + "\npoly tmp_ = " + expr + "\n"), "tmp_");
}

inline std::vector<Poly> polys_of(const Session& s) {
  std::vector<Poly> out;
  for (const auto& [n, p] : s.polys) out.push_back(p);
  return out;
}

// ---------------------------------------------------------------------------
// Random sampling
// ---------------------------------------------------------------------------

inline Mono random_mono(const Ctx& ctx, unsigned max_degree, std::mt19937_64& rng) {
  std::uniform_int_distribution<unsigned> ddist(0, max_degree);
  unsigned budget = ddist(rng);
  Mono m = identity_mono(*ctx);
  if (ctx->kind == RingKind::Commutative) {
    std::uniform_int_distribution<std::size_t> vdist(0, ctx->nvars() - 1);
    while (budget > 0) {
      std::size_t v = vdist(rng);
      if (ctx->weights[v] > budget) break;
      m.data[v] += 1;
      budget -= ctx->weights[v];
    }
  } else {
    std::uniform_int_distribution<std::size_t> vdist(0, ctx->nvars() - 1);
    while (budget > 0) {
      std::size_t v = vdist(rng);
      if (ctx->weights[v] > budget) break;
      m.data.push_back(static_cast<std::uint32_t>(v));
      budget -= ctx->weights[v];
    }
  }
  return m;
}

inline Scalar random_scalar(const FieldSpec& f, std::mt19937_64& rng,
                            bool nonzero = false) {
  std::uniform_int_distribution<long> num(-5, 5);
  std::uniform_int_distribution<long> den(1, 4);
  for (;;) {
    Scalar c = f.kind == FieldSpec::Kind::Rationals
                   ? Scalar::from_fraction(num(rng), den(rng), f)
                   : Scalar::from_int(num(rng), f);
    if (!nonzero || !c.is_zero()) return c;
  }
}

inline Poly random_poly(const Ctx& ctx, unsigned max_degree, unsigned max_terms,
                        std::mt19937_64& rng, bool nonzero = false) {
  std::uniform_int_distribution<unsigned> tdist(1, max_terms);
  for (;;) {
    Poly p(ctx);
    unsigned nt = tdist(rng);
    for (unsigned i = 0; i < nt; ++i)
      p.add_term(random_mono(ctx, max_degree, rng), random_scalar(ctx->field, rng));
    if (!nonzero || !p.is_zero()) return p;
  }
}

/// Random nonzero homogeneous polynomial of the given exact degree (may retry
/// over degrees when no monomial of that degree exists).
inline Poly random_homogeneous(const Ctx& ctx, unsigned degree, unsigned max_terms,
                               std::mt19937_64& rng) {
  for (;;) {
    Poly p(ctx);
    std::uniform_int_distribution<unsigned> tdist(1, max_terms);
    unsigned nt = tdist(rng);
    for (unsigned attempts = 0; attempts < 20 * nt && p.size() < nt; ++attempts) {
      Mono m = random_mono(ctx, degree, rng);
      if (dhgb::degree(m, *ctx) == degree)
        p.add_term(m, random_scalar(ctx->field, rng, true));
    }
    if (!p.is_zero() && p.is_homogeneous_nonzero()) return p;
  }
}

// ---------------------------------------------------------------------------
// Independent membership oracle: exact row reduction of the bounded-degree
// slice of the two-sided span { w * g * v : deg(w g v) <= max_degree }.
// Works in both ring kinds and does not touch the reduction engine.
// ---------------------------------------------------------------------------

using Row = std::map<Mono, Scalar>;

inline Row poly_row(const Poly& p) {
  Row r;
  for (const auto& [m, c] : p.terms()) r.emplace(m, c);
  return r;
}

inline void row_axpy(Row& dst, const Scalar& a, const Row& src) {
  for (const auto& [m, c] : src) {
    auto it = dst.find(m);
    if (it == dst.end()) {
      Scalar v = a * c;
      if (!v.is_zero()) dst.emplace(m, v);
    } else {
      it->second = it->second + a * c;
      if (it->second.is_zero()) dst.erase(it);
    }
  }
}

struct RowEchelon {
  std::map<Mono, Row> pivots;  // pivot monomial (structural max) -> reduced row

  // Reduces r against the current pivots; returns the residue.
  Row residue(Row r) const {
    while (!r.empty()) {
      Mono lead = r.rbegin()->first;  // structural order suffices for pivoting
      auto it = pivots.find(lead);
      if (it == pivots.end()) break;
      Scalar coef = r.rbegin()->second;
      row_axpy(r, -coef, it->second);
    }
    return r;
  }

  void insert(Row r) {
    r = residue(std::move(r));
    while (!r.empty()) {
      Mono lead = r.rbegin()->first;
      Scalar inv = r.rbegin()->second.inverse();
      Row unit;
      for (const auto& [m, c] : r) unit.emplace(m, inv * c);
      pivots.emplace(lead, std::move(unit));
      // Re-reduce nothing: residue() walks pivots greedily, full echelon not
      // needed for a membership test.
      return;
    }
  }
};

/// True iff f lies in the degree-bounded two-sided span of gens. Complete for
/// membership certificates whose every product w*g*v stays within max_degree.
inline bool macaulay_member(const Poly& f, const std::vector<Poly>& gens,
                            unsigned max_degree) {
  const Ctx& ctx = f.ctx();
  RowEchelon ech;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    unsigned dg = g.degree();
    if (dg > max_degree) continue;
    if (ctx->kind == RingKind::Commutative) {
      for (unsigned d = 0; d + dg <= max_degree; ++d)
        for (const auto& w : monomials_of_degree(*ctx, d))
          ech.insert(poly_row(mono_poly(ctx, w) * g));
    } else {
      for (unsigned dl = 0; dl + dg <= max_degree; ++dl)
        for (const auto& w : monomials_of_degree(*ctx, dl))
          for (unsigned dr = 0; dl + dg + dr <= max_degree; ++dr)
            for (const auto& v : monomials_of_degree(*ctx, dr))
              ech.insert(poly_row(mono_poly(ctx, w) * g * mono_poly(ctx, v)));
    }
  }
  return ech.residue(poly_row(f)).empty();
}

}  // namespace support
