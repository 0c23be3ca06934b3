#include "dhgb/ring.hpp"

#include <algorithm>
#include <set>

namespace dhgb {

std::size_t RingContext::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < vars.size(); ++i)
    if (vars[i] == name) return i;
  throw context_error("unknown variable: " + name);
}

Ctx make_context(RingKind kind, std::vector<std::string> vars,
                 std::vector<unsigned> weights, FieldSpec field,
                 std::optional<std::size_t> homog_var) {
  if (weights.empty()) weights.assign(vars.size(), 1);
  if (vars.size() != weights.size())
    throw context_error("variable/weight count mismatch");
  std::set<std::string> seen;
  for (const auto& v : vars)
    if (!seen.insert(v).second) throw context_error("duplicate variable: " + v);
  for (unsigned w : weights)
    if (w == 0) throw context_error("weights must be strictly positive");
  if (field.kind == FieldSpec::Kind::Prime && !is_prime_u64(field.p))
    throw context_error("modulus " + std::to_string(field.p) + " is not prime");
  if (homog_var) {
    if (*homog_var >= vars.size()) throw context_error("homog_var out of range");
    if (weights[*homog_var] != 1)
      throw context_error("homogenization variable must have weight 1");
  }
  auto ctx = std::make_shared<RingContext>();
  ctx->kind = kind;
  ctx->vars = std::move(vars);
  ctx->weights = std::move(weights);
  ctx->field = field;
  ctx->homog_var = homog_var;
  return ctx;
}

Mono identity_mono(const RingContext& ctx) {
  Mono m;
  if (ctx.kind == RingKind::Commutative) m.data.assign(ctx.nvars(), 0);
  return m;
}

bool is_identity(const Mono& m, const RingContext& ctx) {
  if (ctx.kind == RingKind::Commutative)
    return std::all_of(m.data.begin(), m.data.end(),
                       [](std::uint32_t e) { return e == 0; });
  return m.data.empty();
}

unsigned degree(const Mono& m, const RingContext& ctx) {
  unsigned d = 0;
  if (ctx.kind == RingKind::Commutative) {
    for (std::size_t i = 0; i < m.data.size(); ++i)
      d += m.data[i] * ctx.weights[i];
  } else {
    for (auto l : m.data) d += ctx.weights[l];
  }
  return d;
}

Mono mono_mul(const Mono& a, const Mono& b, const RingContext& ctx) {
  Mono r;
  if (ctx.kind == RingKind::Commutative) {
    r.data.resize(ctx.nvars());
    for (std::size_t i = 0; i < r.data.size(); ++i)
      r.data[i] = a.data[i] + b.data[i];
  } else {
    r.data = a.data;
    r.data.insert(r.data.end(), b.data.begin(), b.data.end());
  }
  return r;
}

std::optional<DivWitness> divide_monomial(const Mono& u, const Mono& v,
                                          const RingContext& ctx) {
  if (ctx.kind == RingKind::Commutative) {
    Mono q;
    q.data.resize(ctx.nvars());
    for (std::size_t i = 0; i < v.data.size(); ++i) {
      if (u.data[i] > v.data[i]) return std::nullopt;
      q.data[i] = v.data[i] - u.data[i];
    }
    return DivWitness{std::move(q), identity_mono(ctx)};
  }
  if (u.data.size() > v.data.size()) return std::nullopt;
  std::size_t span = v.data.size() - u.data.size();
  for (std::size_t pos = 0; pos <= span; ++pos) {
    if (std::equal(u.data.begin(), u.data.end(), v.data.begin() + pos)) {
      DivWitness w;
      w.left.data.assign(v.data.begin(), v.data.begin() + pos);
      w.right.data.assign(v.data.begin() + pos + u.data.size(), v.data.end());
      return w;
    }
  }
  return std::nullopt;
}

OrderingSpec default_ordering(const RingContext& ctx) {
  OrderingSpec ord;
  ord.precedence.resize(ctx.nvars());
  for (std::size_t i = 0; i < ord.precedence.size(); ++i) ord.precedence[i] = i;
  return ord;
}

namespace {

// Weighted graded lex on exponent vectors, restricted to the variables listed
// in `prec` (ascending precedence; the last entry is compared first).
std::strong_ordering cmp_comm_gr(const Mono& a, const Mono& b,
                                 const RingContext& ctx,
                                 const std::vector<std::size_t>& prec) {
  unsigned da = 0, db = 0;
  for (auto i : prec) {
    da += a.data[i] * ctx.weights[i];
    db += b.data[i] * ctx.weights[i];
  }
  if (da != db) return da <=> db;
  for (auto it = prec.rbegin(); it != prec.rend(); ++it) {
    if (a.data[*it] != b.data[*it]) return a.data[*it] <=> b.data[*it];
  }
  return std::strong_ordering::equal;
}

std::strong_ordering cmp_word_gr(const Mono& a, const Mono& b,
                                 const RingContext& ctx,
                                 const std::vector<std::size_t>& prec) {
  unsigned da = degree(a, ctx), db = degree(b, ctx);
  if (da != db) return da <=> db;
  std::vector<std::size_t> rank(ctx.nvars());
  for (std::size_t r = 0; r < prec.size(); ++r) rank[prec[r]] = r;
  std::size_t n = std::min(a.data.size(), b.data.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.data[i] != b.data[i]) return rank[a.data[i]] <=> rank[b.data[i]];
  }
  // Positive weights: equal-degree words can only differ at a common position.
  return a.data.size() <=> b.data.size();
}

}  // namespace

std::strong_ordering compare(const Mono& a, const Mono& b,
                             const RingContext& ctx, const OrderingSpec& ord) {
  if (a.data == b.data) return std::strong_ordering::equal;
  switch (ord.ext) {
    case OrdExtension::None:
      return ctx.kind == RingKind::Commutative
                 ? cmp_comm_gr(a, b, ctx, ord.precedence)
                 : cmp_word_gr(a, b, ctx, ord.precedence);
    case OrdExtension::CentralT: {
      if (ctx.kind != RingKind::Commutative || !ctx.homog_var)
        throw context_error("central-t ordering needs a commutative context with homog_var");
      std::size_t h = *ctx.homog_var;
      std::vector<std::size_t> base;
      for (auto i : ord.precedence)
        if (i != h) base.push_back(i);
      // Block order: B-part major under the base graded lex, t-exponent minor.
      auto c = cmp_comm_gr(a, b, ctx, base);
      if (c != std::strong_ordering::equal) return c;
      return a.data[h] <=> b.data[h];
    }
    case OrdExtension::NoncentralT:
      if (ctx.kind != RingKind::Noncommutative || !ctx.homog_var)
        throw context_error("noncentral-T ordering needs a free-algebra context with homog_var");
      return cmp_word_gr(a, b, ctx, ord.precedence);
  }
  throw domain_error("unreachable ordering extension");
}

std::string mono_str(const Mono& m, const RingContext& ctx) {
  if (is_identity(m, ctx)) return "1";
  std::string out;
  auto emit = [&](const std::string& v, std::uint32_t e, const char* sep) {
    if (!out.empty()) out += sep;
    out += v;
    if (e > 1) out += "^" + std::to_string(e);
  };
  if (ctx.kind == RingKind::Commutative) {
    // Homogenization power first (the t^r w shape), then the remaining
    // variables in descending declaration order.
    if (ctx.homog_var && m.data[*ctx.homog_var] > 0)
      emit(ctx.vars[*ctx.homog_var], m.data[*ctx.homog_var], " ");
    for (std::size_t k = ctx.nvars(); k-- > 0;) {
      if (ctx.homog_var && k == *ctx.homog_var) continue;
      if (m.data[k] > 0) emit(ctx.vars[k], m.data[k], " ");
    }
  } else {
    std::size_t i = 0;
    while (i < m.data.size()) {
      std::size_t j = i;
      while (j < m.data.size() && m.data[j] == m.data[i]) ++j;
      emit(ctx.vars[m.data[i]], static_cast<std::uint32_t>(j - i), "*");
      i = j;
    }
  }
  return out;
}

}  // namespace dhgb
