#include "dhgb/poly.hpp"

#include <algorithm>

namespace dhgb {

Poly::Poly(Ctx ctx, const Mono& m, const Scalar& c) : ctx_(std::move(ctx)) {
  add_term(m, c);
}

void Poly::check_ctx(const Poly& o) const {
  if (!ctx_ || !o.ctx_ || !ctx_->same_shape(*o.ctx_))
    throw context_error("polynomial context mismatch");
}

void Poly::add_term(const Mono& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly Poly::operator+(const Poly& o) const {
  check_ctx(o);
  Poly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
  Poly r(ctx_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  check_ctx(o);
  Poly r(ctx_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_)
      r.add_term(mono_mul(ma, mb, *ctx_), ca * cb);
  return r;
}

Poly Poly::scaled(const Scalar& c) const {
  Poly r(ctx_);
  if (c.is_zero()) return r;
  for (const auto& [m, co] : terms_) r.terms_.emplace(m, co * c);
  return r;
}

bool Poly::operator==(const Poly& o) const { return terms_ == o.terms_; }

Poly::Leading Poly::leading(const OrderingSpec& ord) const {
  if (terms_.empty()) throw zero_input_error("leading data of the zero polynomial");
  auto best = terms_.begin();
  for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
    if (compare(best->first, it->first, *ctx_, ord) < 0) best = it;
  return {best->first, best->second};
}

Poly Poly::leading_homogeneous() const {
  unsigned p = degree();
  Poly r(ctx_);
  for (const auto& [m, c] : terms_)
    if (dhgb::degree(m, *ctx_) == p) r.terms_.emplace(m, c);
  return r;
}

Poly::Homogeneity Poly::homogeneity() const {
  if (terms_.empty()) return {Homogeneity::Kind::Zero};
  unsigned d = dhgb::degree(terms_.begin()->first, *ctx_);
  for (const auto& [m, c] : terms_)
    if (dhgb::degree(m, *ctx_) != d) return {Homogeneity::Kind::No};
  return {Homogeneity::Kind::Homogeneous, d};
}

bool Poly::is_homogeneous_nonzero() const {
  return homogeneity().kind == Homogeneity::Kind::Homogeneous;
}

unsigned Poly::degree() const {
  if (terms_.empty()) throw zero_input_error("degree of the zero polynomial");
  unsigned d = 0;
  for (const auto& [m, c] : terms_)
    d = std::max(d, dhgb::degree(m, *ctx_));
  return d;
}

Poly Poly::monic(const OrderingSpec& ord) const {
  return scaled(leading(ord).lc.inverse());
}

std::vector<std::pair<Mono, Scalar>> Poly::sorted_terms(const OrderingSpec& ord) const {
  std::vector<std::pair<Mono, Scalar>> ts(terms_.begin(), terms_.end());
  std::sort(ts.begin(), ts.end(), [&](const auto& a, const auto& b) {
    return compare(a.first, b.first, *ctx_, ord) > 0;
  });
  return ts;
}

std::string Poly::str(const OrderingSpec& ord) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : sorted_terms(ord)) {
    Scalar a = c;
    bool neg = false;
    if (ctx_->field.kind == FieldSpec::Kind::Rationals && a.str()[0] == '-') {
      neg = true;
      a = -a;
    }
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    bool ident = is_identity(m, *ctx_);
    if (!a.is_one() || ident) {
      out += a.str();
      if (!ident) out += " ";
    }
    if (!ident) out += mono_str(m, *ctx_);
  }
  return out;
}

Poly mono_poly(const Ctx& ctx, const Mono& m) {
  return Poly(ctx, m, Scalar::one(ctx->field));
}

}  // namespace dhgb
