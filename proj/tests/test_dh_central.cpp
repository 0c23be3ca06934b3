#include <doctest.h>

#include "support.hpp"

using namespace dhgb;
using support::P;

namespace {

const std::string kXYT = "vars x y t\norder deglex x y t\nhomvar t";
const std::string kXY = "vars x y\norder deglex x y";

struct Fixture {
  Session base = support::sess(kXY);
  Session full = support::sess(kXYT);
  CentralDhContext dh = treat_variable_as_t(full.ctx, full.ord, 2);

  Poly ext(const std::string& src) { return into_extended(dh, P(kXYT, src)); }
  Poly b(const std::string& src) { return P(kXY, src); }
};

std::vector<std::string> strs(const GroebnerBasis& gb) {
  std::vector<std::string> out;
  for (const auto& g : gb.elems) out.push_back(g.str(gb.ord));
  return out;
}

}  // namespace

TEST_CASE("homogenize formula") {
  Fixture fx;
  CHECK(homogenize(fx.dh, fx.b("y^3 - x - y")) == fx.ext("y^3 - t^2 x - t^2 y"));
  CHECK(homogenize(fx.dh, fx.b("x + 2 y")) == fx.ext("x + 2 y"));
  CHECK(homogenize(fx.dh, fx.b("y^2 + 1")) == fx.ext("y^2 + t^2"));
  CHECK_THROWS_AS(homogenize(fx.dh, Poly(fx.base.ctx)), zero_input_error);
}

TEST_CASE("dehomogenize is evaluation at t = 1") {
  Fixture fx;
  CHECK(dehomogenize(fx.dh, fx.ext("t^2 x + 2 t^2 y")) == fx.b("x + 2 y"));
  CHECK(dehomogenize(fx.dh, fx.ext("t^5")) == fx.b("1"));
  Poly f = fx.b("y^3 - x - y");
  CHECK(dehomogenize(fx.dh, homogenize(fx.dh, f)) == f);
}

TEST_CASE("dehomogenize is a ring homomorphism") {
  std::mt19937_64 rng(83);
  Fixture fx;
  for (int i = 0; i < 400; ++i) {
    Poly F = support::random_poly(fx.dh.ext, 4, 4, rng);
    Poly G = support::random_poly(fx.dh.ext, 4, 4, rng);
    CHECK(dehomogenize(fx.dh, F + G) == dehomogenize(fx.dh, F) + dehomogenize(fx.dh, G));
    CHECK(dehomogenize(fx.dh, F * G) == dehomogenize(fx.dh, F) * dehomogenize(fx.dh, G));
  }
}

TEST_CASE("Lemma 2.1-style degree drop: t^(p-q) (F_*)* = F") {
  std::mt19937_64 rng(89);
  Fixture fx;
  int tested = 0;
  for (int i = 0; tested < 300 && i < 3000; ++i) {
    Poly F = support::random_homogeneous(fx.dh.ext, 1 + i % 5, 4, rng);
    Poly f = dehomogenize(fx.dh, F);
    if (f.is_zero()) continue;  // possible only via cancellation
    ++tested;
    unsigned p = F.degree(), q = f.degree();
    REQUIRE(q <= p);
    Poly back = homogenize(fx.dh, f);
    Mono tpow = identity_mono(*fx.dh.ext);
    tpow.data[2] = p - q;
    CHECK(mono_poly(fx.dh.ext, tpow) * back == F);
  }
  CHECK(tested == 300);
}

TEST_CASE("leading monomial transfer under (de)homogenization") {
  std::mt19937_64 rng(97);
  Fixture fx;
  for (int i = 0; i < 500; ++i) {
    // LM(f*) = LM(f)
    Poly f = support::random_poly(fx.base.ctx, 5, 5, rng, true);
    Mono lm_base = f.leading(fx.dh.ord_base).lm;
    Mono lm_star = homogenize(fx.dh, f).leading(fx.dh.ord_ext).lm;
    Mono lifted = lm_base;
    lifted.data.push_back(0);
    CHECK(lm_star == lifted);

    // LM(F_*) = LM(F)_* for homogeneous F
    Poly F = support::random_homogeneous(fx.dh.ext, 1 + i % 5, 4, rng);
    Poly Fd = dehomogenize(fx.dh, F);
    if (Fd.is_zero()) continue;
    Mono expect = F.leading(fx.dh.ord_ext).lm;
    expect.data[2] = 0;
    Mono got = Fd.leading(fx.dh.ord_base).lm;
    got.data.push_back(0);
    CHECK(got == expect);
  }
}

TEST_CASE("element dh-closedness: criterion and definition agree") {
  Fixture fx;
  CHECK(is_dh_closed_element(fx.dh, fx.ext("x^2 + 4 t^2")));
  CHECK_FALSE(is_dh_closed_element(fx.dh, fx.ext("t^2 x + 2 t^2 y")));
  CHECK_FALSE(is_dh_closed_element(fx.dh, fx.ext("t^3")));
  CHECK_THROWS_AS(is_dh_closed_element(fx.dh, fx.ext("y^2 + 1")), precondition_error);

  std::mt19937_64 rng(101);
  for (int i = 0; i < 1000; ++i) {
    Poly F = support::random_homogeneous(fx.dh.ext, 1 + i % 4, 4, rng);
    bool by_def = dh_closed_by_definition(fx.dh, F);
    CHECK(is_dh_closed_element(fx.dh, F) == by_def);
    // the "no factored t" reading: F != t * H exactly when some term is t-free
    bool t_free_term = false;
    for (const auto& [m, c] : F.terms())
      if (m.data[2] == 0) t_free_term = true;
    CHECK(by_def == t_free_term);
  }
}

TEST_CASE("basis transfer worked examples") {
  Fixture fx;
  GroebnerBasis gbI = buchberger({fx.b("y^2 + 1"), fx.b("y^3 - x - y")}, fx.base.ord);
  auto up = homogenize_basis(fx.dh, gbI);
  CHECK(strs(up) == std::vector<std::string>{"y + 1/2 x", "x^2 + 4 t^2"});
  CHECK(verify_groebner(up.elems, fx.dh.ord_ext).ok);

  GroebnerBasis star;
  star.ord = fx.dh.ord_ext;
  star.elems = {fx.ext("y^2 + t^2"), fx.ext("t^2 y + 1/2 t^2 x"),
                fx.ext("t^2 x^2 + 4 t^4")};
  canonicalize_elems(star.elems, star.ord);
  auto down = dehomogenize_basis(fx.dh, star);
  CHECK(verify_groebner(down.elems, fx.dh.ord_base).ok);
  auto reduced = interreduce(down);
  CHECK(strs(reduced) == std::vector<std::string>{"y + 1/2 x", "x^2 + 4"});

  GroebnerBasis unit;
  unit.ord = fx.dh.ord_ext;
  unit.elems = {fx.ext("t")};
  CHECK(strs(dehomogenize_basis(fx.dh, unit)) == std::vector<std::string>{"1"});

  GroebnerBasis empty;
  empty.ord = fx.base.ord;
  CHECK(homogenize_basis(fx.dh, empty).empty());
}

TEST_CASE("homogenize_basis rejects non-bases") {
  Fixture fx;
  GroebnerBasis notgb;
  notgb.ord = fx.base.ord;
  notgb.elems = {fx.b("y^2 + 1"), fx.b("y^3 - x - y")};
  CHECK_THROWS_AS(homogenize_basis(fx.dh, notgb), precondition_error);
}

TEST_CASE("ideal dh-closedness verdicts") {
  Fixture fx;
  CHECK(is_dh_closed_ideal(fx.dh, {fx.ext("y + 1/2 x"), fx.ext("x^2 + 4 t^2")}).closed);

  auto v = is_dh_closed_ideal(
      fx.dh, {fx.ext("y^3 - t^2 x - t^2 y"), fx.ext("y^2 + t^2")});
  CHECK_FALSE(v.closed);
  REQUIRE(v.witness);
  CHECK(mono_str(*v.witness, *fx.dh.ext) == "t^2 y");

  auto tv = is_dh_closed_ideal(fx.dh, {fx.ext("t")});
  CHECK_FALSE(tv.closed);
}

TEST_CASE("round trips on minimal bases") {
  Fixture fx;
  GroebnerBasis gbI = buchberger({fx.b("y^2 + 1"), fx.b("y^3 - x - y")}, fx.base.ord);
  auto up = homogenize_basis(fx.dh, gbI);
  // down-then-minimalize recovers the base basis
  auto back = interreduce(dehomogenize_basis(fx.dh, up));
  CHECK(strs(back) == strs(gbI));
  // up-again is the identity on the dh-closed side
  CHECK(strs(homogenize_basis(fx.dh, back)) == strs(up));
}

TEST_CASE("torsion witness for the non-dh-closed ideal") {
  Fixture fx;
  auto v = is_dh_closed_ideal(
      fx.dh, {fx.ext("y^3 - t^2 x - t^2 y"), fx.ext("y^2 + t^2")});
  REQUIRE_FALSE(v.closed);
  Poly F = fx.ext("t x + 2 t y");
  Poly tF = fx.ext("t^2 x + 2 t^2 y");
  CHECK(reduces_to_zero(tF, v.reduced.elems, fx.dh.ord_ext));
  CHECK_FALSE(reduces_to_zero(F, v.reduced.elems, fx.dh.ord_ext));
}

TEST_CASE("pipeline worked examples") {
  Fixture fx;
  auto rep = pipeline_central(fx.dh, {fx.b("y^3 - x - y"), fx.b("y^2 + 1")});
  CHECK(strs(rep.gb_I) == std::vector<std::string>{"y + 1/2 x", "x^2 + 4"});
  CHECK(strs(rep.gb_Istar) == std::vector<std::string>{"y + 1/2 x", "x^2 + 4 t^2"});
  CHECK(strs(rep.gb_Sstar) == std::vector<std::string>{"t^2 y + 1/2 t^2 x",
                                                       "t^2 x^2 + 4 t^4",
                                                       "y^2 + t^2"});
  CHECK_FALSE(rep.ideals_equal);
  // the strictness witness: degree-1 element of <I*> not in <S*>
  CHECK_FALSE(reduces_to_zero(fx.ext("y + 1/2 x"), rep.gb_Sstar.elems, fx.dh.ord_ext));

  auto triv = pipeline_central(fx.dh, {fx.b("x")});
  CHECK(strs(triv.gb_Sstar) == std::vector<std::string>{"x"});
  CHECK(strs(triv.gb_I) == std::vector<std::string>{"x"});
  CHECK(strs(triv.gb_Istar) == std::vector<std::string>{"x"});
  CHECK(triv.ideals_equal);

  auto hom = pipeline_central(fx.dh, {fx.b("x^2 + 4")});
  CHECK(strs(hom.gb_Sstar) == strs(hom.gb_Istar));
  CHECK(hom.ideals_equal);
}

TEST_CASE("treat_variable_as_t reindexing") {
  Session two = support::sess(kXY);
  auto dh = treat_variable_as_t(two.ctx, two.ord, 0);  // x as homog var
  CHECK(dh.base->vars == std::vector<std::string>{"y"});
  CHECK(dh.ext->vars == std::vector<std::string>{"y", "x"});
  Poly f = into_extended(dh, P(kXY, "x^2 + x y + y^2"));
  CHECK(f.is_homogeneous_nonzero());
  CHECK(dehomogenize(dh, f) ==
        support::P("vars y\norder deglex y", "y^2 + y + 1"));

  Session w = support::sess("vars x y\nweights 2 1\norder deglex x y");
  CHECK_THROWS_AS(treat_variable_as_t(w.ctx, w.ord, 0), precondition_error);
}

TEST_CASE("random transfer equivalences") {
  std::mt19937_64 rng(103);
  Fixture fx;
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Poly> F;
    for (int k = 0; k < 2 + trial % 2; ++k)
      F.push_back(support::random_poly(fx.base.ctx, 3, 3, rng, true));
    auto gb = buchberger(F, fx.base.ord);
    if (gb.empty()) continue;
    auto up = homogenize_basis(fx.dh, gb);
    CHECK(verify_groebner(up.elems, fx.dh.ord_ext).ok);
    // sampled members of I homogenize into <I*> after clearing t powers
    for (int k = 0; k < 3; ++k) {
      Poly combo = F[0] * support::random_poly(fx.base.ctx, 2, 2, rng) +
                   F.back() * support::random_poly(fx.base.ctx, 2, 2, rng);
      if (combo.is_zero()) continue;
      CHECK(reduces_to_zero(homogenize(fx.dh, combo), up.elems, fx.dh.ord_ext));
    }
  }
}
