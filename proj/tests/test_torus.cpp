#include <doctest.h>

#include "artinqp/torus.hpp"

using namespace artinqp;

namespace {

TorsionTorus from_lines(int ambient, std::initializer_list<const char*> lines) {
  TorsionTorus t(ambient);
  for (const char* l : lines) {
    TorusConstraint c = parse_torus_constraint(l, ambient);
    t.add_constraint(c.expo, c.torsion);
  }
  return t;
}

bool satisfies(const TorusParametrization& p, const TorsionTorus& t) {
  // Substitute the parametrization into each binomial x^a - z.
  for (const auto& c : t.constraints()) {
    LaurentPoly mono = LaurentPoly::monomial(t.ambient(), c.expo, Int(1));
    CPoly img = substitute_laurent(mono, p);
    CPoly expect = CPoly::constant(p.params, Cyclo::of_root(c.torsion));
    if (!(img == expect)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("canonicalize: consistency and dimension") {
  // {t = 1, t = -1} is empty.
  TorsionTorus t1 = from_lines(1, {"t0 = 1", "t0 = -1"});
  CHECK(!torus_canonicalize(t1).nonempty);

  // No constraints: full torus of dim 3.
  TorusCanonical c2 = torus_canonicalize(TorsionTorus::full(3));
  CHECK(c2.nonempty);
  CHECK(c2.dimension == 3);

  // {t0 t1 = -1, t2 = 1}: dim 1.
  TorsionTorus t3 = from_lines(3, {"t0*t1 = -1", "t2 = 1"});
  TorusCanonical c3 = torus_canonicalize(t3);
  CHECK(c3.nonempty);
  CHECK(c3.dimension == 1);
}

TEST_CASE("canonicalize is idempotent") {
  std::vector<TorsionTorus> ts = {
      from_lines(3, {"t0*t1 = -1", "t2 = 1"}),
      from_lines(3, {"t0^2*t1 = zeta(3,1)", "t1 = zeta(3,2)", "t0*t1^2 = 1"}),
      from_lines(2, {"t0^-1*t1 = zeta(4,1)"}),
  };
  for (const auto& t : ts) {
    TorusCanonical c1 = torus_canonicalize(t);
    if (!c1.nonempty) continue;
    TorusCanonical c2 = torus_canonicalize(c1.canonical);
    CHECK(c1.canonical.constraints() == c2.canonical.constraints());
    CHECK(c1.dimension == c2.dimension);
  }
}

TEST_CASE("torsion bookkeeping through row reduction") {
  // t0^2 = zeta(3,1) together with t0^3 = 1 forces t0 = zeta(3,2):
  // indeed (zeta(3,2))^2 = zeta(3,1) and cube is 1.
  TorsionTorus t = from_lines(1, {"t0^2 = zeta(3,1)", "t0^3 = 1"});
  TorusCanonical c = torus_canonicalize(t);
  REQUIRE(c.nonempty);
  CHECK(c.dimension == 0);
  REQUIRE(c.canonical.constraints().size() == 1);
  CHECK(c.canonical.constraints()[0].expo == ExpVec{1});
  CHECK(c.canonical.constraints()[0].torsion == RootOfUnity::make(3, 2));

  // Inconsistent torsion: t0^2 = -1 and t0^2 = 1.
  TorsionTorus bad = from_lines(1, {"t0^2 = -1", "t0^2 = 1"});
  CHECK(!torus_canonicalize(bad).nonempty);
}

TEST_CASE("parametrize: spec tori and round trips") {
  // T1 = {t0 t1 = -1, t2 = 1} -> t0 = -s^-1, t1 = s, t2 = 1.
  TorsionTorus t1 = from_lines(3, {"t0*t1 = -1", "t2 = 1"});
  TorusParametrization p = torus_parametrize(t1);
  CHECK(p.params == 1);
  CHECK(satisfies(p, t1));
  CHECK(p.coeff[2].is_one());
  CHECK(p.expo[2] == ExpVec{0});

  // Full torus in 2 variables: identity parametrization.
  TorusParametrization pf = torus_parametrize(TorsionTorus::full(2));
  CHECK(pf.params == 2);
  CHECK(satisfies(pf, TorsionTorus::full(2)));

  // {t0 = zeta_3}: zero-dimensional.
  TorsionTorus tz = from_lines(1, {"t0 = zeta(3,1)"});
  TorusParametrization pz = torus_parametrize(tz);
  CHECK(pz.params == 0);
  CHECK(satisfies(pz, tz));

  CHECK_THROWS(torus_parametrize(from_lines(1, {"t0 = 1", "t0 = -1"})));
}

TEST_CASE("parametrize round trip on assorted torsion systems") {
  std::vector<TorsionTorus> ts = {
      from_lines(4, {"t0*t1*t2*t3 = 1", "t0*t1 = -1"}),
      from_lines(3, {"t0^2*t1 = zeta(3,1)"}),
      from_lines(3, {"t0*t1 = zeta(6,1)", "t1*t2 = -1"}),
      from_lines(2, {"t0^2 = 1"}),
      from_lines(5, {"t0*t1*t2 = 1", "t2*t3 = 1", "t4 = -1"}),
  };
  for (const auto& t : ts) {
    TorusCanonical c = torus_canonicalize(t);
    REQUIRE(c.nonempty);
    TorusParametrization p = torus_parametrize(t);
    CHECK(p.params == c.dimension);
    CHECK(satisfies(p, t));
  }
}

TEST_CASE("intersection") {
  TorsionTorus t1 = from_lines(3, {"t0*t1 = -1", "t2 = 1"});
  TorsionTorus t3 = from_lines(3, {"t0*t1 = -1", "t1*t2^-1 = 1"});
  // T1 cap T3 = single torsion point (-1, 1, 1).
  TorsionTorus cap = torus_intersect(t1, t3);
  TorusCanonical c = torus_canonicalize(cap);
  REQUIRE(c.nonempty);
  CHECK(c.dimension == 0);
  TorsionTorus point = from_lines(3, {"t0 = -1", "t1 = 1", "t2 = 1"});
  CHECK(cap == point);

  // t cap t = t.
  CHECK(torus_intersect(t1, t1) == t1);

  // T1 forces t2 = 1, so adding t2 = -1 empties it.
  TorsionTorus other = from_lines(3, {"t2 = -1"});
  CHECK(!torus_canonicalize(torus_intersect(t1, other)).nonempty);

  CHECK_THROWS(torus_intersect(t1, TorsionTorus::full(2)));
}

TEST_CASE("intersection dimension is monotone") {
  TorsionTorus a = from_lines(3, {"t0*t1 = -1"});
  TorsionTorus b = from_lines(3, {"t1*t2 = 1"});
  int da = torus_canonicalize(a).dimension;
  int db = torus_canonicalize(b).dimension;
  int dc = torus_canonicalize(torus_intersect(a, b)).dimension;
  CHECK(dc <= std::min(da, db));
}

TEST_CASE("solve_pl_constraint") {
  ExpVec a = {1, 1};
  auto l2 = solve_pl_constraint(2, a, 2);
  REQUIRE(l2.size() == 1);
  CHECK(l2[0].constraints()[0].torsion == RootOfUnity::minus_one());
  auto l3 = solve_pl_constraint(3, a, 2);
  REQUIRE(l3.size() == 2);
  CHECK(l3[0].constraints()[0].torsion == RootOfUnity::make(3, 1));
  CHECK(l3[1].constraints()[0].torsion == RootOfUnity::make(3, 2));
  CHECK(solve_pl_constraint(1, a, 2).empty());
}

TEST_CASE("trivial point detection") {
  TorsionTorus t = from_lines(2, {"t0 = 1", "t1 = 1"});
  TorusCanonical c = torus_canonicalize(t);
  CHECK(c.is_trivial_point);
  TorsionTorus nt = from_lines(2, {"t0 = -1", "t1 = 1"});
  CHECK(!torus_canonicalize(nt).is_trivial_point);
  CHECK(!torus_canonicalize(TorsionTorus::full(2)).is_trivial_point);
}

TEST_CASE("constraint grammar round trip") {
  std::vector<std::string> lines = {"t0*t1 = zeta(2,1)", "t0^-1*t2^3 = zeta(6,5)",
                                    "t1 = 1"};
  for (const auto& l : lines) {
    TorusConstraint c = parse_torus_constraint(l, 3);
    TorusConstraint c2 = parse_torus_constraint(render_torus_constraint(c), 3);
    CHECK(c == c2);
  }
  CHECK(render_torus_constraint(parse_torus_constraint("t0 = zeta(2,1)", 1)) ==
        "t0 = -1");
  CHECK_THROWS(parse_torus_constraint("t5 = 1", 2));
  CHECK_THROWS(parse_torus_constraint("t0", 1));
  CHECK_THROWS(parse_torus_constraint("t0 = zeta(2)", 1));
}
