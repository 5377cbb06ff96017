#include <doctest.h>

#include <random>

#include "artinqp/alexmatrix.hpp"
#include "artinqp/fox.hpp"

using namespace artinqp;

namespace {

// Free abelianization of an explicit generator list (no identifications).
Abelianization free_ab(const std::vector<std::string>& gens) {
  Abelianization ab;
  ab.generators = gens;
  for (size_t i = 0; i < gens.size(); ++i) {
    ab.var_of_gen.push_back(static_cast<int>(i));
    ab.var_names.push_back(gens[i]);
  }
  return ab;
}

// Generators (w.0, ..., w.(k-1), u~) used by the bracket relators.
Abelianization bracket_ab(int k) {
  std::vector<std::string> gens;
  for (int j = 0; j < k; ++j) gens.push_back(coset_gen("w", j));
  gens.push_back(ubar_gen("u"));
  return free_ab(gens);
}

Word bracket_relator(int ell, int k, int i) {
  int r = ell % k;
  int eps = i < k - r ? 0 : 1;
  return bracket_word("w", ubar_gen("u"), k, i, eps, ell) *
         bracket_word("w", ubar_gen("u"), k, i + 1, eps, ell).inverse();
}

Word random_word(std::mt19937& rng, const std::vector<std::string>& gens, int len) {
  std::uniform_int_distribution<size_t> gi(0, gens.size() - 1);
  std::uniform_int_distribution<int> ei(-2, 2);
  Word w;
  for (int i = 0; i < len; ++i) w.append(gens[gi(rng)], ei(rng));
  return w;
}

}  // namespace

TEST_CASE("fox_derivative: basic rules") {
  Abelianization ab = free_ab({"a", "b"});
  // d(aba^-1b^-1)/da = 1 - t_b
  Word comm = artin_relator("a", "b", 1);
  LaurentPoly expect(2);
  expect.add_term({0, 0}, Int(1));
  expect.add_term({0, 1}, Int(-1));
  CHECK(fox_derivative(comm, "a", ab) == expect);
  // d(a)/db = 0
  CHECK(fox_derivative(Word::gen("a"), "b", ab).is_zero());
  // d(a^-1)/da = -t_a^-1
  LaurentPoly inv(2);
  inv.add_term({-1, 0}, Int(-1));
  CHECK(fox_derivative(Word::gen("a", -1), "a", ab) == inv);
  CHECK_THROWS(fox_derivative(Word::gen("z"), "a", ab));
}

TEST_CASE("fundamental Fox identity on random words") {
  std::mt19937 rng(4242);
  std::vector<std::string> gens = {"a", "b", "c"};
  Abelianization ab = free_ab(gens);
  for (int rep = 0; rep < 60; ++rep) {
    Word w = random_word(rng, gens, 6);
    // sum_g dw/dg * (t_g - 1) = phi(w) - 1
    LaurentPoly sum(3);
    for (int gi = 0; gi < 3; ++gi) {
      LaurentPoly tg = LaurentPoly::variable(3, gi, Int(1));
      sum += fox_derivative(w, gens[gi], ab) * (tg - LaurentPoly::constant(3, Int(1)));
    }
    ExpVec phi(3, 0);
    for (const auto& [g, e] : w.exponent_sums()) phi[ab.var(g)] += e;
    LaurentPoly rhs = LaurentPoly::monomial(3, phi, Int(1)) - LaurentPoly::constant(3, Int(1));
    CHECK(sum == rhs);
  }
}

TEST_CASE("fox_closed_A matches the Artin relator derivative") {
  Abelianization ab = free_ab({"a", "b", "c"});
  for (int ell = 1; ell <= 6; ++ell) {
    Word rel = artin_relator("a", "b", ell);
    CHECK(fox_closed_A(ell, 3, 0, 1, FoxAWrt::A) == fox_derivative(rel, "a", ab));
    CHECK(fox_closed_A(ell, 3, 0, 1, FoxAWrt::B) == fox_derivative(rel, "b", ab));
    CHECK(fox_closed_A(ell, 3, 0, 1, FoxAWrt::Other) == fox_derivative(rel, "c", ab));
  }
}

TEST_CASE("fox_closed_A: spec values") {
  // ell=1 wrt a: 1 - t_b
  LaurentPoly e1(2);
  e1.add_term({0, 0}, Int(1));
  e1.add_term({0, 1}, Int(-1));
  CHECK(fox_closed_A(1, 2, 0, 1, FoxAWrt::A) == e1);
  // ell=2 wrt b: (t_a - 1)(1 + t_a t_b)
  LaurentPoly ta = LaurentPoly::variable(2, 0, Int(1));
  LaurentPoly tb = LaurentPoly::variable(2, 1, Int(1));
  LaurentPoly one = LaurentPoly::constant(2, Int(1));
  CHECK(fox_closed_A(2, 2, 0, 1, FoxAWrt::B) == (ta - one) * (one + ta * tb));
}

TEST_CASE("fox_closed_B equals the generic derivative on every cell") {
  for (int k = 2; k <= 5; ++k) {
    Abelianization ab = bracket_ab(k);
    for (int ell = 1; ell <= 6; ++ell)
      for (int i = 0; i < k; ++i) {
        Word rel = bracket_relator(ell, k, i);
        for (int wrt = 0; wrt <= k; ++wrt) {
          std::string g = wrt == k ? ubar_gen("u") : coset_gen("w", wrt);
          CHECK(fox_closed_B(ell, k, i, wrt) == fox_derivative(rel, g, ab));
        }
      }
  }
}

TEST_CASE("fox_closed_B: zero outside the relator support") {
  // ell=1, k=3: B^0 only involves w.0, w.1.
  CHECK(fox_closed_B(1, 3, 0, 2).is_zero());
}

TEST_CASE("alexander_matrix: small cases") {
  // Presentation with no relators: 0-row matrix.
  Presentation p;
  p.generators = {"a", "b"};
  AlexMatrix m = alexander_matrix(p, abelianize(p));
  CHECK(m.rows() == 0);
  CHECK(m.cols() == 2);

  // Single commutator: row (1 - t_b, t_a - 1).
  Presentation q;
  q.generators = {"a", "b"};
  Relator r;
  r.lhs = Word::gen("a") * Word::gen("b");
  r.rhs = Word::gen("b") * Word::gen("a");
  q.relators.push_back(r);
  AlexMatrix mq = alexander_matrix(q, abelianize(q));
  REQUIRE(mq.rows() == 1);
  LaurentPoly e00(2), e01(2);
  e00.add_term({0, 0}, Int(1));
  e00.add_term({0, 1}, Int(-1));
  e01.add_term({1, 0}, Int(1));
  e01.add_term({0, 0}, Int(-1));
  CHECK(mq.entries[0][0] == e00);
  CHECK(mq.entries[0][1] == e01);
}
