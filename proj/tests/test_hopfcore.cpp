#include <doctest.h>

#include "support.hpp"
#include "sweedler/corpus.hpp"
#include "sweedler/linalg.hpp"
#include "sweedler/reconstruct.hpp"

using namespace sweedler;
using namespace testing;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F2 = FieldSpec::prime(2);
const FieldSpec F3 = FieldSpec::prime(3);

}  // namespace

TEST_CASE("validate_algebra") {
  const auto m2 = matrix_algebra(ground_algebra(F2), 2);
  CHECK(m2.dim == 4);
  CHECK(validate_algebra(m2).ok());
  CHECK(validate_algebra(corpus::rational_c2().bialg.alg).ok());

  // e12 * e12 = e12 instead of 0
  auto broken = m2;
  broken.mult.set(1, 1 * 4 + 1, Scalar(F2, 1));
  const auto r = validate_algebra(broken);
  REQUIRE(r.failed("associativity"));
  CHECK_FALSE(r.failed("left unit"));
  CHECK_FALSE(r.failed("right unit"));
  REQUIRE(r.failures.size() == 1);
  CHECK(r.failures[0].witness.size() == 3);
}

TEST_CASE("validate_coalgebra reports the differing component") {
  CHECK(validate_coalgebra(dual_coalgebra(corpus::f2_dual_numbers())).ok());
  // dual of the commutative algebra 1, b, c with bb = 0, bc = c, cc = b, where (cc)c != c(cc)
  LinMap comult(F2, 9, 3);
  comult.set(0, 0, Scalar(F2, 1));
  for (std::size_t r : {1, 3, 8}) comult.set(r, 1, Scalar(F2, 1));
  for (std::size_t r : {2, 5, 6, 7}) comult.set(r, 2, Scalar(F2, 1));
  const auto c = make_coalgebra(LinMap::from_ints(F2, 1, 3, {1, 0, 0}), comult);
  const auto r = validate_coalgebra(c);
  REQUIRE(r.failures.size() == 1);
  CHECK(r.failures[0].axiom == "coassociativity");
  CHECK(r.failures[0].component.size() == 3);
  CHECK(validate_algebra(dual_algebra(c)).failed("associativity"));
}

TEST_CASE("validate bialgebra and hopf") {
  CHECK(validate_hopf(corpus::rational_c2()).ok());
  CHECK(validate_bialgebra(corpus::idempotent_monoid()).ok());
  // every candidate antipode of F2{1,e} fails
  const auto b = corpus::idempotent_monoid();
  for (const auto& m : all_matrices(2, 2)) {
    LinMap s(F2, 2, 2);
    for (std::size_t r = 0; r < 2; ++r)
      for (std::size_t c = 0; c < 2; ++c) s.set(r, c, Scalar(F2, m[r][c]));
    REQUIRE_FALSE(validate_hopf(make_hopf(b, s)).ok());
  }
  for (const auto& h : corpus::hopf_algebras()) {
    INFO(h.name);
    CHECK(validate_hopf(h.value).ok());
  }
  CHECK(validate_hopf(corpus::f2_exterior(1).hopf).ok());
}

TEST_CASE("matrix_algebra") {
  const auto k = ground_algebra(Q);
  CHECK(same_structure(matrix_algebra(k, 1), k));

  const auto m2 = matrix_algebra(ground_algebra(F2), 2);
  // indices: E11 = 0, E12 = 1, E21 = 2, E22 = 3
  const auto product = [&](std::size_t i, std::size_t j) { return m2.mult.column_map(i * 4 + j); };
  CHECK(product(0, 1) == LinMap::basis_vector(F2, 4, 1));
  CHECK(product(1, 0).is_zero());
  CHECK(m2.unit == LinMap::from_ints(F2, 4, 1, {1, 0, 0, 1}));
  CHECK(m2.basis[1] == "E12");

  const auto m2y = matrix_algebra(corpus::f2_dual_numbers(), 2);
  CHECK(m2y.dim == 8);
  CHECK(validate_algebra(m2y).ok());
  CHECK_THROWS(matrix_algebra(k, 0));
}

TEST_CASE("group_algebra") {
  const auto c2 = corpus::rational_c2();
  CHECK(c2.bialg.dim() == 2);
  CHECK(c2.antipode.is_identity());
  CHECK(grouplikes(dual_coalgebra(dual_algebra(c2.bialg.coalg)),
                   GrouplikeCandidates{{0, 1}, {Scalar(Q, 0), Scalar(Q, 1)}})
            .size() == 2);

  const auto c3 = corpus::f2_c3();
  CHECK(c3.antipode == LinMap::from_ints(F2, 3, 3, {1, 0, 0, 0, 0, 1, 0, 1, 0}));

  const auto trivial = group_algebra(Q, {{0}});
  CHECK(same_structure(trivial.bialg.alg, ground_algebra(Q)));
  CHECK(same_structure(trivial.bialg.coalg, ground_coalgebra(Q)));
  CHECK_THROWS_AS(group_algebra(Q, {{0, 1}, {1, 1}}), NotAGroup);
}

TEST_CASE("dual_coalgebra and dual_algebra") {
  // characters g -> +1 and g -> -1 of C2, in the dual basis g0*, g1*
  const auto d = dual_coalgebra(corpus::rational_c2().bialg.alg);
  const auto found = grouplikes(d, GrouplikeCandidates{{0, 1}, {Scalar(Q, -1), Scalar(Q, 0), Scalar(Q, 1)}});
  REQUIRE(found.size() == 2);
  CHECK(found[0] == LinMap::from_ints(Q, 2, 1, {1, -1}));
  CHECK(found[1] == LinMap::from_ints(Q, 2, 1, {1, 1}));

  CHECK(same_structure(dual_coalgebra(ground_algebra(Q)), ground_coalgebra(Q)));

  // M2(k)* is the comatrix coalgebra
  CHECK(same_structure(dual_coalgebra(matrix_algebra(ground_algebra(F3), 2)), coend_coalgebra(2, F3)));
  CHECK(dual_coalgebra(corpus::f2_involution()).basis == std::vector<std::string>{"1*", "g*"});
}

TEST_CASE("opposite and coopposite") {
  const auto c2 = corpus::rational_c2().bialg.alg;
  CHECK(same_structure(opposite(c2), c2));
  const auto m2 = corpus::m2_f2();
  const auto op = opposite(m2);
  CHECK(op.mult.column_map(1 * 4 + 0) == LinMap::basis_vector(F2, 4, 1));  // E12 . E11 = E12
  CHECK(same_structure(dual_coalgebra(op), coopposite(dual_coalgebra(m2))));
}

TEST_CASE("convolution_algebra") {
  const auto b = corpus::f2_dual_numbers();
  CHECK(same_structure(convolution_algebra(ground_coalgebra(F2), b), b));
  const auto c = dual_coalgebra(corpus::m2_f2());
  CHECK(same_structure(convolution_algebra(c, ground_algebra(F2)), dual_algebra(c)));
  // [coend(2), k] has the matrix-unit structure constants
  CHECK(same_structure(convolution_algebra(coend_coalgebra(2, F2), ground_algebra(F2)), corpus::m2_f2()));
  for (const auto& h : corpus::bialgebras()) CHECK(validate_algebra(convolution_algebra(h.value.coalg, h.value.alg)).ok());
}

TEST_CASE("fusion operators") {
  const auto ops = fusion_operators(ground_hopf(Q).bialg);
  CHECK(ops.h.is_identity());
  CHECK(ops.h_prime.is_identity());
  CHECK(ops.h_bar.is_identity());
  CHECK(ops.h_bar_prime.is_identity());
  CHECK(is_invertible(fusion_operators(corpus::rational_c2().bialg).h));
  CHECK(rank(fusion_operators(corpus::idempotent_monoid()).h) < 4);
}

TEST_CASE("find_antipode") {
  const auto c2 = find_antipode(corpus::rational_c2().bialg);
  REQUIRE(c2);
  CHECK(c2->antipode.is_identity());

  const auto h4 = corpus::sweedler_h4();
  const auto s = find_antipode(h4.bialg);
  REQUIRE(s);
  CHECK(s->antipode == h4.antipode);
  const auto s2 = compose(s->antipode, s->antipode);
  CHECK_FALSE(s2.is_identity());
  CHECK(s2.column_map(2) == LinMap::basis_vector(F3, 4, 2).scaled(Scalar(F3, -1)));  // s^2(x) = -x

  CHECK_FALSE(find_antipode(corpus::idempotent_monoid()));
}

TEST_CASE("find_opantipode") {
  for (const auto& h : corpus::hopf_algebras()) {
    if (!is_cocommutative(h.value.bialg.coalg)) continue;
    const auto op = find_opantipode(h.value.bialg);
    REQUIRE(op);
    CHECK(*op == h.value.antipode);
  }
  const auto h4 = corpus::sweedler_h4();
  const auto op = find_opantipode(h4.bialg);
  REQUIRE(op);
  CHECK(*op == invert(h4.antipode));
  CHECK_FALSE(find_opantipode(corpus::idempotent_monoid()));
}

TEST_CASE("grouplikes") {
  CHECK(grouplikes(dual_coalgebra(corpus::f3_c2().bialg.alg)).size() == 2);
  CHECK(grouplikes(ground_coalgebra(F2)).size() == 1);

  // comatrix 2 x 2 over F2: check every nonzero vector directly
  std::size_t brute = 0;
  for (int code = 1; code < 16; ++code) {
    long x[2][2] = {{code >> 3 & 1, code >> 2 & 1}, {code >> 1 & 1, code & 1}};
    bool ok = (x[0][0] + x[1][1]) % 2 == 1;
    for (int i = 0; i < 2 && ok; ++i)
      for (int k = 0; k < 2 && ok; ++k)
        for (int l = 0; l < 2 && ok; ++l)
          for (int j = 0; j < 2 && ok; ++j) ok = ((k == l ? x[i][j] : 0) % 2) == (x[i][k] * x[l][j]) % 2;
    if (ok) ++brute;
  }
  CHECK(brute == 0);
  CHECK(grouplikes(coend_coalgebra(2, F2)).empty());
  CHECK_THROWS_AS(grouplikes(ground_coalgebra(Q)), UnsupportedField);
  CHECK_THROWS_AS(grouplikes(coend_coalgebra(3, F3), 100), BudgetExceeded);
}

TEST_CASE("algebra_morphisms") {
  const auto inv = corpus::f2_involution();
  const auto to_f2 = algebra_morphisms(inv, ground_algebra(F2));
  REQUIRE(to_f2.size() == 1);
  CHECK(to_f2[0] == LinMap::from_ints(F2, 1, 2, {1, 1}));

  CHECK(algebra_morphisms(ground_algebra(F3), corpus::f3_c2().bialg.alg).size() == 1);

  // images of g in M2(F2): all 16 matrices with M^2 = I
  std::size_t involutions = 0;
  for (const auto& m : all_matrices(2, 2))
    if (int_mul(m, m, 2) == int_identity(2)) ++involutions;
  CHECK(involutions == 4);
  CHECK(algebra_morphisms(inv, corpus::m2_f2()).size() == involutions);

  CHECK_THROWS_AS(algebra_morphisms(inv, corpus::m2_f2(), 10), BudgetExceeded);
  CHECK_THROWS_AS(algebra_morphisms(corpus::rational_c2().bialg.alg, ground_algebra(Q)), UnsupportedField);
}

TEST_CASE("algebra_morphisms are algebra morphisms in lexicographic order") {
  for (const auto& a : corpus::algebras()) {
    if (!a.value.field.is_prime()) continue;
    for (const auto& b : corpus::algebras()) {
      if (b.value.field != a.value.field) continue;
      if (saturating_power(a.value.field.characteristic(), a.value.dim * b.value.dim) > (1u << 20)) continue;
      INFO(a.name << " -> " << b.name);
      const auto ms = algebra_morphisms(a.value, b.value);
      for (std::size_t i = 0; i < ms.size(); ++i) {
        REQUIRE(is_algebra_morphism(ms[i], a.value, b.value));
        if (i) REQUIRE(lex_less(ms[i - 1], ms[i]));
      }
    }
  }
}

TEST_CASE("corpus: antipode exists iff h and h' are invertible") {
  for (const auto& b : corpus::bialgebras()) {
    INFO(b.name);
    const auto ops = fusion_operators(b.value);
    const bool antipode = find_antipode(b.value).has_value();
    CHECK(antipode == is_invertible(ops.h));
    CHECK(antipode == is_invertible(ops.h_prime));
    const bool opantipode = find_opantipode(b.value).has_value();
    CHECK(opantipode == is_invertible(ops.h_bar));
    CHECK(opantipode == is_invertible(ops.h_bar_prime));
    if (antipode) CHECK(is_invertible(find_antipode(b.value)->antipode));
  }
}

TEST_CASE("corpus: duality identities") {
  for (const auto& a : corpus::algebras()) {
    INFO(a.name);
    const auto d = dual_coalgebra(a.value);
    CHECK(validate_coalgebra(d).ok());
    CHECK(same_structure(dual_algebra(d), a.value));
    CHECK(same_structure(coopposite(d), dual_coalgebra(opposite(a.value))));
    if (is_commutative(a.value)) CHECK(is_cocommutative(d));
  }
}

TEST_CASE("convolution inverse of the identity is the antipode") {
  for (const auto& h : corpus::hopf_algebras()) {
    INFO(h.name);
    const auto& b = h.value.bialg;
    const auto conv = convolution_algebra(b.coalg, b.alg);
    const auto id = flatten_map(LinMap::identity(b.field(), b.dim()));
    const auto s = flatten_map(h.value.antipode);
    CHECK(compose(conv.mult, kron(id, s)) == conv.unit);
    CHECK(unflatten_map(s, b.dim(), b.dim()) == h.value.antipode);
  }
}

TEST_CASE("morphism checks") {
  const auto a = corpus::f2_involution();
  CHECK(is_algebra_morphism(LinMap::identity(F2, 2), a, a));
  CHECK_FALSE(is_algebra_morphism(LinMap::from_ints(F2, 2, 2, {1, 0, 0, 0}), a, a));
  const auto c = dual_coalgebra(a);
  CHECK(is_coalgebra_morphism(LinMap::identity(F2, 2), c, c));
  CHECK(validate_algebra(AlgebraData{
                             F2, 1, LinMap::from_ints(F2, 1, 1, {1}), LinMap::from_ints(F2, 1, 1, {1}), {"1"}})
            .ok());
}
