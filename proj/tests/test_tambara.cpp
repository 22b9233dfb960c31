#include <doctest.h>

#include <set>

#include "support.hpp"
#include "sweedler/corpus.hpp"
#include "sweedler/hopfcore.hpp"
#include "sweedler/tambara.hpp"

using namespace sweedler;
using namespace testing;

namespace {

const FieldSpec F2 = FieldSpec::prime(2);

Polynomial poly(std::initializer_list<std::pair<Word, long>> terms, FieldSpec k) {
  Polynomial p;
  for (const auto& [w, c] : terms) p.add(w, Scalar(k, c));
  return p;
}

using Pair = IntPair;

IntMatrix generator_matrix(const LinMap& module, std::size_t g, std::size_t n) {
  IntMatrix m(n, std::vector<long>(n));
  for (std::size_t r = 0; r < n * n; ++r) m[r / n][r % n] = module.at(r, g).residue();
  return m;
}

// Number of n x n matrices f over F2 with f X_g = Y_g f for every generator.
std::size_t intertwiner_count_oracle(const LinMap& x, const LinMap& y, std::size_t n) {
  std::size_t count = 0;
  for (const auto& f : all_matrices(n, 2)) {
    bool ok = true;
    for (std::size_t g = 0; g < x.dom() && ok; ++g)
      ok = int_mul(f, generator_matrix(x, g, n), 2) == int_mul(generator_matrix(y, g, n), f, 2);
    count += ok;
  }
  return count;
}

}  // namespace

TEST_CASE("presentation of a(F2[g]/(g^2+1), F2[y]/(y^2))") {
  const auto p = tambara_presentation(corpus::f2_involution(), corpus::f2_dual_numbers());
  CHECK(p.algebra.generators == std::vector<std::string>{"x_{1,y}", "x_{g,y}"});
  REQUIRE(p.algebra.relations.size() == 2);
  CHECK(p.algebra.relations[0] == poly({{{0, 0}, 1}, {{1, 1}, 1}}, F2));
  CHECK(p.algebra.relations[1] == poly({{{0, 1}, 1}, {{1, 0}, 1}}, F2));
  // delta(1) = 1 (x) 1
  CHECK(p.coordinates[0][0].constant.is_one());
  CHECK_FALSE(p.coordinates[0][0].generator);
  CHECK(p.coordinates[1][0].constant.is_zero());
}

TEST_CASE("a(k, B) is B") {
  for (const auto& b : corpus::algebras()) {
    INFO(b.name);
    const auto k = ground_algebra(b.value.field);
    const auto p = tambara_presentation(k, b.value);
    // every product e_beta e_beta' appears as a relation x x' - sum c x''
    for (const auto& rel : p.algebra.relations)
      for (const auto& [w, c] : rel.terms) CHECK(w.size() <= 2);
    if (b.value.dim == 1) CHECK(p.algebra.generators.empty());
    for (std::size_t beta = 0; beta < b.value.dim; ++beta)
      if (p.coordinates[0][beta].generator)
        CHECK(p.algebra.generators[*p.coordinates[0][beta].generator] == "x_{1," + b.value.basis[beta] + "}");
  }
  // F2[y]/(y^2): one generator with x^2 = 0
  const auto p = tambara_presentation(ground_algebra(F2), corpus::f2_dual_numbers());
  REQUIRE(p.algebra.relations.size() == 1);
  CHECK(p.algebra.relations[0] == poly({{{0, 0}, 1}}, F2));
}

TEST_CASE("generator count after unital normalization") {
  for (const auto& a : corpus::algebras())
    for (const auto& b : corpus::algebras()) {
      if (a.value.field != b.value.field) continue;
      INFO(a.name << ", " << b.name);
      const auto p = tambara_presentation(a.value, b.value);
      std::size_t nonzero = 0;
      bool ones = true;
      for (std::size_t r = 0; r < b.value.dim; ++r)
        if (!b.value.unit.at(r, 0).is_zero()) {
          ++nonzero;
          ones = ones && b.value.unit.at(r, 0).is_one();
        }
      const bool unit_is_basis = nonzero == 1 && ones;
      const std::size_t expected = a.value.dim * (b.value.dim - (unit_is_basis ? 1 : 0));
      CHECK(p.algebra.generators.size() == expected);
      for (const auto& rel : p.algebra.relations) {
        CHECK_FALSE(rel.is_zero());
        for (const auto& [w, c] : rel.terms)
          for (auto g : w) CHECK(g < p.algebra.generators.size());
      }
    }
}

TEST_CASE("n = 1 with B = k") {
  for (const auto& a : corpus::algebras()) {
    if (!a.value.field.is_prime()) continue;
    INFO(a.name);
    const auto r = correspondence_check(a.value, ground_algebra(a.value.field), 1);
    CHECK(r.module_count == 1);
    CHECK(r.morphism_count == 1);
    CHECK(r.ok());
  }
}

TEST_CASE("modules and matrix morphisms against brute force") {
  const auto a = corpus::f2_involution();
  const auto b = corpus::f2_dual_numbers();
  const auto p = tambara_presentation(a, b);
  for (std::size_t n : {1u, 2u}) {
    INFO("n = " << n);
    const auto modules = involution_dual_numbers_modules(n);
    const auto morphisms = involution_dual_numbers_morphisms(n);
    const auto report = tambara_modules(p, n);
    CHECK(report.total_count == modules.size());
    CHECK(algebra_morphisms(b, matrix_algebra(a, n)).size() == morphisms.size());
    CHECK(modules.size() == morphisms.size());
    CHECK(report.orbits.size() == pair_class_count(modules, n, 2));

    // the library's modules are exactly the oracle's
    std::set<Pair> lib;
    for (const auto& m : report.modules) lib.insert({generator_matrix(m, 0, n), generator_matrix(m, 1, n)});
    CHECK(lib == std::set<Pair>(modules.begin(), modules.end()));

    const auto c = correspondence_check(a, b, n);
    CHECK(c.bijective);
    CHECK(c.orbits_match);
    CHECK(c.intertwiners_match);
    CHECK(c.module_orbits == pair_class_count(morphisms, n, 2));
    CHECK(c.ok());
  }
}

TEST_CASE("identification on corpus pairs") {
  for (const auto& a : corpus::algebras())
    for (const auto& b : corpus::algebras()) {
      if (a.value.field != b.value.field || !a.value.field.is_prime()) continue;
      for (std::size_t n : {1u, 2u}) {
        const auto p = tambara_presentation(a.value, b.value);
        const auto p_ = static_cast<std::uint64_t>(a.value.field.characteristic());
        if (saturating_power(p_, p.algebra.generators.size() * n * n) > (1u << 16)) continue;
        if (saturating_power(p_, n * n * a.value.dim * b.value.dim) > (1u << 20)) continue;
        INFO(a.name << ", " << b.name << ", n = " << n);
        CHECK(correspondence_check(a.value, b.value, n).ok());
      }
    }
}

TEST_CASE("for A = k the identification is the identity") {
  for (const auto& b : corpus::algebras()) {
    if (!b.value.field.is_prime()) continue;
    const auto k = ground_algebra(b.value.field);
    const auto p = tambara_presentation(k, b.value);
    for (std::size_t n : {1u, 2u}) {
      if (saturating_power(b.value.field.characteristic(), p.algebra.generators.size() * n * n) > (1u << 16))
        continue;
      INFO(b.name << ", n = " << n);
      const auto report = tambara_modules(p, n);
      for (const auto& m : report.modules) {
        const auto rho = module_to_morphism(p, m, n);
        // column beta is the matrix of x_beta, or the identity for 1_B
        for (std::size_t beta = 0; beta < b.value.dim; ++beta) {
          const auto& x = p.coordinates[0][beta];
          const LinMap expected = x.generator ? m.column_map(*x.generator)
                                              : flatten_map(LinMap::identity(b.value.field, n).scaled(x.constant));
          CHECK(rho.column_map(beta) == expected);
        }
      }
    }
  }
}

TEST_CASE("property: evaluation is an algebra map") {
  auto rng = seeded(41);
  for (int t = 0; t < kCases; ++t) {
    const FieldSpec k = random_field(rng);
    const std::size_t gens = uniform(rng, 1, 3), n = uniform(rng, 1, 3);
    std::vector<LinMap> mats;
    for (std::size_t g = 0; g < gens; ++g) mats.push_back(random_map(k, n, n, rng));
    const auto random_poly = [&] {
      Polynomial p;
      const std::size_t terms = uniform(rng, 0, 3);
      for (std::size_t i = 0; i < terms; ++i) {
        Word w(uniform(rng, 0, 3));
        for (auto& g : w) g = uniform(rng, 0, gens - 1);
        p.add(w, random_scalar(k, rng));
      }
      return p;
    };
    const auto p = random_poly(), q = random_poly();
    REQUIRE(evaluate(p * q, mats, n) == compose(evaluate(p, mats, n), evaluate(q, mats, n)));
    REQUIRE(evaluate(p + q, mats, n) == evaluate(p, mats, n) + evaluate(q, mats, n));
    REQUIRE(evaluate(poly({{{}, 1}}, k), mats, n).is_identity());
  }
}

TEST_CASE("property: module intertwiners against brute force") {
  const auto p = tambara_presentation(corpus::f2_involution(), corpus::f2_dual_numbers());
  const auto report = tambara_modules(p, 2);
  auto rng = seeded(42);
  for (int t = 0; t < kCases; ++t) {
    const auto& x = report.modules[uniform(rng, 0, report.modules.size() - 1)];
    const auto& y = report.modules[uniform(rng, 0, report.modules.size() - 1)];
    const auto basis = module_intertwiners(x, 2, y, 2);
    REQUIRE((std::size_t{1} << basis.size()) == intertwiner_count_oracle(x, y, 2));
  }
}

TEST_CASE("budget") {
  const auto p = tambara_presentation(corpus::m2_f2(), corpus::m2_f2());
  CHECK_THROWS_AS(tambara_modules(p, 2, 1000), BudgetExceeded);
  CHECK_THROWS_AS(tambara_modules(tambara_presentation(ground_algebra(FieldSpec::rationals()),
                                                       ground_algebra(FieldSpec::rationals())),
                                  1),
                  UnsupportedField);
}
