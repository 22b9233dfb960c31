// Acceptance suite: one PASS/FAIL line per criterion. Every comparison is
// exact; there are no numeric tolerances.

#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "support.hpp"
#include "sweedler/corpus.hpp"
#include "sweedler/graded.hpp"
#include "sweedler/hopfcore.hpp"
#include "sweedler/linalg.hpp"
#include "sweedler/measuring.hpp"
#include "sweedler/reconstruct.hpp"
#include "sweedler/tambara.hpp"

using namespace sweedler;
using namespace testing;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F2 = FieldSpec::prime(2);

// Every reconstruct call made by the suite, for the factorization criterion.
std::vector<GeneratedSubcoalgebra> reconstructions;

GeneratedSubcoalgebra tracked_reconstruct(const std::vector<Measuring>& ms) {
  reconstructions.push_back(reconstruct(ms));
  return reconstructions.back();
}

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

Outcome finite_dual_oracle() {
  Outcome o;
  const std::vector<std::pair<AlgebraData, std::size_t>> cases{
      {corpus::f2_involution(), 2}, {corpus::m2_f2(), 4}, {corpus::rational_c2().bialg.alg, 2}};
  o.detail << "dims";
  for (const auto& [a, dim] : cases) {
    const auto g = tracked_reconstruct({regular_measuring(a)});
    o.detail << ' ' << g.d.dim;
    o.require(g.d.dim == dim, "dimension");
    const auto to_dual = pairing_map_to_dual(g);
    o.require(is_invertible(to_dual), "pairing is not an isomorphism");
    o.require(is_coalgebra_morphism(to_dual, g.d, dual_coalgebra(a)), "not a coalgebra map");
  }
  return o;
}

Outcome measuring_counts() {
  Outcome o;
  const auto r = enumerate_measurings(corpus::f2_involution(), ground_algebra(F2), 2);
  // oracle: the 16 matrices M with M^2 = I are the images of g
  std::vector<IntMatrix> points;
  for (const auto& m : all_matrices(2, 2))
    if (int_mul(m, m, 2) == int_identity(2)) points.push_back(m);
  const std::size_t classes = conjugacy_class_count_2x2(points, 2);
  o.detail << "total " << r.total_count << " orbits " << r.orbits.size() << " (oracle " << points.size() << ", "
           << classes << ")";
  o.require(r.total_count == 4 && points.size() == 4, "total");
  o.require(r.orbits.size() == 2 && classes == 2, "orbits");
  return o;
}

Outcome fusion_equivalence() {
  Outcome o;
  std::size_t disagreements = 0, checked = 0;
  auto bialgebras = corpus::bialgebras();
  for (const auto& [name, b] : bialgebras) {
    const auto ops = fusion_operators(b);
    const bool hopf = is_invertible(ops.h) && is_invertible(ops.h_prime);
    const bool op_hopf = is_invertible(ops.h_bar) && is_invertible(ops.h_bar_prime);
    disagreements += find_antipode(b).has_value() != hopf;
    disagreements += find_opantipode(b).has_value() != op_hopf;
    ++checked;
  }
  o.detail << checked << " bialgebras, " << disagreements << " disagreements";
  o.require(disagreements == 0, "disagreement");
  o.require(checked == 6, "corpus size");
  return o;
}

Outcome dual_hopf() {
  Outcome o;
  std::size_t passed = 0;
  const auto hopfs = corpus::hopf_algebras();
  for (const auto& [name, h] : hopfs) {
    try {
      const HopfData d = dual_hopf_check(h);
      const auto dual_bialg = make_bialgebra(dual_algebra(h.bialg.coalg), dual_coalgebra(h.bialg.alg));
      const auto s = find_antipode(dual_bialg);
      const bool ok = s && s->antipode == h.antipode.transpose() && d.antipode == h.antipode.transpose() &&
                      validate_hopf(d).ok();
      o.require(ok, name);
      passed += ok;
    } catch (const std::exception& e) {
      o.require(false, name + ": " + e.what());
    }
  }
  o.detail << passed << "/" << hopfs.size() << " including H4";
  return o;
}

Outcome opposite_identities() {
  Outcome o;
  std::size_t count = 0;
  for (const auto& [name, a] : corpus::algebras()) {
    const auto d = dual_coalgebra(a);
    o.require(same_structure(coopposite(d), dual_coalgebra(opposite(a))), name + " coopposite");
    if (is_commutative(a)) o.require(is_cocommutative(d), name + " cocommutative");
    ++count;
  }
  o.detail << count << " algebras, exact equality";
  return o;
}

Outcome terminal_comonoid() {
  Outcome o;
  std::size_t count = 0;
  for (const auto& [name, b] : corpus::algebras()) {
    const auto k = ground_algebra(b.field);
    const auto g = tracked_reconstruct({make_measuring(k, b, 1, b.unit)});
    o.require(g.d.dim == 1, name + " dim");
    o.require(same_structure(g.d, ground_coalgebra(b.field)), name + " not k");
    // D = k is one-dimensional, so a grouplike c e has c = 1 from the counit
    GrouplikeCandidates box{{0}, {}};
    for (long v = -2; v <= 2; ++v) box.values.push_back(Scalar(b.field, v));
    const auto gl = b.field.is_prime() ? grouplikes(g.d) : grouplikes(g.d, box);
    o.require(gl.size() == 1, name + " grouplikes");
    if (b.field.is_prime()) o.require(algebra_morphisms(k, b).size() == 1, name + " Alg(k,B)");
    ++count;
  }
  o.detail << count << " targets, D = k, one grouplike each";
  return o;
}

Outcome connectedness_counterexample() {
  Outcome o;
  const auto ext = corpus::f2_exterior(1);
  const GradedAlgebraData a{ext.hopf.bialg.alg, ext.space};
  const auto y1 = corpus::f2_dual_numbers_graded(1), y2 = corpus::f2_dual_numbers_graded(2);
  const auto n1 = graded_algebra_morphisms(a, y1).size(), n2 = graded_algebra_morphisms(a, y2).size();
  o.detail << "deg y = 1: " << n1 << ", deg y = 2: " << n2;
  o.require(n1 == 2, "deg 1 count");
  o.require(n2 == 1, "deg 2 count");
  o.require(is_connected(a.space) && is_connected(y1.space) && is_connected(y2.space), "connected");
  o.require(!is_connected(corpus::f2_dual_numbers_graded(0).space), "deg 0 is not connected");
  return o;
}

Outcome degree_zero_grouplikes() {
  Outcome o;
  std::size_t pairs = 0;
  for (const auto& [an, a] : corpus::graded_algebras())
    for (const auto& [bn, b] : corpus::algebras()) {
      if (a.alg.field != b.field) continue;
      if (saturating_power(b.field.characteristic(), a.alg.dim * b.dim) > (1u << 20)) continue;
      const auto lhs = graded_algebra_morphisms(a, include_degree0(b)).size();
      const auto rhs = algebra_morphisms(degree0_part(a), b).size();
      o.require(lhs == rhs, an + " -> " + bn);
      ++pairs;
    }
  o.detail << pairs << " pairs agree";
  o.require(pairs > 0, "no pairs");
  return o;
}

Outcome tambara_level() {
  Outcome o;
  const auto a = corpus::f2_involution(), b = corpus::f2_dual_numbers();
  const auto p = tambara_presentation(a, b);
  for (std::size_t n : {1u, 2u}) {
    const auto modules = tambara_modules(p, n);
    const auto morphisms = algebra_morphisms(b, matrix_algebra(a, n));
    const auto oracle = involution_dual_numbers_modules(n);
    const auto oracle_orbits = pair_class_count(involution_dual_numbers_morphisms(n), n, 2);
    const auto c = correspondence_check(a, b, n);
    o.detail << "n=" << n << ": " << modules.total_count << " modules, " << morphisms.size() << " morphisms, "
             << modules.orbits.size() << " orbits; ";
    o.require(modules.total_count == morphisms.size(), "counts");
    o.require(modules.total_count == oracle.size(), "module oracle");
    o.require(modules.orbits.size() == oracle_orbits, "orbit oracle");
    o.require(c.ok(), "correspondence");
  }
  return o;
}

struct Pools {
  std::vector<AlgebraData> algebras;
  std::vector<std::vector<std::vector<Measuring>>> by_pair;
};

Pools measuring_pools() {
  Pools p;
  p.algebras = {corpus::f2_involution(), corpus::f2_dual_numbers(), ground_algebra(F2)};
  p.by_pair.assign(3, std::vector<std::vector<Measuring>>(3));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t n = 1; n <= 2; ++n)
        for (auto& m : all_measurings(p.algebras[i], p.algebras[j], n)) p.by_pair[i][j].push_back(std::move(m));
  return p;
}

Outcome property_suites() {
  Outcome o;
  const Pools pools = measuring_pools();
  const auto pick = [&](Rng& rng, std::size_t i, std::size_t j) -> const Measuring& {
    const auto& v = pools.by_pair[i][j];
    return v[uniform(rng, 0, v.size() - 1)];
  };
  const auto suite = [&](const std::string& name, std::uint64_t salt, const std::function<bool(Rng&)>& body) {
    auto rng = seeded(salt);
    int failures = 0;
    for (int t = 0; t < kCases; ++t) failures += !body(rng);
    o.require(failures == 0, name);
    o.detail << name << ' ' << kCases - failures << '/' << kCases << "; ";
  };

  suite("tensor/compose validate", 101, [&](Rng& rng) {
    const std::size_t i = uniform(rng, 0, 2), j = uniform(rng, 0, 2), l = uniform(rng, 0, 2);
    return validate_measuring(tensor_measuring_endo(pick(rng, i, i), pick(rng, i, i))).ok() &&
           validate_measuring(compose_measuring(pick(rng, i, j), pick(rng, j, l))).ok();
  });
  suite("compose associative", 102, [&](Rng& rng) {
    const std::size_t i = uniform(rng, 0, 2), j = uniform(rng, 0, 2), l = uniform(rng, 0, 2), m = uniform(rng, 0, 2);
    const auto &x = pick(rng, i, j), &y = pick(rng, j, l), &z = pick(rng, l, m);
    return compose_measuring(compose_measuring(x, y), z).psi == compose_measuring(x, compose_measuring(y, z)).psi;
  });
  suite("kron functoriality", 103, [&](Rng& rng) {
    const FieldSpec k = random_field(rng);
    const std::size_t a = uniform(rng, 0, 3), b = uniform(rng, 0, 3), c = uniform(rng, 0, 3), d = uniform(rng, 0, 3),
                      e = uniform(rng, 0, 3), f = uniform(rng, 0, 3);
    const auto f1 = random_map(k, b, a, rng), f2 = random_map(k, c, b, rng);
    const auto g1 = random_map(k, e, d, rng), g2 = random_map(k, f, e, rng);
    return kron(compose(f2, f1), compose(g2, g1)) == compose(kron(f2, g2), kron(f1, g1));
  });
  suite("koszul sign", 104, [&](Rng& rng) {
    const FieldSpec k = random_field(rng);
    const GradedSpace line{k, {1}};
    const long expected = k.characteristic() == 2 ? 1 : -1;
    const bool odd = koszul_swap(line, line) == LinMap::from_ints(k, 1, 1, {expected});
    const bool q = koszul_swap(GradedSpace{Q, {1}}, GradedSpace{Q, {1}}).at(0, 0) == Scalar(Q, -1);
    const bool f2 = koszul_swap(GradedSpace{F2, {1}}, GradedSpace{F2, {1}}).at(0, 0) == Scalar(F2, 1);
    return odd && q && f2;
  });
  suite("matrix morphism roundtrip", 105, [&](Rng& rng) {
    const std::size_t i = uniform(rng, 0, 2), j = uniform(rng, 0, 2);
    const auto& m = pick(rng, i, j);
    const auto rho = matrix_morphism_from_measuring(m);
    return measuring_from_matrix_morphism(rho, m.a, m.b, m.xdim).psi == m.psi &&
           matrix_morphism_from_measuring(measuring_from_matrix_morphism(rho, m.a, m.b, m.xdim)) == rho;
  });

  // families of several generators, kept for the factorization criterion
  auto rng = seeded(106);
  for (int t = 0; t < 20; ++t) {
    const std::size_t i = uniform(rng, 0, 2), j = uniform(rng, 0, 2);
    tracked_reconstruct({pick(rng, i, j), pick(rng, i, j), pick(rng, i, j)});
  }
  return o;
}

Outcome universal_factorization() {
  Outcome o;
  std::size_t generators = 0;
  for (const auto& g : reconstructions)
    for (std::size_t i = 0; i < g.generators.size(); ++i) {
      o.require(verify_universal_factorization(g, i), "generator " + std::to_string(generators));
      o.require(induced_comodule(g, i).cod() == g.generators[i].xdim * g.d.dim, "comodule shape");
      ++generators;
    }
  o.detail << reconstructions.size() << " reconstructions, " << generators << " generators";
  o.require(generators > 0, "no reconstructions");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"finite dual of regular modules", finite_dual_oracle},
      {"measuring counts and orbits", measuring_counts},
      {"fusion operators decide antipodes", fusion_equivalence},
      {"dual of a Hopf algebra is Hopf", dual_hopf},
      {"coopposite and cocommutative duals", opposite_identities},
      {"terminal comonoid", terminal_comonoid},
      {"connectedness counterexample", connectedness_counterexample},
      {"degree 0 grouplike identity", degree_zero_grouplikes},
      {"coendomorphism algebra modules", tambara_level},
      {"property suites", property_suites},
      {"universal factorization", universal_factorization},
  };
  std::printf("tolerance: exact arithmetic, zero tolerance\n");
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    failed += !o.pass;
    std::string detail = o.detail.str();
    while (!detail.empty() && (detail.back() == ' ' || detail.back() == ';')) detail.pop_back();
    std::printf("%s %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), detail.c_str());
  }
  return failed == 0 ? 0 : 1;
}
