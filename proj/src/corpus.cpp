#include "sweedler/corpus.hpp"

#include "sweedler/hopfcore.hpp"

namespace sweedler::corpus {

namespace {

struct Product {
  std::size_t i, j, k;
  long coeff;
};

AlgebraData from_table(FieldSpec field, std::vector<std::string> labels,
                       const std::vector<Product>& table) {
  const std::size_t d = labels.size();
  LinMap mult(field, d, d * d);
  for (const auto& p : table) mult.add_to(p.k, p.i * d + p.j, Scalar(field, p.coeff));
  return make_algebra(LinMap::basis_vector(field, d, 0), std::move(mult), std::move(labels));
}

// Products e0 * e_i = e_i * e0 = e_i for a unit at index 0.
std::vector<Product> with_unit(std::size_t d, std::vector<Product> rest) {
  for (std::size_t i = 0; i < d; ++i) {
    rest.push_back({0, i, i, 1});
    if (i != 0) rest.push_back({i, 0, i, 1});
  }
  return rest;
}

}  // namespace

HopfData cyclic_group_algebra(FieldSpec field, std::size_t n) {
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[i][j] = (i + j) % n;
  return group_algebra(field, table);
}

HopfData rational_c2() { return cyclic_group_algebra(FieldSpec::rationals(), 2); }
HopfData f3_c2() { return cyclic_group_algebra(FieldSpec::prime(3), 2); }
HopfData f2_c3() { return cyclic_group_algebra(FieldSpec::prime(2), 3); }
HopfData trivial(FieldSpec field) { return ground_hopf(field); }

HopfData sweedler_h4() {
  const FieldSpec k = FieldSpec::prime(3);
  // 0 = 1, 1 = g, 2 = x, 3 = gx
  auto alg = from_table(k, {"1", "g", "x", "gx"},
                        with_unit(4, {{1, 1, 0, 1},
                                      {1, 2, 3, 1},
                                      {1, 3, 2, 1},
                                      {2, 1, 3, -1},
                                      {3, 1, 2, -1}}));
  LinMap comult(k, 16, 4), counit = LinMap::from_ints(k, 1, 4, {1, 1, 0, 0});
  comult.set(0 * 4 + 0, 0, Scalar(k, 1));
  comult.set(1 * 4 + 1, 1, Scalar(k, 1));
  comult.set(2 * 4 + 0, 2, Scalar(k, 1));  // x (x) 1
  comult.set(1 * 4 + 2, 2, Scalar(k, 1));  // g (x) x
  comult.set(3 * 4 + 1, 3, Scalar(k, 1));  // gx (x) g
  comult.set(0 * 4 + 3, 3, Scalar(k, 1));  // 1 (x) gx
  auto coalg = make_coalgebra(std::move(counit), std::move(comult));
  // s(1) = 1, s(g) = g, s(x) = -gx, s(gx) = x
  LinMap s = LinMap::from_ints(k, 4, 4, {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, -1, 0});
  return make_hopf(make_bialgebra(std::move(alg), std::move(coalg)), std::move(s));
}

BialgebraData idempotent_monoid() {
  const FieldSpec k = FieldSpec::prime(2);
  auto alg = from_table(k, {"1", "e"}, with_unit(2, {{1, 1, 1, 1}}));
  LinMap comult(k, 4, 2);
  comult.set(0, 0, Scalar(k, 1));
  comult.set(3, 1, Scalar(k, 1));
  return make_bialgebra(std::move(alg),
                        make_coalgebra(LinMap::from_ints(k, 1, 2, {1, 1}), std::move(comult)));
}

AlgebraData f2_involution() {
  return from_table(FieldSpec::prime(2), {"1", "g"}, with_unit(2, {{1, 1, 0, 1}}));
}

AlgebraData f2_dual_numbers() {
  return from_table(FieldSpec::prime(2), {"1", "y"}, with_unit(2, {}));
}

AlgebraData m2_f2() { return matrix_algebra(ground_algebra(FieldSpec::prime(2)), 2); }

GradedHopfData f2_exterior(long deg_x) {
  const FieldSpec k = FieldSpec::prime(2);
  auto alg = from_table(k, {"1", "x"}, with_unit(2, {}));
  LinMap comult(k, 4, 2);
  comult.set(0, 0, Scalar(k, 1));
  comult.set(0 * 2 + 1, 1, Scalar(k, 1));
  comult.set(1 * 2 + 0, 1, Scalar(k, 1));
  auto coalg = make_coalgebra(LinMap::from_ints(k, 1, 2, {1, 0}), std::move(comult));
  auto h = make_hopf(make_bialgebra(std::move(alg), std::move(coalg)), LinMap::identity(k, 2));
  return make_graded(std::move(h), {0, deg_x});
}

GradedAlgebraData f2_dual_numbers_graded(long deg_y) {
  return make_graded(f2_dual_numbers(), {0, deg_y});
}

std::vector<Named<BialgebraData>> bialgebras() {
  std::vector<Named<BialgebraData>> out;
  for (auto& h : hopf_algebras()) out.push_back({h.name, h.value.bialg});
  out.push_back({"F2{1,e}", idempotent_monoid()});
  return out;
}

std::vector<Named<HopfData>> hopf_algebras() {
  return {{"Q[C2]", rational_c2()},
          {"F3[C2]", f3_c2()},
          {"F2[C3]", f2_c3()},
          {"H4/F3", sweedler_h4()},
          {"k", trivial(FieldSpec::rationals())}};
}

std::vector<Named<AlgebraData>> algebras() {
  std::vector<Named<AlgebraData>> out;
  for (auto& b : bialgebras()) out.push_back({b.name, b.value.alg});
  out.push_back({"F2[g]/(g^2+1)", f2_involution()});
  out.push_back({"F2[y]/(y^2)", f2_dual_numbers()});
  out.push_back({"M2(F2)", m2_f2()});
  out.push_back({"F2", ground_algebra(FieldSpec::prime(2))});
  return out;
}

std::vector<Named<GradedAlgebraData>> graded_algebras() {
  const auto ext = f2_exterior(1);
  return {{"F2[x]/(x^2), deg x = 1", {ext.hopf.bialg.alg, ext.space}},
          {"F2[y]/(y^2), deg y = 2", f2_dual_numbers_graded(2)},
          {"F2[y]/(y^2), deg y = 0", f2_dual_numbers_graded(0)},
          {"F2[C3] in degree 0", include_degree0(f2_c3().bialg.alg)},
          {"F2", include_degree0(ground_algebra(FieldSpec::prime(2)))}};
}

}  // namespace sweedler::corpus
