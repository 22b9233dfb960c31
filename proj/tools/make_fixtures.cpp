// Writes the fixture documents used by the CLI tests into a directory.
#include <fstream>
#include <iostream>

#include "sweedler/corpus.hpp"
#include "sweedler/document.hpp"
#include "sweedler/hopfcore.hpp"
#include "sweedler/measuring.hpp"

namespace {

using namespace sweedler;

void write(const std::filesystem::path& dir, const std::string& name, const Document& doc) {
  std::ofstream out(dir / name, std::ios::binary);
  out << serialize(doc);
}

// A acting on itself by left multiplication, as a measuring A -> k.
Measuring regular_measuring(const AlgebraData& a) {
  return make_measuring(a, ground_algebra(a.field), a.dim, a.mult);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_fixtures <directory>\n";
    return 1;
  }
  const std::filesystem::path dir = argv[1];
  std::filesystem::create_directories(dir);

  write(dir, "q_c2.hopf.txt", {corpus::rational_c2(), std::nullopt});
  write(dir, "f3_c2.hopf.txt", {corpus::f3_c2(), std::nullopt});
  write(dir, "f2_c3.hopf.txt", {corpus::f2_c3(), std::nullopt});
  write(dir, "h4_f3.hopf.txt", {corpus::sweedler_h4(), std::nullopt});
  write(dir, "trivial_q.hopf.txt", {corpus::trivial(FieldSpec::rationals()), std::nullopt});
  write(dir, "idempotent.bialgebra.txt", {corpus::idempotent_monoid(), std::nullopt});
  write(dir, "f2_involution.algebra.txt", {corpus::f2_involution(), std::nullopt});
  write(dir, "f2_dual_numbers.algebra.txt", {corpus::f2_dual_numbers(), std::nullopt});
  write(dir, "m2_f2.algebra.txt", {corpus::m2_f2(), std::nullopt});
  write(dir, "f2.algebra.txt", {ground_algebra(FieldSpec::prime(2)), std::nullopt});
  write(dir, "q.algebra.txt", {ground_algebra(FieldSpec::rationals()), std::nullopt});

  const auto ext = corpus::f2_exterior(1);
  write(dir, "f2_exterior_deg1.hopf.txt", {ext.hopf, ext.space.degrees});
  write(dir, "f2_exterior_deg1.algebra.txt", {ext.hopf.bialg.alg, ext.space.degrees});
  for (long d : {1L, 2L}) {
    const auto y = corpus::f2_dual_numbers_graded(d);
    write(dir, "f2_dual_numbers_deg" + std::to_string(d) + ".algebra.txt", {y.alg, y.space.degrees});
  }

  write(dir, "regular_f2_involution.measuring.txt",
        {regular_measuring(corpus::f2_involution()), std::nullopt});
  write(dir, "regular_m2_f2.measuring.txt", {regular_measuring(corpus::m2_f2()), std::nullopt});
  write(dir, "regular_q_c2.measuring.txt",
        {regular_measuring(corpus::rational_c2().bialg.alg), std::nullopt});
  // k acting on a line through the unit of B
  const auto y = corpus::f2_dual_numbers();
  write(dir, "unit_f2_dual_numbers.measuring.txt",
        {make_measuring(ground_algebra(y.field), y, 1, y.unit), std::nullopt});
  return 0;
}
