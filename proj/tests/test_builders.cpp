#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gtqft/builders.hpp"
#include "gtqft/errors.hpp"
#include "gtqft/tqft.hpp"

using namespace gtqft;

namespace {

bool conjugate_in(const FiniteGroup& G, int u, int v) {
  for (int c = 0; c < G.order(); ++c)
    if (G.conj(c, u) == v) return true;
  return false;
}

bool is_permutation_matrix(const RationalMatrix& m) {
  if (m.rows() != m.cols()) return false;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    int row_ones = 0, col_ones = 0;
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (m(i, j) == Rational(1)) ++row_ones;
      else if (m(i, j) != Rational(0)) return false;
      if (m(j, i) == Rational(1)) ++col_ones;
      else if (m(j, i) != Rational(0)) return false;
    }
    if (row_ones != 1 || col_ones != 1) return false;
  }
  return true;
}

} // namespace

TEST_CASE("wedge presentations") {
  CHECK(circle()->num_generators() == 1);
  CHECK(figure_eight()->num_generators() == 2);
  const PresentationPtr w = free_loops(4, "base");
  CHECK(w->num_objects() == 1);
  CHECK(w->num_generators() == 4);
  CHECK(w->generator_index("x3") == 2);
  CHECK(w->relations().empty());
  CHECK(empty_presentation()->num_objects() == 0);
}

TEST_CASE("pair of pants matches its closed formula") {
  const FiniteGroup S3 = FiniteGroup::symmetric(3);
  const Cospan c = pair_of_pants();
  CHECK(validate(c).empty());
  const ClassMatrix m = class_matrix(c, S3);
  REQUIRE(m.entries.rows() == 3);
  REQUIRE(m.entries.cols() == 9);
  for (Eigen::Index r = 0; r < m.entries.rows(); ++r) {
    const int g1 = m.row_basis[r].rep.images[0];
    for (Eigen::Index k = 0; k < m.entries.cols(); ++k) {
      const int f1 = m.col_basis[k].rep.images[0];
      const int f2 = m.col_basis[k].rep.images[1];
      int expected = 0; // |{d : d^-1 f2 d f1 ~ g1}|
      for (int d = 0; d < 6; ++d)
        if (conjugate_in(S3, S3.mul(S3.conj(S3.inv(d), f2), f1), g1)) ++expected;
      CHECK(m.entries(r, k) == Rational(expected));
    }
  }
}

TEST_CASE("three strand tube is |G| times an indicator") {
  const FiniteGroup S3 = FiniteGroup::symmetric(3);
  const Cospan c = three_strand_tube();
  CHECK(validate(c).empty());
  const ClassMatrix m = class_matrix(c, S3);
  REQUIRE(m.entries.rows() == 3);  // circle + point
  REQUIRE(m.entries.cols() == 11); // figure-eight classes of S3
  for (Eigen::Index r = 0; r < m.entries.rows(); ++r) {
    const int g1 = m.row_basis[r].rep.images[0];
    for (Eigen::Index k = 0; k < m.entries.cols(); ++k) {
      const int f1 = m.col_basis[k].rep.images[0];
      const int f2 = m.col_basis[k].rep.images[1];
      const Rational expected = conjugate_in(S3, S3.mul(f1, f2), g1) ? Rational(6) : Rational(0);
      CHECK(m.entries(r, k) == expected);
    }
  }
}

TEST_CASE("artin automorphism words") {
  PresentationPtr w = free_loops(3);
  const PresentationMap s1 = artin_automorphism(w, 1);
  // x1 -> x1 x2 x1^-1 in group notation = letters [x1-, x2+, x1+] applied in order.
  CHECK(s1.generator_map[0] ==
        make_word(*w, {{0, true}, {1, false}, {0, false}}));
  CHECK(s1.generator_map[1] == generator_word(*w, 0));
  CHECK(s1.generator_map[2] == generator_word(*w, 2)); // untouched strand

  // Inverse really inverts: applying both is the identity on every generator.
  const PresentationMap s1i = artin_automorphism(w, 1, true);
  const PresentationMap round = compose_maps(s1, s1i);
  for (int a = 0; a < w->num_generators(); ++a)
    CHECK(round.generator_map[a] == generator_word(*w, a));

  CHECK_THROWS_AS(artin_automorphism(w, 0), IndexOutOfRangeError);
  CHECK_THROWS_AS(artin_automorphism(w, 3), IndexOutOfRangeError);
  CHECK_THROWS_AS(artin_automorphism(circle(), 1), IndexOutOfRangeError);
}

TEST_CASE("braid generators permute hom classes") {
  const FiniteGroup S3 = FiniteGroup::symmetric(3);
  for (const Cospan& c : {artin_braid_generator(2, 1), artin_braid_generator(2, 1, true)}) {
    CHECK(validate(c).empty());
    CHECK(is_permutation_matrix(class_matrix(c, S3).entries));
  }
}

TEST_CASE("loop braid generators") {
  const FiniteGroup Z2 = FiniteGroup::cyclic(2);
  const Cospan rho = loop_braid_generator(2, 1, LoopKind::permutation);
  const RationalMatrix r = class_matrix(rho, Z2).entries;
  CHECK(is_permutation_matrix(r));
  CHECK(matrices_equal(RationalMatrix(r * r),
                       class_matrix(identity_cospan(figure_eight()), Z2).entries));
  // For abelian G the band generator acts exactly like the swap.
  const Cospan band = loop_braid_generator(2, 1, LoopKind::band);
  CHECK(matrices_equal(class_matrix(band, Z2).entries, r));

  const PresentationMap b = loop_braid_automorphism(free_loops(2), 1, LoopKind::band);
  CHECK(b.generator_map[0] == generator_word(*b.source, 1));
}
