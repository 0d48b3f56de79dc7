#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gtqft/builders.hpp"
#include "gtqft/errors.hpp"
#include "gtqft/hom_enum.hpp"

#include <algorithm>
#include <set>

using namespace gtqft;

namespace {

// Exhaustive oracle: try every assignment vector and keep the ones where all
// relations evaluate equal.
std::vector<GroupoidHom> homs_oracle(const GroupoidPresentation& p, const FiniteGroup& G) {
  std::vector<GroupoidHom> out;
  std::vector<int> images(p.num_generators(), 0);
  while (true) {
    GroupoidHom h{images};
    bool ok = true;
    for (const Relation& r : p.relations())
      ok = ok && evaluate(G, h, r.lhs) == evaluate(G, h, r.rhs);
    if (ok) out.push_back(h);
    int k = p.num_generators() - 1;
    while (k >= 0 && images[k] == G.order() - 1) images[k--] = 0;
    if (k < 0) break;
    ++images[k];
  }
  return out;
}

// Exhaustive oracle over all eta in G^{#objects}.
bool nat_iso_oracle(const GroupoidPresentation& p, const FiniteGroup& G, const GroupoidHom& f,
                    const GroupoidHom& g) {
  std::vector<int> eta(p.num_objects(), 0);
  while (true) {
    bool ok = true;
    for (int a = 0; a < p.num_generators() && ok; ++a) {
      const Generator& gen = p.generators()[a];
      ok = g.images[a] == G.mul(G.mul(eta[gen.tgt], f.images[a]), G.inv(eta[gen.src]));
    }
    if (ok) return true;
    int k = p.num_objects() - 1;
    while (k >= 0 && eta[k] == G.order() - 1) eta[k--] = 0;
    if (k < 0) return false;
    ++eta[k];
  }
}

PresentationPtr torsion_loop(int power) {
  auto p = std::make_shared<GroupoidPresentation>();
  const int o = p->add_object("o");
  const int a = p->add_generator("a", o, o);
  std::vector<Letter> letters(power, Letter{a, false});
  p->add_relation(make_word(*p, letters), empty_word(o));
  return p;
}

// Mixed fixture: loop at u, loop at v, bridge, and a relation conjugating one
// loop into the other.
PresentationPtr conjugated_loops() {
  auto p = std::make_shared<GroupoidPresentation>();
  const int u = p->add_object("u");
  const int v = p->add_object("v");
  const int a = p->add_generator("a", u, u);
  const int b = p->add_generator("b", v, v);
  const int t = p->add_generator("t", u, v);
  p->add_relation(make_word(*p, {{a, false}, {t, false}}), make_word(*p, {{t, false}, {b, false}}));
  return p;
}

} // namespace

TEST_CASE("evaluate applies letters in order") {
  PresentationPtr p = figure_eight();
  const FiniteGroup S3 = FiniteGroup::symmetric(3);
  GroupoidHom h{{1, 4}};
  // Word [x1+, x2+] means x1 first, so the product is h(x2) * h(x1).
  const Word w = make_word(*p, {{0, false}, {1, false}});
  CHECK(evaluate(S3, h, w) == S3.mul(4, 1));
  const Word winv = invert_word(w);
  CHECK(evaluate(S3, h, winv) == S3.inv(S3.mul(4, 1)));
  CHECK(evaluate(S3, h, empty_word(0)) == S3.identity());
}

TEST_CASE("hom counts on free presentations") {
  const FiniteGroup S3 = FiniteGroup::symmetric(3);
  CHECK(enumerate_homs(*circle(), S3).size() == 6);
  CHECK(enumerate_homs(*figure_eight(), S3).size() == 36);
  CHECK(enumerate_homs(*free_loops(3), FiniteGroup::cyclic(2)).size() == 8);
  // No generators: exactly the empty hom.
  auto pt = std::make_shared<GroupoidPresentation>();
  pt->add_object("o");
  CHECK(enumerate_homs(*pt, S3).size() == 1);
  auto empty = std::make_shared<GroupoidPresentation>();
  CHECK(enumerate_homs(*empty, S3).size() == 1);
}

TEST_CASE("relations prune against oracle") {
  const FiniteGroup Z3 = FiniteGroup::cyclic(3);
  const FiniteGroup S3 = FiniteGroup::symmetric(3);
  CHECK(enumerate_homs(*torsion_loop(2), Z3).size() == 1);
  CHECK(enumerate_homs(*torsion_loop(3), Z3).size() == 3);
  CHECK(enumerate_homs(*torsion_loop(2), S3).size() == 4); // identity + 3 transpositions

  for (const auto& p : {torsion_loop(2), torsion_loop(4), conjugated_loops()}) {
    for (const FiniteGroup& G : {Z3, S3, FiniteGroup::dihedral(4)}) {
      const auto got = enumerate_homs(*p, G);
      const auto expect = homs_oracle(*p, G);
      CHECK(got == expect); // same homs, same lexicographic order
    }
  }
}

TEST_CASE("threaded enumeration is identical") {
  const FiniteGroup S3 = FiniteGroup::symmetric(3);
  PresentationPtr p = conjugated_loops();
  const auto base = enumerate_homs(*p, S3);
  for (int threads : {2, 3, 8, 16}) {
    EnumOptions opts;
    opts.threads = threads;
    CHECK(enumerate_homs(*p, S3, opts) == base);
  }
}

TEST_CASE("budget") {
  EnumOptions opts;
  opts.budget = 100;
  const FiniteGroup S3 = FiniteGroup::symmetric(3);
  CHECK_THROWS_AS(enumerate_homs(*free_loops(3), S3, opts), BudgetExceededError);
  CHECK(enumerate_homs(*free_loops(2), S3, opts).size() == 36); // 36 <= 100
}

TEST_CASE("natural iso witness against oracle") {
  const FiniteGroup S3 = FiniteGroup::symmetric(3);
  for (const auto& p : {figure_eight(), conjugated_loops(), three_strand_tube().apex}) {
    const auto homs = enumerate_homs(*p, S3);
    // Sample pairs; full quadratic scan is too slow for the larger fixtures.
    const std::size_t step = std::max<std::size_t>(1, homs.size() / 12);
    for (std::size_t i = 0; i < homs.size(); i += step) {
      for (std::size_t j = 0; j < homs.size(); j += step) {
        const auto witness = natural_iso_witness(*p, S3, homs[i], homs[j]);
        CHECK(witness.has_value() == nat_iso_oracle(*p, S3, homs[i], homs[j]));
        if (witness) {
          // The witness really conjugates f into g.
          for (int a = 0; a < p->num_generators(); ++a) {
            const Generator& gen = p->generators()[a];
            CHECK(homs[j].images[a] == S3.mul(S3.mul((*witness)[gen.tgt], homs[i].images[a]),
                                              S3.inv((*witness)[gen.src])));
          }
        }
      }
    }
  }
}

TEST_CASE("nat classes of the circle are conjugacy classes") {
  const FiniteGroup S3 = FiniteGroup::symmetric(3);
  const NatPartition part = nat_classes(*circle(), S3);
  const auto conj = S3.conjugacy_classes();
  REQUIRE(part.classes.size() == conj.size());
  for (std::size_t k = 0; k < conj.size(); ++k) {
    CHECK(part.classes[k].rep.images[0] == conj[k].front()); // lex-minimal member
    CHECK(part.classes[k].size == conj[k].size());
  }
}

TEST_CASE("nat classes partition the homs") {
  const FiniteGroup G = FiniteGroup::dihedral(3);
  PresentationPtr p = conjugated_loops();
  const NatPartition part = nat_classes(*p, G);
  std::size_t total = 0;
  for (std::size_t k = 0; k < part.classes.size(); ++k) total += part.classes[k].size;
  CHECK(total == part.homs.size());
  for (std::size_t i = 0; i < part.homs.size(); ++i) {
    const NatClass& cls = part.classes[part.class_of[i]];
    CHECK(natural_iso_witness(*p, G, cls.rep, part.homs[i]).has_value());
    CHECK(!(part.homs[i] < cls.rep)); // representative is minimal
  }
  // Distinct classes are not isomorphic.
  for (std::size_t k = 0; k + 1 < part.classes.size(); ++k)
    CHECK(!natural_iso_witness(*p, G, part.classes[k].rep, part.classes[k + 1].rep));
}

TEST_CASE("figure-eight classes under an abelian group are homs") {
  // Simultaneous conjugation is trivial for abelian G.
  const NatPartition part = nat_classes(*figure_eight(), FiniteGroup::cyclic(2));
  CHECK(part.classes.size() == 4);
  for (const NatClass& cls : part.classes) CHECK(cls.size == 1);
}

TEST_CASE("restrict_along and theta_extension") {
  const FiniteGroup S3 = FiniteGroup::symmetric(3);
  const Cospan c = pair_of_pants();
  const auto apex_homs = enumerate_homs(*c.apex, S3);
  for (std::size_t i = 0; i < apex_homs.size(); i += 97) {
    const GroupoidHom r = restrict_along(c.in_left, S3, apex_homs[i]);
    CHECK(r.images.size() == 2);
    CHECK(r.images[0] == apex_homs[i].images[0]); // x1 -> a
    CHECK(r.images[1] == apex_homs[i].images[1]); // x2 -> b
  }
  GroupoidHom f{{2, 5}};
  const GroupoidHom ext = theta_extension(f, 3);
  CHECK(ext.images == std::vector<int>{2, 5, 3});
}

TEST_CASE("g_consistency_check") {
  // Fold a torsion loop onto a free loop: a^2 = 1 has no image relation, so
  // some hom of the target fails to equalize.
  PresentationPtr src = torsion_loop(2);
  PresentationPtr tgt = circle();
  PresentationMap fold{src, tgt, {0}, {generator_word(*tgt, 0)}};
  const FiniteGroup Z3 = FiniteGroup::cyclic(3);
  CHECK(!g_consistency_check(fold, Z3).ok);
  CHECK(g_consistency_check(identity_map(src), Z3).ok);
}
