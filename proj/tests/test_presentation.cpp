#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gtqft/errors.hpp"
#include "gtqft/presentation.hpp"

using namespace gtqft;

namespace {

// Two objects, a loop at each, and a bridge between them.
PresentationPtr dumbbell() {
  auto p = std::make_shared<GroupoidPresentation>();
  const int u = p->add_object("u");
  const int v = p->add_object("v");
  p->add_generator("a", u, u);
  p->add_generator("b", v, v);
  p->add_generator("t", u, v);
  return p;
}

} // namespace

TEST_CASE("builder validation") {
  GroupoidPresentation p;
  const int o = p.add_object("o");
  CHECK_THROWS_AS(p.add_object("o"), InvariantViolationError);
  const int a = p.add_generator("a", o, o);
  CHECK_THROWS_AS(p.add_generator("a", o, o), InvariantViolationError);
  CHECK_THROWS_AS(p.add_object("a"), InvariantViolationError); // ids share one namespace
  CHECK_THROWS_AS(p.add_generator("b", o, 1), UnknownObjectError);
  CHECK(p.object_index("o") == 0);
  CHECK(p.generator_index("a") == a);
  CHECK(p.object_index("missing") == -1);
  CHECK(validate(p).empty());
}

TEST_CASE("words: construction and endpoints") {
  PresentationPtr p = dumbbell();
  const int a = 0, b = 1, t = 2;

  const Word wa = generator_word(*p, a);
  CHECK(wa.src == 0);
  CHECK(wa.tgt == 0);
  const Word wt_inv = generator_word(*p, t, true);
  CHECK(wt_inv.src == 1);
  CHECK(wt_inv.tgt == 0);

  // u --t--> v --b--> v --t^-1--> u
  const Word conj = make_word(*p, {{t, false}, {b, false}, {t, true}});
  CHECK(conj.src == 0);
  CHECK(conj.tgt == 0);
  CHECK(word_is_valid(*p, conj));

  CHECK_THROWS_AS(make_word(*p, {{a, false}, {b, false}}), EndpointMismatchError);
  CHECK_THROWS_AS(make_word(*p, {}, -1), UnknownObjectError);
  CHECK(make_word(*p, {}, 1).src == 1);
}

TEST_CASE("free reduction") {
  PresentationPtr p = dumbbell();
  const int a = 0, t = 2;
  // a a^-1 t t^-1 a reduces to a.
  Word w = make_word(*p, {{a, false}, {a, true}, {t, false}, {t, true}, {a, false}});
  w = free_reduce(w);
  REQUIRE(w.letters.size() == 1);
  CHECK(w.letters[0] == Letter{a, false});
  // Reduction cascades: a t t^-1 a^-1 vanishes entirely.
  Word v = free_reduce(make_word(*p, {{a, false}, {t, false}, {t, true}, {a, true}}));
  CHECK(v.empty());
  CHECK(v.src == 0);
  CHECK(v.tgt == 0);
}

TEST_CASE("compose and invert words") {
  PresentationPtr p = dumbbell();
  const int b = 1, t = 2;
  const Word w1 = generator_word(*p, t);        // u -> v
  const Word w2 = generator_word(*p, b);        // v -> v
  const Word w12 = compose_words(w1, w2);       // u -> v
  CHECK(w12.src == 0);
  CHECK(w12.tgt == 1);
  CHECK(w12.letters.size() == 2);
  CHECK_THROWS_AS(compose_words(w2, generator_word(*p, 0)), EndpointMismatchError);

  const Word inv = invert_word(w12); // (b t)^-1 = t^-1 b^-1
  CHECK(inv.src == 1);
  CHECK(inv.tgt == 0);
  CHECK(inv.letters[0] == Letter{b, true});
  CHECK(inv.letters[1] == Letter{t, true});
  CHECK(compose_words(w12, inv).empty());
  CHECK(invert_word(inv) == w12);
}

TEST_CASE("relations check endpoints") {
  auto p = std::make_shared<GroupoidPresentation>();
  const int u = p->add_object("u");
  const int v = p->add_object("v");
  const int a = p->add_generator("a", u, u);
  const int t = p->add_generator("t", u, v);
  p->add_relation(make_word(*p, {{a, false}, {a, false}}), empty_word(u));
  CHECK(p->relations().size() == 1);
  CHECK_THROWS_AS(p->add_relation(generator_word(*p, t), empty_word(u)), EndpointMismatchError);
  CHECK_THROWS_AS(p->add_relation(generator_word(*p, a), empty_word(v)), EndpointMismatchError);
}

TEST_CASE("maps: identity, apply, compose") {
  PresentationPtr p = dumbbell();
  const PresentationMap id = identity_map(p);
  CHECK(validate(id).empty());
  const Word w = make_word(*p, {{2, false}, {1, false}});
  CHECK(apply_map(id, w) == w);

  // Fold v onto u: b -> a, t -> empty loop at u.
  auto q = std::make_shared<GroupoidPresentation>();
  const int o = q->add_object("o");
  const int x = q->add_generator("x", o, o);
  PresentationMap fold;
  fold.source = p;
  fold.target = q;
  fold.object_map = {0, 0};
  fold.generator_map = {generator_word(*q, x), generator_word(*q, x), empty_word(o)};
  CHECK(validate(fold).empty());
  // t b t^-1 a  ->  x x
  const Word img = apply_map(fold, make_word(*p, {{2, false}, {1, false}, {2, true}, {0, false}}));
  CHECK(img.letters.size() == 2);
  CHECK(img == make_word(*q, {{x, false}, {x, false}}));

  const PresentationMap both = compose_maps(identity_map(p), fold);
  CHECK(both.object_map == fold.object_map);
  for (int g = 0; g < p->num_generators(); ++g)
    CHECK(both.generator_map[g] == fold.generator_map[g]);
  CHECK_THROWS_AS(compose_maps(fold, fold), SourceMismatchError);
}

TEST_CASE("coproduct") {
  PresentationPtr p = dumbbell();
  auto q = std::make_shared<GroupoidPresentation>();
  q->add_object("u");
  q->add_generator("a", 0, 0);
  const CoproductResult cop = coproduct(p, q);
  CHECK(cop.presentation->num_objects() == 3);
  CHECK(cop.presentation->num_generators() == 4);
  CHECK(cop.presentation->object_index("a:u") == 0);
  CHECK(cop.presentation->object_index("b:u") == 2);
  CHECK(validate(cop.inj_left).empty());
  CHECK(validate(cop.inj_right).empty());
  CHECK(cop.inj_right.object_map[0] == 2);
  CHECK(cop.inj_right.generator_map[0].letters[0].gen == 3);
}

TEST_CASE("pushout glues objects and keeps relations") {
  // Y = single object, M = dumbbell, N = point; g sends the object of Y to N's
  // point, f sends it to v. The pushout identifies nothing new beyond v ~ n:pt.
  auto y = std::make_shared<GroupoidPresentation>();
  y->add_object("y0");
  y->add_generator("c", 0, 0);
  PresentationPtr m = dumbbell();
  auto n = std::make_shared<GroupoidPresentation>();
  n->add_object("pt");
  n->add_generator("d", 0, 0);

  PresentationMap f{y, m, {1}, {generator_word(*m, 1)}};           // y0 -> v, c -> b
  PresentationMap g{y, n, {0}, {generator_word(*n, 0)}};           // y0 -> pt, c -> d
  const PushoutResult po = pushout(f, g);
  CHECK(po.presentation->num_objects() == 2); // u, v=pt merged
  CHECK(po.presentation->num_generators() == 4);
  CHECK(po.presentation->relations().size() == 1); // the glueing relation b = d
  const Relation& glue = po.presentation->relations()[0];
  CHECK(glue.lhs == generator_word(*po.presentation, 1));
  CHECK(glue.rhs == generator_word(*po.presentation, 3));
  CHECK(validate(po.from_left).empty());
  CHECK(validate(po.from_right).empty());
  // Leg compatibility: both composites agree on Y.
  const PresentationMap left = compose_maps(f, po.from_left);
  const PresentationMap right = compose_maps(g, po.from_right);
  CHECK(left.object_map == right.object_map);

  PresentationMap bad{y, n, {0}, {generator_word(*n, 0)}};
  bad.source = n; // wrong shared source
  CHECK_THROWS_AS(pushout(f, bad), SourceMismatchError);
}

TEST_CASE("pushout merges chains of objects") {
  // Y has two objects both sent to distinct objects of M and the same object
  // of N, forcing a three-way merge.
  auto y = std::make_shared<GroupoidPresentation>();
  y->add_object("y0");
  y->add_object("y1");
  PresentationPtr m = dumbbell();
  auto n = std::make_shared<GroupoidPresentation>();
  n->add_object("pt");
  PresentationMap f{y, m, {0, 1}, {}};
  PresentationMap g{y, n, {0, 0}, {}};
  const PushoutResult po = pushout(f, g);
  CHECK(po.presentation->num_objects() == 1);
  CHECK(po.from_left.object_map == std::vector<int>{0, 0});
}

TEST_CASE("add_basepoint") {
  PresentationPtr p = dumbbell();
  const BasepointExtension ext = add_basepoint(p, 1, "bp");
  CHECK(ext.presentation->num_objects() == 3);
  CHECK(ext.presentation->num_generators() == 4);
  CHECK(ext.presentation->generators()[ext.new_generator].src == 1);
  CHECK(ext.presentation->generators()[ext.new_generator].tgt == ext.new_object);
  // Original is untouched.
  CHECK(p->num_objects() == 2);
  CHECK_THROWS_AS(add_basepoint(p, 9, "bp"), UnknownObjectError);
  // Ids uniquify on collision.
  const BasepointExtension again = add_basepoint(ext.presentation, 0, "bp");
  CHECK(again.presentation->objects()[again.new_object].id == "bp'");
}

TEST_CASE("path components") {
  auto p = std::make_shared<GroupoidPresentation>();
  for (int i = 0; i < 5; ++i) p->add_object("o" + std::to_string(i));
  p->add_generator("a", 0, 2);
  p->add_generator("b", 2, 4);
  p->add_generator("c", 3, 1);
  const auto comps = path_components(*p);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == std::vector<int>{0, 2, 4});
  CHECK(comps[1] == std::vector<int>{1, 3});
}
