#include "gtqft/builders.hpp"

#include "gtqft/errors.hpp"

#include <numeric>

namespace gtqft {

namespace {

// Builds a word from factors written in group notation (leftmost factor
// applied last), reversing into application order.
Word group_word(const GroupoidPresentation& p, std::vector<Letter> factors, int object_if_empty) {
  std::vector<Letter> letters(factors.rbegin(), factors.rend());
  return make_word(p, letters, object_if_empty);
}

void check_strand_index(int n, int i) {
  if (n < 2 || i < 1 || i >= n)
    throw IndexOutOfRangeError("need 1 <= i < n, got i=" + std::to_string(i) +
                               ", n=" + std::to_string(n));
}

Cospan twisted_cylinder(PresentationPtr wedge, const PresentationMap& twist,
                        const std::string& label) {
  Cospan c = identity_cospan(wedge);
  c.in_left = compose_maps(twist, c.in_left);
  c.label = label;
  return c;
}

} // namespace

PresentationPtr free_loops(int n, const std::string& object_id) {
  auto p = std::make_shared<GroupoidPresentation>();
  const int o = p->add_object(object_id);
  for (int k = 1; k <= n; ++k) p->add_generator("x" + std::to_string(k), o, o);
  return p;
}

PresentationPtr circle() { return free_loops(1); }

PresentationPtr figure_eight() { return free_loops(2); }

PresentationPtr empty_presentation() { return std::make_shared<GroupoidPresentation>(); }

Cospan pair_of_pants() {
  auto x = std::make_shared<GroupoidPresentation>();
  const int xp = x->add_object("p");
  const int xq = x->add_object("q");
  x->add_generator("x1", xp, xp);
  x->add_generator("x2", xq, xq);

  auto y = std::make_shared<GroupoidPresentation>();
  const int yr = y->add_object("r");
  y->add_generator("y1", yr, yr);

  auto m = std::make_shared<GroupoidPresentation>();
  const int p = m->add_object("p");
  const int q = m->add_object("q");
  const int r = m->add_object("r");
  const int a = m->add_generator("a", p, p);
  const int b = m->add_generator("b", q, q);
  const int c = m->add_generator("c", r, p);
  const int d = m->add_generator("d", p, q);

  Cospan cs;
  cs.left = x;
  cs.right = y;
  cs.apex = m;
  cs.label = "pair_of_pants";
  cs.in_left = {x, m, {p, q}, {generator_word(*m, a), generator_word(*m, b)}};
  // y1 traverses c, loops through a, conjugates b through d, and returns:
  // evaluation gives c^-1 d^-1 b d a c.
  cs.in_right = {y,
                 m,
                 {r},
                 {make_word(*m, {{c, false}, {a, false}, {d, false}, {b, false}, {d, true},
                                 {c, true}})}};
  return cs;
}

Cospan three_strand_tube() {
  auto x = std::make_shared<GroupoidPresentation>();
  const int u = x->add_object("u");
  x->add_object("v");
  x->add_object("w");
  x->add_generator("x1", u, u);
  x->add_generator("x2", u, u);

  auto y = std::make_shared<GroupoidPresentation>();
  const int yy = y->add_object("y");
  y->add_object("z");
  y->add_generator("y1", yy, yy);

  auto m = std::make_shared<GroupoidPresentation>();
  const int p = m->add_object("p");  // outer component, image of u
  const int s = m->add_object("s");  // outer component, image of y
  const int q = m->add_object("q");  // contractible component
  const int r = m->add_object("r");
  const int t = m->add_object("t");
  const int xm1 = m->add_generator("x1", p, p);
  const int xm2 = m->add_generator("x2", p, p);
  const int g3 = m->add_generator("g3", p, s);
  m->add_generator("g1", q, t);
  m->add_generator("g2", r, t);

  Cospan cs;
  cs.left = x;
  cs.right = y;
  cs.apex = m;
  cs.label = "three_strand_tube";
  cs.in_left = {x, m, {p, q, r}, {generator_word(*m, xm1), generator_word(*m, xm2)}};
  // y1 = g3 . (x2 x1 loop) . g3^-1, evaluating to e x2 x1 e^-1.
  cs.in_right = {y,
                 m,
                 {s, t},
                 {make_word(*m, {{g3, true}, {xm1, false}, {xm2, false}, {g3, false}})}};
  return cs;
}

PresentationMap artin_automorphism(PresentationPtr wedge, int i, bool inverse) {
  const int n = wedge->num_generators();
  check_strand_index(n, i);
  const int lo = i - 1, hi = i; // 0-based strand pair
  PresentationMap m = identity_map(wedge);
  if (!inverse) {
    // x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i
    m.generator_map[lo] =
        group_word(*wedge, {{lo, false}, {hi, false}, {lo, true}}, 0);
    m.generator_map[hi] = generator_word(*wedge, lo);
  } else {
    // x_i -> x_{i+1}, x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}
    m.generator_map[lo] = generator_word(*wedge, hi);
    m.generator_map[hi] =
        group_word(*wedge, {{hi, true}, {lo, false}, {hi, false}}, 0);
  }
  return m;
}

PresentationMap loop_braid_automorphism(PresentationPtr wedge, int i, LoopKind kind,
                                        bool inverse) {
  const int n = wedge->num_generators();
  check_strand_index(n, i);
  const int lo = i - 1, hi = i;
  PresentationMap m = identity_map(wedge);
  if (kind == LoopKind::permutation) {
    m.generator_map[lo] = generator_word(*wedge, hi);
    m.generator_map[hi] = generator_word(*wedge, lo);
  } else if (!inverse) {
    // band: x_i -> x_{i+1}, x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}
    m.generator_map[lo] = generator_word(*wedge, hi);
    m.generator_map[hi] =
        group_word(*wedge, {{hi, true}, {lo, false}, {hi, false}}, 0);
  } else {
    m.generator_map[lo] =
        group_word(*wedge, {{lo, false}, {hi, false}, {lo, true}}, 0);
    m.generator_map[hi] = generator_word(*wedge, lo);
  }
  return m;
}

Cospan artin_braid_generator(int n, int i, bool inverse) {
  PresentationPtr wedge = free_loops(n);
  return twisted_cylinder(wedge, artin_automorphism(wedge, i, inverse),
                          "braid:s" + std::to_string(i) + (inverse ? "^-1" : "") + ":n" +
                              std::to_string(n));
}

Cospan loop_braid_generator(int n, int i, LoopKind kind, bool inverse) {
  PresentationPtr wedge = free_loops(n);
  const std::string sym = kind == LoopKind::band ? "sigma" : "rho";
  return twisted_cylinder(wedge, loop_braid_automorphism(wedge, i, kind, inverse),
                          "loop_braid:" + sym + std::to_string(i) + (inverse ? "^-1" : "") +
                              ":n" + std::to_string(n));
}

} // namespace gtqft
