#include "gtqft/tqft.hpp"

#include "gtqft/errors.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace gtqft {

namespace {

bool same_presentation(const PresentationPtr& a, const PresentationPtr& b) {
  return a == b || (a && b && *a == *b);
}

bool injective_with_image(const std::vector<int>& object_map, std::set<int>& image) {
  for (int o : object_map)
    if (!image.insert(o).second) return false;
  return true;
}

void check_cospan(const Cospan& c, const char* what) {
  std::set<int> all_images;
  if (!injective_with_image(c.in_left.object_map, all_images))
    throw InvariantViolationError(std::string(what) + ": left leg not injective on objects");
  if (!injective_with_image(c.in_right.object_map, all_images))
    throw InvariantViolationError(std::string(what) +
                                  ": boundary images overlap or right leg not injective");
}

Rational normalization(const Cospan& c, const FiniteGroup& G) {
  const int k = c.apex->num_objects() - c.left->num_objects();
  if (k >= 0) return Rational(1, big_pow(G.order(), k));
  return Rational(big_pow(G.order(), -k));
}

} // namespace

std::vector<std::string> validate(const Cospan& c) {
  std::vector<std::string> out;
  if (!c.left || !c.right || !c.apex) return {"cospan has a null presentation"};
  for (const auto* p : {c.left.get(), c.right.get(), c.apex.get()})
    for (const std::string& v : validate(*p)) out.push_back(v);
  for (const std::string& v : validate(c.in_left)) out.push_back("left leg: " + v);
  for (const std::string& v : validate(c.in_right)) out.push_back("right leg: " + v);
  if (!same_presentation(c.in_left.source, c.left) || !same_presentation(c.in_left.target, c.apex))
    out.push_back("left leg endpoints disagree with cospan");
  if (!same_presentation(c.in_right.source, c.right) ||
      !same_presentation(c.in_right.target, c.apex))
    out.push_back("right leg endpoints disagree with cospan");
  if (!out.empty()) return out;
  std::set<int> images;
  if (!injective_with_image(c.in_left.object_map, images))
    out.push_back("left leg object map is not injective");
  if (!injective_with_image(c.in_right.object_map, images))
    out.push_back("right leg object map is not injective or images intersect left leg's");
  return out;
}

Cospan identity_cospan(PresentationPtr px) {
  auto m = std::make_shared<GroupoidPresentation>();
  const int n_obj = px->num_objects();
  const int n_gen = px->num_generators();
  for (const ObjectInfo& o : px->objects()) m->add_object(o.id + "@0", o.label);
  for (const ObjectInfo& o : px->objects()) m->add_object(o.id + "@1", o.label);
  for (const Generator& g : px->generators()) m->add_generator(g.id + "@0", g.src, g.tgt, g.label);
  for (int o = 0; o < n_obj; ++o)
    m->add_generator("tau:" + px->objects()[o].id, o, n_obj + o, "rung");
  for (const Relation& r : px->relations()) m->add_relation(r.lhs, r.rhs); // indices unchanged

  Cospan c;
  c.left = px;
  c.right = px;
  c.apex = m;
  c.label = "identity";

  c.in_left.source = px;
  c.in_left.target = m;
  for (int o = 0; o < n_obj; ++o) c.in_left.object_map.push_back(o);
  for (int a = 0; a < n_gen; ++a) c.in_left.generator_map.push_back(generator_word(*m, a));

  c.in_right.source = px;
  c.in_right.target = m;
  for (int o = 0; o < n_obj; ++o) c.in_right.object_map.push_back(n_obj + o);
  for (int a = 0; a < n_gen; ++a) {
    const Generator& g = px->generators()[a];
    // rung(src)^-1, generator copy, rung(tgt): a loop at level 0 lifted to
    // a morphism between the level-1 copies of its endpoints.
    c.in_right.generator_map.push_back(
        make_word(*m, {{n_gen + g.src, true}, {a, false}, {n_gen + g.tgt, false}}));
  }
  return c;
}

Cospan compose(const Cospan& c1, const Cospan& c2) {
  if (!same_presentation(c1.right, c2.left))
    throw BoundaryMismatchError("compose: right boundary of '" + c1.label +
                                "' differs from left boundary of '" + c2.label + "'");
  // The shared-source requirement of pushout() compares presentations
  // structurally, so rebase c2's left leg onto c1's boundary object.
  PresentationMap g = c2.in_left;
  g.source = c1.right;
  PushoutResult po = pushout(c1.in_right, g);

  Cospan c;
  c.left = c1.left;
  c.right = c2.right;
  c.apex = po.presentation;
  c.in_left = compose_maps(c1.in_left, po.from_left);
  c.in_right = compose_maps(c2.in_right, po.from_right);
  c.label = c1.label + ";" + c2.label;
  check_cospan(c, "compose");
  return c;
}

Cospan tensor(const Cospan& c1, const Cospan& c2) {
  CoproductResult x = coproduct(c1.left, c2.left);
  CoproductResult y = coproduct(c1.right, c2.right);
  CoproductResult m = coproduct(c1.apex, c2.apex);

  auto side_map = [&](const CoproductResult& src, const PresentationMap& m1,
                      const PresentationMap& m2) {
    PresentationMap out;
    out.source = src.presentation;
    out.target = m.presentation;
    out.object_map.resize(src.presentation->num_objects());
    out.generator_map.resize(src.presentation->num_generators());
    auto fill = [&](const PresentationMap& inj_src, const PresentationMap& inj_dst,
                    const PresentationMap& leg) {
      for (std::size_t o = 0; o < inj_src.object_map.size(); ++o)
        out.object_map[inj_src.object_map[o]] = inj_dst.object_map[leg.object_map[o]];
      for (std::size_t a = 0; a < inj_src.generator_map.size(); ++a) {
        const int idx = inj_src.generator_map[a].letters[0].gen;
        out.generator_map[idx] = apply_map(inj_dst, leg.generator_map[a]);
      }
    };
    fill(src.inj_left, m.inj_left, m1);
    fill(src.inj_right, m.inj_right, m2);
    return out;
  };

  Cospan c;
  c.left = x.presentation;
  c.right = y.presentation;
  c.apex = m.presentation;
  c.in_left = side_map(x, c1.in_left, c2.in_left);
  c.in_right = side_map(y, c1.in_right, c2.in_right);
  c.label = c1.label + "|" + c2.label;
  return c;
}

Cospan with_extra_basepoint(const Cospan& c, int at, const std::string& label) {
  BasepointExtension ext = add_basepoint(c.apex, at, label);
  Cospan out = c;
  out.apex = ext.presentation;
  out.in_left.target = ext.presentation;
  out.in_right.target = ext.presentation;
  out.label = c.label + "+bp";
  return out;
}

namespace {

struct HomIndex {
  std::map<std::vector<int>, int> by_assignment;

  explicit HomIndex(const std::vector<GroupoidHom>& homs) {
    for (std::size_t i = 0; i < homs.size(); ++i)
      by_assignment.emplace(homs[i].images, static_cast<int>(i));
  }

  int find(const GroupoidHom& h) const {
    auto it = by_assignment.find(h.images);
    return it == by_assignment.end() ? -1 : it->second;
  }
};

} // namespace

RawMatrix raw_counting_matrix(const Cospan& c, const FiniteGroup& G, const EnumOptions& opts) {
  RawMatrix m;
  m.col_basis = enumerate_homs(*c.left, G, opts);
  m.row_basis = enumerate_homs(*c.right, G, opts);
  const HomIndex cols(m.col_basis), rows(m.row_basis);
  m.entries = RationalMatrix::Zero(static_cast<Eigen::Index>(m.row_basis.size()),
                                   static_cast<Eigen::Index>(m.col_basis.size()));
  for (const GroupoidHom& h : enumerate_homs(*c.apex, G, opts)) {
    const int col = cols.find(restrict_along(c.in_left, G, h));
    const int row = rows.find(restrict_along(c.in_right, G, h));
    if (col < 0 || row < 0)
      throw InvariantViolationError(
          "apex hom restricts outside the boundary hom set; a leg is not "
          "well defined on relations (see g_consistency_check)");
    m.entries(row, col) += Rational(1);
  }
  return m;
}

RawMatrix normalized_counting_matrix(const Cospan& c, const FiniteGroup& G,
                                     const EnumOptions& opts) {
  RawMatrix m = raw_counting_matrix(c, G, opts);
  const Rational scale = normalization(c, G);
  for (Eigen::Index i = 0; i < m.entries.rows(); ++i)
    for (Eigen::Index j = 0; j < m.entries.cols(); ++j) m.entries(i, j) *= scale;
  return m;
}

ClassMatrix class_matrix(const Cospan& c, const FiniteGroup& G, const EnumOptions& opts) {
  const NatPartition px = nat_classes(*c.left, G, opts);
  const NatPartition py = nat_classes(*c.right, G, opts);

  // Column restriction is exact equality to the canonical representative;
  // row restriction is up to natural isomorphism.
  std::map<std::vector<int>, int> rep_col;
  for (std::size_t cl = 0; cl < px.classes.size(); ++cl)
    rep_col.emplace(px.classes[cl].rep.images, static_cast<int>(cl));
  const HomIndex y_homs(py.homs);

  ClassMatrix m;
  m.col_basis = px.classes;
  m.row_basis = py.classes;
  m.entries = RationalMatrix::Zero(static_cast<Eigen::Index>(py.classes.size()),
                                   static_cast<Eigen::Index>(px.classes.size()));
  for (const GroupoidHom& h : enumerate_homs(*c.apex, G, opts)) {
    const auto col_it = rep_col.find(restrict_along(c.in_left, G, h).images);
    if (col_it == rep_col.end()) continue;
    const int row_hom = y_homs.find(restrict_along(c.in_right, G, h));
    if (row_hom < 0)
      throw InvariantViolationError(
          "apex hom restricts outside the right boundary hom set; the leg "
          "is not well defined on relations (see g_consistency_check)");
    m.entries(py.class_of[row_hom], col_it->second) += Rational(1);
  }
  const Rational scale = normalization(c, G);
  for (Eigen::Index i = 0; i < m.entries.rows(); ++i)
    for (Eigen::Index j = 0; j < m.entries.cols(); ++j) m.entries(i, j) *= scale;
  return m;
}

ObjectSpace object_space(const GroupoidPresentation& p, const FiniteGroup& G,
                         const EnumOptions& opts) {
  return {nat_classes(p, G, opts).classes};
}

} // namespace gtqft
