#include "gtqft/verify.hpp"

#include "gtqft/builders.hpp"
#include "gtqft/errors.hpp"
#include "gtqft/hom_enum.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace gtqft::verify {

namespace {

int draw(std::mt19937_64& rng, int n) { return static_cast<int>(rng() % static_cast<unsigned>(n)); }

struct Checks {
  Json list = Json::array();
  bool all = true;

  void add(const std::string& name, bool pass, Json detail = {}) {
    Json c;
    c["check"] = name;
    c["pass"] = pass;
    if (!detail.is_null()) c["detail"] = std::move(detail);
    list.push_back(std::move(c));
    all = all && pass;
  }
};

SuiteResult finish(const std::string& suite, Checks&& checks) {
  SuiteResult r;
  r.suite = suite;
  r.passed = checks.all;
  r.report["suite"] = suite;
  r.report["passed"] = checks.all;
  r.report["checks"] = std::move(checks.list);
  return r;
}

// ---- random fixtures ------------------------------------------------------

std::vector<Letter> incident_letters(const GroupoidPresentation& p, int object) {
  std::vector<Letter> out;
  for (int a = 0; a < p.num_generators(); ++a) {
    if (p.generators()[a].src == object) out.push_back({a, false});
    if (p.generators()[a].tgt == object) out.push_back({a, true});
  }
  return out;
}

std::vector<Letter> shortest_path_letters(const GroupoidPresentation& p, int from, int to) {
  if (from == to) return {};
  std::vector<int> prev_obj(p.num_objects(), -1);
  std::vector<Letter> prev_letter(p.num_objects(), {-1, false});
  std::vector<int> queue{from};
  prev_obj[from] = from;
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const int o = queue[q];
    for (const Letter& l : incident_letters(p, o)) {
      const Generator& g = p.generators()[l.gen];
      const int nb = l.inverse ? g.src : g.tgt;
      if (prev_obj[nb] >= 0) continue;
      prev_obj[nb] = o;
      prev_letter[nb] = l;
      queue.push_back(nb);
    }
  }
  if (prev_obj[to] < 0) throw InvariantViolationError("random fixture: objects not connected");
  std::vector<Letter> path;
  for (int o = to; o != from; o = prev_obj[o]) path.push_back(prev_letter[o]);
  std::reverse(path.begin(), path.end());
  return path;
}

} // namespace

Word random_word(std::mt19937_64& rng, const GroupoidPresentation& p, int from, int to,
                 int walk_length) {
  std::vector<Letter> letters;
  int at = from;
  for (int k = 0; k < walk_length; ++k) {
    const auto options = incident_letters(p, at);
    if (options.empty()) break;
    const Letter l = options[draw(rng, static_cast<int>(options.size()))];
    letters.push_back(l);
    const Generator& g = p.generators()[l.gen];
    at = l.inverse ? g.src : g.tgt;
  }
  for (const Letter& l : shortest_path_letters(p, at, to)) letters.push_back(l);
  return free_reduce(make_word(p, letters, from));
}

PresentationPtr random_connected_presentation(std::mt19937_64& rng, int max_objects,
                                              int max_extra_gens, int max_relations) {
  auto p = std::make_shared<GroupoidPresentation>();
  const int n_obj = 1 + draw(rng, max_objects);
  for (int o = 0; o < n_obj; ++o) p->add_object("o" + std::to_string(o));
  for (int o = 1; o < n_obj; ++o)
    p->add_generator("c" + std::to_string(o), o - 1, o);
  const int extra = draw(rng, max_extra_gens + 1);
  for (int e = 0; e < extra; ++e)
    p->add_generator("e" + std::to_string(e), draw(rng, n_obj), draw(rng, n_obj));
  const int rels = draw(rng, max_relations + 1);
  for (int r = 0; r < rels; ++r) {
    const int u = draw(rng, n_obj), v = draw(rng, n_obj);
    const Word lhs = random_word(rng, *p, u, v, 2 + draw(rng, 3));
    const Word rhs = random_word(rng, *p, u, v, draw(rng, 3));
    p->add_relation(lhs, rhs);
  }
  return p;
}

PresentationPtr random_presentation(std::mt19937_64& rng, int max_objects, int max_gens) {
  auto p = std::make_shared<GroupoidPresentation>();
  const int n_obj = 1 + draw(rng, max_objects);
  for (int o = 0; o < n_obj; ++o) p->add_object("o" + std::to_string(o));
  const int gens = draw(rng, max_gens + 1);
  for (int a = 0; a < gens; ++a)
    p->add_generator("g" + std::to_string(a), draw(rng, n_obj), draw(rng, n_obj));
  return p;
}

PresentationMap random_map(std::mt19937_64& rng, PresentationPtr source, PresentationPtr target) {
  PresentationMap m;
  m.source = source;
  m.target = target;
  for (int o = 0; o < source->num_objects(); ++o)
    m.object_map.push_back(draw(rng, target->num_objects()));
  for (int a = 0; a < source->num_generators(); ++a) {
    const Generator& g = source->generators()[a];
    m.generator_map.push_back(
        random_word(rng, *target, m.object_map[g.src], m.object_map[g.tgt], draw(rng, 3)));
  }
  return m;
}

Cospan random_cospan(std::mt19937_64& rng, PresentationPtr x, PresentationPtr y, int extra_gens,
                     int extra_relations) {
  CoproductResult cop = coproduct(x, y);
  auto apex = std::make_shared<GroupoidPresentation>(*cop.presentation);
  const int n_obj = apex->num_objects();
  const int gens = draw(rng, extra_gens + 1);
  for (int e = 0; e < gens; ++e)
    apex->add_generator("glue" + std::to_string(e), draw(rng, n_obj), draw(rng, n_obj));
  const int rels = draw(rng, extra_relations + 1);
  for (int r = 0; r < rels; ++r) {
    const auto comps = path_components(*apex);
    const auto& comp = comps[draw(rng, static_cast<int>(comps.size()))];
    const int u = comp[draw(rng, static_cast<int>(comp.size()))];
    const int v = comp[draw(rng, static_cast<int>(comp.size()))];
    apex->add_relation(random_word(rng, *apex, u, v, 2 + draw(rng, 2)),
                       random_word(rng, *apex, u, v, draw(rng, 2)));
  }
  Cospan c;
  c.left = x;
  c.right = y;
  c.apex = apex;
  c.in_left = cop.inj_left;
  c.in_left.target = apex;
  c.in_right = cop.inj_right;
  c.in_right.target = apex;
  c.label = "random";
  return c;
}

// ---- suites ----------------------------------------------------------------

namespace {

std::int64_t max_total_generators(const FiniteGroup& G, std::int64_t candidate_cap) {
  std::int64_t total = 0;
  std::int64_t c = 1;
  while (c <= candidate_cap / std::max(G.order(), 2)) {
    c *= G.order();
    ++total;
  }
  return total;
}

SuiteResult suite_group_axioms(const FiniteGroup& G) {
  Checks ch;
  const int n = G.order();
  bool assoc = true, ident = true, inverse = true;
  for (int a = 0; a < n && assoc; ++a)
    for (int b = 0; b < n && assoc; ++b)
      for (int c = 0; c < n && assoc; ++c)
        assoc = G.mul(G.mul(a, b), c) == G.mul(a, G.mul(b, c));
  for (int a = 0; a < n; ++a) {
    ident = ident && G.mul(G.identity(), a) == a && G.mul(a, G.identity()) == a;
    inverse = inverse && G.mul(G.inv(a), a) == G.identity() && G.mul(a, G.inv(a)) == G.identity();
    inverse = inverse && G.inv(G.inv(a)) == a;
  }
  ch.add("associativity", assoc);
  ch.add("identity", ident);
  ch.add("inverses", inverse);

  const auto classes = G.conjugacy_classes();
  std::set<int> covered;
  bool closed = true;
  for (const auto& cls : classes) {
    for (int x : cls) covered.insert(x);
    for (int x : cls)
      for (int g = 0; g < n; ++g)
        closed = closed && std::binary_search(cls.begin(), cls.end(), G.conj(g, x));
  }
  ch.add("conjugacy_partition", static_cast<int>(covered.size()) == n);
  ch.add("conjugacy_closed", closed);
  ch.add("identity_class_singleton",
         classes.front().size() == 1 && classes.front().front() == G.identity());
  return finish("group-axioms", std::move(ch));
}

SuiteResult suite_pushout_oracle(const FiniteGroup& G, std::uint64_t seed,
                                 const EnumOptions& opts) {
  Checks ch;
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < 50; ++trial) {
    PresentationPtr py = random_presentation(rng, 2, 2);
    PresentationPtr pm = random_connected_presentation(rng, 3, 2, 1);
    PresentationPtr pn = random_connected_presentation(rng, 3, 2, 1);
    const PresentationMap f = random_map(rng, py, pm);
    const PresentationMap g = random_map(rng, py, pn);
    const PushoutResult po = pushout(f, g);

    const auto homs_p = enumerate_homs(*po.presentation, G, opts);
    const auto homs_m = enumerate_homs(*pm, G, opts);
    const auto homs_n = enumerate_homs(*pn, G, opts);
    std::size_t pairs = 0;
    for (const GroupoidHom& h1 : homs_m) {
      for (const GroupoidHom& h2 : homs_n) {
        bool agree = true;
        for (int b = 0; b < py->num_generators() && agree; ++b)
          agree = evaluate(G, h1, f.generator_map[b]) == evaluate(G, h2, g.generator_map[b]);
        if (agree) ++pairs;
      }
    }

    // Object count against a naive equivalence-closure oracle.
    const int nM = pm->num_objects();
    std::vector<int> cls(nM + pn->num_objects());
    for (std::size_t i = 0; i < cls.size(); ++i) cls[i] = static_cast<int>(i);
    bool changed = true;
    while (changed) {
      changed = false;
      for (int y = 0; y < py->num_objects(); ++y) {
        const int a = cls[f.object_map[y]], b = cls[nM + g.object_map[y]];
        if (a != b) {
          const int lo = std::min(a, b), hi = std::max(a, b);
          for (int& c : cls)
            if (c == hi) c = lo;
          changed = true;
        }
      }
    }
    const int oracle_objects =
        static_cast<int>(std::set<int>(cls.begin(), cls.end()).size());

    const bool ok_count = homs_p.size() == pairs;
    const bool ok_obj = po.presentation->num_objects() == oracle_objects;
    if (!ok_count || !ok_obj || trial == 49) {
      Json d;
      d["trial"] = trial;
      d["pushout_homs"] = homs_p.size();
      d["agreeing_pairs"] = pairs;
      d["pushout_objects"] = po.presentation->num_objects();
      d["oracle_objects"] = oracle_objects;
      ch.add("trial_" + std::to_string(trial), ok_count && ok_obj, std::move(d));
      if (!ok_count || !ok_obj) break;
    }
  }
  return finish("pushout-oracle", std::move(ch));
}

SuiteResult suite_basepoint_invariance(const FiniteGroup& G, const EnumOptions& opts) {
  Checks ch;
  const Rational order(G.order());
  for (const Cospan& c :
       {pair_of_pants(), three_strand_tube(), artin_braid_generator(2, 1)}) {
    const RawMatrix raw = raw_counting_matrix(c, G, opts);
    const RawMatrix norm = normalized_counting_matrix(c, G, opts);
    const ClassMatrix cls = class_matrix(c, G, opts);
    for (int at = 0; at < c.apex->num_objects(); ++at) {
      const Cospan cb = with_extra_basepoint(c, at, "extra");
      RationalMatrix scaled = raw.entries;
      for (Eigen::Index i = 0; i < scaled.rows(); ++i)
        for (Eigen::Index j = 0; j < scaled.cols(); ++j) scaled(i, j) *= order;
      const bool raw_ok = matrices_equal(raw_counting_matrix(cb, G, opts).entries, scaled);
      const bool norm_ok =
          matrices_equal(normalized_counting_matrix(cb, G, opts).entries, norm.entries);
      const bool cls_ok = matrices_equal(class_matrix(cb, G, opts).entries, cls.entries);
      Json d;
      d["cospan"] = c.label;
      d["object"] = c.apex->objects()[at].id;
      d["raw_scales_by_order"] = raw_ok;
      d["normalized_unchanged"] = norm_ok;
      d["class_matrix_unchanged"] = cls_ok;
      ch.add(c.label + "@" + c.apex->objects()[at].id, raw_ok && norm_ok && cls_ok,
             std::move(d));
    }
  }
  return finish("basepoint-invariance", std::move(ch));
}

SuiteResult suite_functoriality(const FiniteGroup& G, std::uint64_t seed,
                                const EnumOptions& opts) {
  Checks ch;
  std::mt19937_64 rng(seed);
  const std::int64_t gen_cap = max_total_generators(G, 2'000'000);
  int produced = 0;
  while (produced < 20) {
    PresentationPtr x = random_connected_presentation(rng, 2, 1, 1);
    PresentationPtr y = random_connected_presentation(rng, 2, 1, 1);
    PresentationPtr z = random_connected_presentation(rng, 2, 1, 1);
    Cospan c1 = random_cospan(rng, x, y, 1, 1);
    Cospan c2 = random_cospan(rng, y, z, 1, 1);
    if (c1.apex->num_generators() + c2.apex->num_generators() > gen_cap) continue;
    const Cospan cc = compose(c1, c2);
    const ClassMatrix m1 = class_matrix(c1, G, opts);
    const ClassMatrix m2 = class_matrix(c2, G, opts);
    const ClassMatrix mc = class_matrix(cc, G, opts);
    const RationalMatrix product = m2.entries * m1.entries;
    const bool ok = matrices_equal(mc.entries, product);
    Json d;
    d["pair"] = produced;
    d["composed_generators"] = cc.apex->num_generators();
    d["dims"] = {mc.entries.rows(), mc.entries.cols()};
    ch.add("pair_" + std::to_string(produced), ok, std::move(d));
    ++produced;
    if (!ok) break;
  }
  return finish("functoriality", std::move(ch));
}

bool is_identity_matrix(const RationalMatrix& m) {
  if (m.rows() != m.cols()) return false;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (m(i, j) != (i == j ? Rational(1) : Rational(0))) return false;
  return true;
}

SuiteResult suite_identity(const FiniteGroup& G, const EnumOptions& opts) {
  Checks ch;
  const std::vector<std::pair<std::string, PresentationPtr>> spaces = {
      {"circle", circle()},
      {"two_circles", coproduct(circle(), circle()).presentation},
      {"figure_eight", figure_eight()},
      {"empty", empty_presentation()},
  };
  for (const auto& [name, p] : spaces) {
    const ClassMatrix m = class_matrix(identity_cospan(p), G, opts);
    Json d;
    d["dimension"] = m.entries.rows();
    ch.add(name, is_identity_matrix(m.entries), std::move(d));
  }
  return finish("identity", std::move(ch));
}

/// Cylinder-like cospan on the circle whose right loop reads the square of
/// the left one; a handy non-identity fixture.
Cospan squaring_cospan() {
  PresentationPtr x = circle();
  PresentationPtr y = circle();
  auto m = std::make_shared<GroupoidPresentation>();
  const int mx = m->add_object("mx");
  const int my = m->add_object("my");
  const int a = m->add_generator("a", mx, mx);
  const int t = m->add_generator("t", mx, my);
  Cospan c;
  c.left = x;
  c.right = y;
  c.apex = m;
  c.in_left = {x, m, {mx}, {generator_word(*m, a)}};
  c.in_right = {y, m, {my}, {make_word(*m, {{t, true}, {a, false}, {a, false}, {t, false}})}};
  c.label = "squaring";
  return c;
}

// Pairing of the tensor class basis with pairs of factor classes, via
// restriction along the coproduct inclusions.
std::vector<std::pair<int, int>> product_basis_pairing(const Cospan& c1, const Cospan& c2,
                                                       bool right_side, const FiniteGroup& G,
                                                       const std::vector<NatClass>& tensor_basis,
                                                       const NatPartition& part1,
                                                       const NatPartition& part2,
                                                       const EnumOptions& opts) {
  const CoproductResult cop = right_side ? coproduct(c1.right, c2.right)
                                         : coproduct(c1.left, c2.left);
  std::map<std::vector<int>, int> idx1, idx2;
  for (std::size_t i = 0; i < part1.homs.size(); ++i) idx1.emplace(part1.homs[i].images, i);
  for (std::size_t i = 0; i < part2.homs.size(); ++i) idx2.emplace(part2.homs[i].images, i);
  std::vector<std::pair<int, int>> pairing;
  for (const NatClass& cl : tensor_basis) {
    const GroupoidHom r1 = restrict_along(cop.inj_left, G, cl.rep);
    const GroupoidHom r2 = restrict_along(cop.inj_right, G, cl.rep);
    pairing.push_back({part1.class_of[idx1.at(r1.images)], part2.class_of[idx2.at(r2.images)]});
  }
  (void)opts;
  return pairing;
}

bool kronecker_matches(const Cospan& c1, const Cospan& c2, const FiniteGroup& G,
                       const EnumOptions& opts, Json* detail) {
  const Cospan ct = tensor(c1, c2);
  const ClassMatrix m1 = class_matrix(c1, G, opts);
  const ClassMatrix m2 = class_matrix(c2, G, opts);
  const ClassMatrix mt = class_matrix(ct, G, opts);
  const NatPartition px1 = nat_classes(*c1.left, G, opts);
  const NatPartition px2 = nat_classes(*c2.left, G, opts);
  const NatPartition py1 = nat_classes(*c1.right, G, opts);
  const NatPartition py2 = nat_classes(*c2.right, G, opts);
  if (mt.entries.cols() !=
          static_cast<Eigen::Index>(px1.classes.size() * px2.classes.size()) ||
      mt.entries.rows() != static_cast<Eigen::Index>(py1.classes.size() * py2.classes.size()))
    return false;
  const auto col_pairs = product_basis_pairing(c1, c2, false, G, mt.col_basis, px1, px2, opts);
  const auto row_pairs = product_basis_pairing(c1, c2, true, G, mt.row_basis, py1, py2, opts);
  for (Eigen::Index r = 0; r < mt.entries.rows(); ++r)
    for (Eigen::Index c = 0; c < mt.entries.cols(); ++c) {
      const Rational expected = m1.entries(row_pairs[r].first, col_pairs[c].first) *
                                m2.entries(row_pairs[r].second, col_pairs[c].second);
      if (mt.entries(r, c) != expected) {
        if (detail) {
          (*detail)["row"] = r;
          (*detail)["col"] = c;
          (*detail)["got"] = mt.entries(r, c).str();
          (*detail)["expected"] = expected.str();
        }
        return false;
      }
    }
  if (detail) {
    (*detail)["dims"] = {mt.entries.rows(), mt.entries.cols()};
  }
  return true;
}

SuiteResult suite_tensor(const FiniteGroup& G, const EnumOptions& opts) {
  Checks ch;
  const Cospan sq = squaring_cospan();
  const Cospan id_circle = identity_cospan(circle());
  const Cospan id_empty = identity_cospan(empty_presentation());
  {
    Json d;
    ch.add("squaring_x_squaring", kronecker_matches(sq, sq, G, opts, &d), std::move(d));
  }
  {
    Json d;
    ch.add("squaring_x_identity", kronecker_matches(sq, id_circle, G, opts, &d), std::move(d));
  }
  {
    // Tensoring with the empty cospan leaves the matrix unchanged.
    const ClassMatrix plain = class_matrix(sq, G, opts);
    const ClassMatrix padded = class_matrix(tensor(sq, id_empty), G, opts);
    ch.add("unit", matrices_equal(plain.entries, padded.entries));
  }
  return finish("tensor", std::move(ch));
}

SuiteResult suite_braid_relations(const FiniteGroup& G, const EnumOptions& opts) {
  Checks ch;
  auto fg = [&](const Cospan& c) { return class_matrix(c, G, opts).entries; };
  {
    const RationalMatrix s1 = fg(artin_braid_generator(2, 1));
    const RationalMatrix s1i = fg(artin_braid_generator(2, 1, true));
    ch.add("inverse_n2", is_identity_matrix(s1 * s1i) && is_identity_matrix(s1i * s1));
  }
  {
    const RationalMatrix s1 = fg(artin_braid_generator(3, 1));
    const RationalMatrix s2 = fg(artin_braid_generator(3, 2));
    ch.add("braid_relation_n3", matrices_equal(s1 * s2 * s1, s2 * s1 * s2));
  }
  {
    const RationalMatrix s1 = fg(artin_braid_generator(4, 1));
    const RationalMatrix s3 = fg(artin_braid_generator(4, 3));
    ch.add("far_commutation_n4", matrices_equal(s1 * s3, s3 * s1));
  }
  {
    const RationalMatrix r1 = fg(loop_braid_generator(2, 1, LoopKind::permutation));
    ch.add("loop_permutation_involution_n2", is_identity_matrix(r1 * r1));
  }
  {
    const RationalMatrix b1 = fg(loop_braid_generator(3, 1, LoopKind::band));
    const RationalMatrix b2 = fg(loop_braid_generator(3, 2, LoopKind::band));
    const RationalMatrix r1 = fg(loop_braid_generator(3, 1, LoopKind::permutation));
    const RationalMatrix r2 = fg(loop_braid_generator(3, 2, LoopKind::permutation));
    ch.add("loop_band_braid_relation_n3", matrices_equal(b1 * b2 * b1, b2 * b1 * b2));
    ch.add("loop_permutation_braid_relation_n3", matrices_equal(r1 * r2 * r1, r2 * r1 * r2));
    ch.add("loop_mixed_relation_n3", matrices_equal(r1 * r2 * b1, b2 * r1 * r2));
  }
  return finish("braid-relations", std::move(ch));
}

} // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "group-axioms",     "pushout-oracle", "basepoint-invariance", "functoriality",
      "identity",         "tensor",         "braid-relations"};
  return names;
}

SuiteResult run_suite(const std::string& name, const FiniteGroup& G, std::uint64_t seed,
                      const EnumOptions& opts) {
  if (name == "group-axioms") return suite_group_axioms(G);
  if (name == "pushout-oracle") return suite_pushout_oracle(G, seed, opts);
  if (name == "basepoint-invariance") return suite_basepoint_invariance(G, opts);
  if (name == "functoriality") return suite_functoriality(G, seed, opts);
  if (name == "identity") return suite_identity(G, opts);
  if (name == "tensor") return suite_tensor(G, opts);
  if (name == "braid-relations") return suite_braid_relations(G, opts);
  throw Error("unknown verify suite '" + name + "'");
}

} // namespace gtqft::verify
