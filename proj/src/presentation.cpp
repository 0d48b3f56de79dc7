#include "gtqft/presentation.hpp"

#include "gtqft/errors.hpp"

#include <algorithm>
#include <numeric>

namespace gtqft {

namespace {

struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  // Keeps the smaller index as representative.
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent[b] = a;
  }
};

bool same_presentation(const PresentationPtr& a, const PresentationPtr& b) {
  return a == b || (a && b && *a == *b);
}

} // namespace

int GroupoidPresentation::add_object(const std::string& id, const std::string& label) {
  if (!id_is_fresh(id)) throw InvariantViolationError("duplicate id: " + id);
  objects_.push_back({id, label});
  const int idx = num_objects() - 1;
  object_index_[id] = idx;
  return idx;
}

int GroupoidPresentation::add_generator(const std::string& id, int src, int tgt,
                                        const std::string& label) {
  if (!id_is_fresh(id)) throw InvariantViolationError("duplicate id: " + id);
  if (src < 0 || src >= num_objects() || tgt < 0 || tgt >= num_objects())
    throw UnknownObjectError("generator " + id + " has undeclared endpoint");
  generators_.push_back({id, src, tgt, label});
  const int idx = num_generators() - 1;
  generator_index_[id] = idx;
  return idx;
}

void GroupoidPresentation::add_relation(Word lhs, Word rhs) {
  if (!word_is_valid(*this, lhs) || !word_is_valid(*this, rhs))
    throw EndpointMismatchError("relation side is not a valid word");
  if (lhs.src != rhs.src || lhs.tgt != rhs.tgt)
    throw EndpointMismatchError("relation sides have mismatched endpoints");
  relations_.push_back({std::move(lhs), std::move(rhs)});
}

int GroupoidPresentation::object_index(const std::string& id) const {
  auto it = object_index_.find(id);
  return it == object_index_.end() ? -1 : it->second;
}

int GroupoidPresentation::generator_index(const std::string& id) const {
  auto it = generator_index_.find(id);
  return it == generator_index_.end() ? -1 : it->second;
}

bool GroupoidPresentation::id_is_fresh(const std::string& id) const {
  return object_index(id) < 0 && generator_index(id) < 0;
}

bool word_is_valid(const GroupoidPresentation& p, const Word& w) {
  if (w.src < 0 || w.src >= p.num_objects() || w.tgt < 0 || w.tgt >= p.num_objects())
    return false;
  int at = w.src;
  for (const Letter& l : w.letters) {
    if (l.gen < 0 || l.gen >= p.num_generators()) return false;
    const Generator& g = p.generators()[l.gen];
    const int from = l.inverse ? g.tgt : g.src;
    const int to = l.inverse ? g.src : g.tgt;
    if (from != at) return false;
    at = to;
  }
  return at == w.tgt;
}

std::vector<std::string> validate(const GroupoidPresentation& p) {
  std::vector<std::string> out;
  // Builder methods already reject duplicate ids and dangling endpoints, but
  // presentations arriving from JSON are re-checked here wholesale.
  for (int i = 0; i < p.num_generators(); ++i) {
    const Generator& g = p.generators()[i];
    if (g.src < 0 || g.src >= p.num_objects())
      out.push_back("generator " + g.id + ": undeclared source object");
    if (g.tgt < 0 || g.tgt >= p.num_objects())
      out.push_back("generator " + g.id + ": undeclared target object");
  }
  for (std::size_t r = 0; r < p.relations().size(); ++r) {
    const Relation& rel = p.relations()[r];
    if (!word_is_valid(p, rel.lhs))
      out.push_back("relation " + std::to_string(r) + ": left side is not a valid word");
    if (!word_is_valid(p, rel.rhs))
      out.push_back("relation " + std::to_string(r) + ": right side is not a valid word");
    if (rel.lhs.src != rel.rhs.src || rel.lhs.tgt != rel.rhs.tgt)
      out.push_back("relation " + std::to_string(r) + ": sides have mismatched endpoints");
  }
  return out;
}

Word empty_word(int object) { return Word{{}, object, object}; }

Word generator_word(const GroupoidPresentation& p, int gen, bool inverse) {
  if (gen < 0 || gen >= p.num_generators())
    throw UnknownGeneratorError("generator index " + std::to_string(gen));
  const Generator& g = p.generators()[gen];
  Word w;
  w.letters = {{gen, inverse}};
  w.src = inverse ? g.tgt : g.src;
  w.tgt = inverse ? g.src : g.tgt;
  return w;
}

Word make_word(const GroupoidPresentation& p, const std::vector<Letter>& letters,
               int object_if_empty) {
  if (letters.empty()) {
    if (object_if_empty < 0 || object_if_empty >= p.num_objects())
      throw UnknownObjectError("empty word needs a valid object");
    return empty_word(object_if_empty);
  }
  Word w;
  w.letters = letters;
  const Generator& first = p.generators().at(letters.front().gen);
  w.src = letters.front().inverse ? first.tgt : first.src;
  const Generator& last = p.generators().at(letters.back().gen);
  w.tgt = letters.back().inverse ? last.src : last.tgt;
  if (!word_is_valid(p, w)) throw EndpointMismatchError("letters are not composable");
  return w;
}

Word free_reduce(Word w) {
  std::vector<Letter> out;
  out.reserve(w.letters.size());
  for (const Letter& l : w.letters) {
    if (!out.empty() && out.back().gen == l.gen && out.back().inverse != l.inverse)
      out.pop_back();
    else
      out.push_back(l);
  }
  w.letters = std::move(out);
  return w;
}

Word compose_words(const Word& w1, const Word& w2) {
  if (w1.tgt != w2.src)
    throw EndpointMismatchError("compose_words: target of first != source of second");
  Word w;
  w.src = w1.src;
  w.tgt = w2.tgt;
  w.letters = w1.letters;
  w.letters.insert(w.letters.end(), w2.letters.begin(), w2.letters.end());
  return free_reduce(std::move(w));
}

Word invert_word(const Word& w) {
  Word r;
  r.src = w.tgt;
  r.tgt = w.src;
  r.letters.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    r.letters.push_back({it->gen, !it->inverse});
  return r;
}

std::vector<std::string> validate(const PresentationMap& m) {
  std::vector<std::string> out;
  if (!m.source || !m.target) return {"map has null endpoint presentation"};
  if (static_cast<int>(m.object_map.size()) != m.source->num_objects())
    out.push_back("object map size mismatch");
  if (static_cast<int>(m.generator_map.size()) != m.source->num_generators())
    out.push_back("generator map size mismatch");
  if (!out.empty()) return out;
  for (int o = 0; o < m.source->num_objects(); ++o)
    if (m.object_map[o] < 0 || m.object_map[o] >= m.target->num_objects())
      out.push_back("object " + m.source->objects()[o].id + " maps outside target");
  for (int a = 0; a < m.source->num_generators(); ++a) {
    const Generator& g = m.source->generators()[a];
    const Word& w = m.generator_map[a];
    if (!word_is_valid(*m.target, w)) {
      out.push_back("generator " + g.id + " maps to an invalid word");
      continue;
    }
    if (w.src != m.object_map[g.src] || w.tgt != m.object_map[g.tgt])
      out.push_back("generator " + g.id + ": image endpoints disagree with object map");
  }
  return out;
}

PresentationMap identity_map(PresentationPtr p) {
  PresentationMap m;
  m.source = p;
  m.target = p;
  m.object_map.resize(p->num_objects());
  std::iota(m.object_map.begin(), m.object_map.end(), 0);
  m.generator_map.reserve(p->num_generators());
  for (int a = 0; a < p->num_generators(); ++a) m.generator_map.push_back(generator_word(*p, a));
  return m;
}

Word apply_map(const PresentationMap& m, const Word& w) {
  if (w.src < 0 || w.src >= static_cast<int>(m.object_map.size()) || w.tgt < 0 ||
      w.tgt >= static_cast<int>(m.object_map.size()))
    throw UnknownObjectError("apply_map: word endpoints outside source");
  Word acc = empty_word(m.object_map[w.src]);
  for (const Letter& l : w.letters) {
    if (l.gen < 0 || l.gen >= static_cast<int>(m.generator_map.size()))
      throw UnknownGeneratorError("apply_map: unknown generator index " + std::to_string(l.gen));
    const Word piece = l.inverse ? invert_word(m.generator_map[l.gen]) : m.generator_map[l.gen];
    acc = compose_words(acc, piece);
  }
  if (acc.tgt != m.object_map[w.tgt])
    throw EndpointMismatchError("apply_map: image endpoints inconsistent");
  return acc;
}

PresentationMap compose_maps(const PresentationMap& first, const PresentationMap& second) {
  if (!same_presentation(first.target, second.source))
    throw SourceMismatchError("compose_maps: middle presentations differ");
  PresentationMap m;
  m.source = first.source;
  m.target = second.target;
  m.object_map.reserve(first.object_map.size());
  for (int o : first.object_map) m.object_map.push_back(second.object_map[o]);
  m.generator_map.reserve(first.generator_map.size());
  for (const Word& w : first.generator_map) m.generator_map.push_back(apply_map(second, w));
  return m;
}

namespace {

Word reindex_word(const Word& w, int gen_offset, const std::vector<int>& obj_map) {
  Word r;
  r.src = obj_map[w.src];
  r.tgt = obj_map[w.tgt];
  r.letters.reserve(w.letters.size());
  for (const Letter& l : w.letters) r.letters.push_back({l.gen + gen_offset, l.inverse});
  return r;
}

// Copies one side of a disjoint union into `out`, renaming ids with `prefix`
// and returning the inclusion map.
PresentationMap include_side(GroupoidPresentation& out, const PresentationPtr& side,
                             const std::string& prefix) {
  PresentationMap inj;
  inj.source = side;
  const int gen_offset = out.num_generators();
  for (const ObjectInfo& o : side->objects())
    inj.object_map.push_back(out.add_object(prefix + o.id, o.label));
  for (const Generator& g : side->generators())
    out.add_generator(prefix + g.id, inj.object_map[g.src], inj.object_map[g.tgt], g.label);
  for (const Relation& r : side->relations())
    out.add_relation(reindex_word(r.lhs, gen_offset, inj.object_map),
                     reindex_word(r.rhs, gen_offset, inj.object_map));
  for (int a = 0; a < side->num_generators(); ++a)
    inj.generator_map.push_back(reindex_word(generator_word(*side, a), gen_offset, inj.object_map));
  return inj;
}

} // namespace

CoproductResult coproduct(PresentationPtr left, PresentationPtr right) {
  auto out = std::make_shared<GroupoidPresentation>();
  PresentationMap inj1 = include_side(*out, left, "a:");
  PresentationMap inj2 = include_side(*out, right, "b:");
  inj1.target = out;
  inj2.target = out;
  return {out, std::move(inj1), std::move(inj2)};
}

PushoutResult pushout(const PresentationMap& f, const PresentationMap& g) {
  if (!same_presentation(f.source, g.source))
    throw SourceMismatchError("pushout: maps do not share a source");
  const GroupoidPresentation& Y = *f.source;
  const GroupoidPresentation& M = *f.target;
  const GroupoidPresentation& N = *g.target;
  const int nM = M.num_objects();
  const int total = nM + N.num_objects();

  UnionFind uf(total);
  for (int y = 0; y < Y.num_objects(); ++y) uf.unite(f.object_map[y], nM + g.object_map[y]);

  // Quotient classes ordered by their minimal combined index.
  std::vector<int> roots;
  for (int i = 0; i < total; ++i)
    if (uf.find(i) == i) roots.push_back(i);
  std::vector<int> class_of(total);
  for (int i = 0; i < total; ++i) {
    const int r = uf.find(i);
    class_of[i] =
        static_cast<int>(std::lower_bound(roots.begin(), roots.end(), r) - roots.begin());
  }

  auto out = std::make_shared<GroupoidPresentation>();
  for (int r : roots) {
    const ObjectInfo& o = r < nM ? M.objects()[r] : N.objects()[r - nM];
    out->add_object((r < nM ? "m:" : "n:") + o.id, o.label);
  }

  std::vector<int> objM(nM), objN(N.num_objects());
  for (int i = 0; i < nM; ++i) objM[i] = class_of[i];
  for (int i = 0; i < N.num_objects(); ++i) objN[i] = class_of[nM + i];

  for (const Generator& a : M.generators())
    out->add_generator("m:" + a.id, objM[a.src], objM[a.tgt], a.label);
  const int genN_offset = M.num_generators();
  for (const Generator& a : N.generators())
    out->add_generator("n:" + a.id, objN[a.src], objN[a.tgt], a.label);

  for (const Relation& r : M.relations())
    out->add_relation(reindex_word(r.lhs, 0, objM), reindex_word(r.rhs, 0, objM));
  for (const Relation& r : N.relations())
    out->add_relation(reindex_word(r.lhs, genN_offset, objN), reindex_word(r.rhs, genN_offset, objN));
  // Glueing relations, one per generator of Y, kept even when redundant.
  for (int b = 0; b < Y.num_generators(); ++b)
    out->add_relation(reindex_word(f.generator_map[b], 0, objM),
                      reindex_word(g.generator_map[b], genN_offset, objN));

  PushoutResult res;
  res.presentation = out;
  res.from_left.source = f.target;
  res.from_left.target = out;
  res.from_left.object_map = objM;
  for (int a = 0; a < M.num_generators(); ++a)
    res.from_left.generator_map.push_back(generator_word(*out, a));
  res.from_right.source = g.target;
  res.from_right.target = out;
  res.from_right.object_map = objN;
  for (int a = 0; a < N.num_generators(); ++a)
    res.from_right.generator_map.push_back(generator_word(*out, genN_offset + a));
  return res;
}

BasepointExtension add_basepoint(PresentationPtr p, int at, const std::string& label) {
  if (at < 0 || at >= p->num_objects())
    throw UnknownObjectError("add_basepoint: unknown object index " + std::to_string(at));
  auto out = std::make_shared<GroupoidPresentation>(*p);
  std::string obj_id = label;
  while (!out->id_is_fresh(obj_id)) obj_id += "'";
  const int new_obj = out->add_object(obj_id, label);
  std::string gen_id = "to:" + obj_id;
  while (!out->id_is_fresh(gen_id)) gen_id += "'";
  const int new_gen = out->add_generator(gen_id, at, new_obj, label);
  return {out, new_obj, new_gen};
}

std::vector<std::vector<int>> path_components(const GroupoidPresentation& p) {
  UnionFind uf(p.num_objects());
  for (const Generator& g : p.generators()) uf.unite(g.src, g.tgt);
  std::vector<std::vector<int>> comps;
  std::vector<int> comp_of(p.num_objects(), -1);
  for (int o = 0; o < p.num_objects(); ++o) {
    const int r = uf.find(o);
    if (comp_of[r] < 0) {
      comp_of[r] = static_cast<int>(comps.size());
      comps.emplace_back();
    }
    comps[comp_of[r]].push_back(o);
  }
  return comps;
}

} // namespace gtqft
