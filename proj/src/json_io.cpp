#include "gtqft/json_io.hpp"

#include "gtqft/errors.hpp"

#include <fstream>
#include <sstream>

namespace gtqft {

namespace {

std::string sign_str(bool inverse) { return inverse ? "-" : "+"; }

Json word_letters_to_json(const GroupoidPresentation& p, const Word& w) {
  Json arr = Json::array();
  for (const Letter& l : w.letters)
    arr.push_back(Json::array({p.generators()[l.gen].id, sign_str(l.inverse)}));
  return arr;
}

std::vector<Letter> letters_from_json(const GroupoidPresentation& p, const Json& arr,
                                      const std::string& where) {
  std::vector<Letter> letters;
  for (const Json& e : arr) {
    if (!e.is_array() || e.size() != 2)
      throw ParseError(where + ": letter must be [generator, \"+\"|\"-\"]");
    const std::string gid = e[0].get<std::string>();
    const std::string sign = e[1].get<std::string>();
    const int gen = p.generator_index(gid);
    if (gen < 0) throw ParseError(where + ": unknown generator '" + gid + "'");
    if (sign != "+" && sign != "-") throw ParseError(where + ": bad orientation '" + sign + "'");
    letters.push_back({gen, sign == "-"});
  }
  return letters;
}

Word word_from_json(const GroupoidPresentation& p, const Json& arr, const std::string& where,
                    int object_if_empty) {
  return make_word(p, letters_from_json(p, arr, where), object_if_empty);
}

std::string hom_label(const GroupoidPresentation& p, const GroupoidHom& h) {
  if (h.images.empty()) return "()";
  std::string out;
  for (std::size_t a = 0; a < h.images.size(); ++a) {
    if (a) out += ";";
    out += p.generators()[a].id + "=" + std::to_string(h.images[a]);
  }
  return out;
}

Json entries_to_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string entries_to_csv(const RationalMatrix& m, const std::vector<std::string>& row_labels,
                           const std::vector<std::string>& col_labels) {
  std::ostringstream out;
  out << "basis";
  for (const std::string& c : col_labels) out << "," << c;
  out << "\n";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    out << row_labels[i];
    for (Eigen::Index j = 0; j < m.cols(); ++j) out << "," << m(i, j).str();
    out << "\n";
  }
  return out.str();
}

} // namespace

FiniteGroup group_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind")) throw ParseError("group descriptor needs a 'kind'");
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "cyclic") return FiniteGroup::cyclic(j.at("n").get<int>());
  if (kind == "symmetric") return FiniteGroup::symmetric(j.at("n").get<int>());
  if (kind == "dihedral") return FiniteGroup::dihedral(j.at("n").get<int>());
  if (kind == "table") {
    auto table = j.at("table").get<std::vector<std::vector<int>>>();
    std::string name = j.value("name", std::string("table"));
    return FiniteGroup::from_table(std::move(table), std::move(name));
  }
  throw ParseError("unknown group kind '" + kind + "'");
}

Json group_to_json(const FiniteGroup& g) {
  // Named constructors are recoverable from the name they stamp.
  const std::string& n = g.name();
  if (n.size() >= 2 && (n[0] == 'Z' || n[0] == 'S' || n[0] == 'D')) {
    bool digits = true;
    for (std::size_t i = 1; i < n.size(); ++i) digits = digits && std::isdigit(n[i]);
    if (digits) {
      Json j;
      j["kind"] = n[0] == 'Z' ? "cyclic" : n[0] == 'S' ? "symmetric" : "dihedral";
      j["n"] = std::stoi(n.substr(1));
      return j;
    }
  }
  return group_to_table_json(g);
}

Json group_to_table_json(const FiniteGroup& g) {
  Json j;
  j["kind"] = "table";
  j["name"] = g.name();
  j["table"] = g.table();
  return j;
}

GroupoidPresentation presentation_from_json(const Json& j) {
  GroupoidPresentation p;
  for (const Json& o : j.value("objects", Json::array()))
    p.add_object(o.at("id").get<std::string>(), o.value("label", std::string()));
  for (const Json& g : j.value("generators", Json::array())) {
    const int src = p.object_index(g.at("src").get<std::string>());
    const int tgt = p.object_index(g.at("tgt").get<std::string>());
    if (src < 0 || tgt < 0)
      throw ParseError("generator '" + g.at("id").get<std::string>() +
                       "' references an undeclared object");
    p.add_generator(g.at("id").get<std::string>(), src, tgt, g.value("label", std::string()));
  }
  for (const Json& r : j.value("relations", Json::array())) {
    int fallback = -1;
    if (r.contains("src")) {
      fallback = p.object_index(r["src"].get<std::string>());
      if (fallback < 0) throw ParseError("relation 'src' names an unknown object");
    }
    auto lhs_letters = letters_from_json(p, r.at("lhs"), "relation lhs");
    auto rhs_letters = letters_from_json(p, r.at("rhs"), "relation rhs");
    // An empty side borrows endpoints from the other; a fully trivial
    // relation needs an explicit "src".
    if (lhs_letters.empty() && rhs_letters.empty()) {
      if (fallback < 0) throw ParseError("trivial relation needs an explicit 'src' object");
      p.add_relation(empty_word(fallback), empty_word(fallback));
      continue;
    }
    if (!lhs_letters.empty() && !rhs_letters.empty()) {
      p.add_relation(make_word(p, lhs_letters), make_word(p, rhs_letters));
    } else {
      const Word full = make_word(p, lhs_letters.empty() ? rhs_letters : lhs_letters);
      const Word empty = Word{{}, full.src, full.tgt};
      if (full.src != full.tgt)
        throw ParseError("relation equates a non-loop word with an empty word");
      p.add_relation(lhs_letters.empty() ? empty : full, lhs_letters.empty() ? full : empty);
    }
  }
  const auto violations = validate(p);
  if (!violations.empty()) throw ParseError("invalid presentation: " + violations.front());
  return p;
}

Json presentation_to_json(const GroupoidPresentation& p) {
  Json j;
  j["objects"] = Json::array();
  for (const ObjectInfo& o : p.objects()) {
    Json jo;
    jo["id"] = o.id;
    if (!o.label.empty()) jo["label"] = o.label;
    j["objects"].push_back(std::move(jo));
  }
  j["generators"] = Json::array();
  for (const Generator& g : p.generators()) {
    Json jg;
    jg["id"] = g.id;
    jg["src"] = p.objects()[g.src].id;
    jg["tgt"] = p.objects()[g.tgt].id;
    if (!g.label.empty()) jg["label"] = g.label;
    j["generators"].push_back(std::move(jg));
  }
  j["relations"] = Json::array();
  for (const Relation& r : p.relations()) {
    Json jr;
    jr["lhs"] = word_letters_to_json(p, r.lhs);
    jr["rhs"] = word_letters_to_json(p, r.rhs);
    if (r.lhs.letters.empty() && r.rhs.letters.empty())
      jr["src"] = p.objects()[r.lhs.src].id;
    j["relations"].push_back(std::move(jr));
  }
  return j;
}

PresentationMap map_from_json(const Json& j, PresentationPtr source, PresentationPtr target) {
  PresentationMap m;
  m.source = source;
  m.target = target;
  m.object_map.assign(source->num_objects(), -1);
  for (const auto& [src_id, tgt_id] : j.at("objects").items()) {
    const int s = source->object_index(src_id);
    const int t = target->object_index(tgt_id.get<std::string>());
    if (s < 0) throw ParseError("map: unknown source object '" + src_id + "'");
    if (t < 0) throw ParseError("map: unknown target object '" + tgt_id.get<std::string>() + "'");
    m.object_map[s] = t;
  }
  for (int o = 0; o < source->num_objects(); ++o)
    if (m.object_map[o] < 0)
      throw ParseError("map: object '" + source->objects()[o].id + "' has no image");
  m.generator_map.assign(source->num_generators(), Word{});
  std::vector<bool> seen(source->num_generators(), false);
  for (const auto& [gen_id, word_json] : j.at("generators").items()) {
    const int a = source->generator_index(gen_id);
    if (a < 0) throw ParseError("map: unknown source generator '" + gen_id + "'");
    const Generator& g = source->generators()[a];
    m.generator_map[a] =
        word_from_json(*target, word_json, "map image of " + gen_id, m.object_map[g.src]);
    seen[a] = true;
  }
  for (int a = 0; a < source->num_generators(); ++a)
    if (!seen[a])
      throw ParseError("map: generator '" + source->generators()[a].id + "' has no image");
  const auto violations = validate(m);
  if (!violations.empty()) throw ParseError("invalid map: " + violations.front());
  return m;
}

Json map_to_json(const PresentationMap& m) {
  Json j;
  j["objects"] = Json::object();
  for (int o = 0; o < m.source->num_objects(); ++o)
    j["objects"][m.source->objects()[o].id] = m.target->objects()[m.object_map[o]].id;
  j["generators"] = Json::object();
  for (int a = 0; a < m.source->num_generators(); ++a)
    j["generators"][m.source->generators()[a].id] =
        word_letters_to_json(*m.target, m.generator_map[a]);
  return j;
}

Cospan cospan_from_json(const Json& j) {
  Cospan c;
  c.label = j.value("label", std::string());
  c.left = std::make_shared<GroupoidPresentation>(presentation_from_json(j.at("x")));
  c.right = std::make_shared<GroupoidPresentation>(presentation_from_json(j.at("y")));
  c.apex = std::make_shared<GroupoidPresentation>(presentation_from_json(j.at("m")));
  c.in_left = map_from_json(j.at("i"), c.left, c.apex);
  c.in_right = map_from_json(j.at("j"), c.right, c.apex);
  const auto violations = validate(c);
  if (!violations.empty()) throw ParseError("invalid cospan: " + violations.front());
  return c;
}

Json cospan_to_json(const Cospan& c) {
  Json j;
  j["label"] = c.label;
  j["x"] = presentation_to_json(*c.left);
  j["y"] = presentation_to_json(*c.right);
  j["m"] = presentation_to_json(*c.apex);
  j["i"] = map_to_json(c.in_left);
  j["j"] = map_to_json(c.in_right);
  return j;
}

Json hom_to_json(const GroupoidPresentation& p, const GroupoidHom& h) {
  Json j = Json::object();
  for (std::size_t a = 0; a < h.images.size(); ++a)
    j[p.generators()[a].id] = h.images[a];
  return j;
}

Json raw_matrix_to_json(const Cospan& c, const RawMatrix& m) {
  Json j;
  j["label"] = c.label;
  j["rows"] = m.row_basis.size();
  j["cols"] = m.col_basis.size();
  j["col_basis"] = Json::array();
  for (const GroupoidHom& h : m.col_basis) j["col_basis"].push_back(hom_to_json(*c.left, h));
  j["row_basis"] = Json::array();
  for (const GroupoidHom& h : m.row_basis) j["row_basis"].push_back(hom_to_json(*c.right, h));
  j["entries"] = entries_to_json(m.entries);
  return j;
}

Json class_matrix_to_json(const Cospan& c, const ClassMatrix& m) {
  Json j;
  j["label"] = c.label;
  j["rows"] = m.row_basis.size();
  j["cols"] = m.col_basis.size();
  auto basis_json = [](const GroupoidPresentation& p, const std::vector<NatClass>& basis) {
    Json arr = Json::array();
    for (const NatClass& cl : basis) {
      Json e;
      e["rep"] = hom_to_json(p, cl.rep);
      e["size"] = cl.size;
      arr.push_back(std::move(e));
    }
    return arr;
  };
  j["col_basis"] = basis_json(*c.left, m.col_basis);
  j["row_basis"] = basis_json(*c.right, m.row_basis);
  j["entries"] = entries_to_json(m.entries);
  return j;
}

std::string raw_matrix_to_csv(const Cospan& c, const RawMatrix& m) {
  std::vector<std::string> rows, cols;
  for (const GroupoidHom& h : m.row_basis) rows.push_back(hom_label(*c.right, h));
  for (const GroupoidHom& h : m.col_basis) cols.push_back(hom_label(*c.left, h));
  return entries_to_csv(m.entries, rows, cols);
}

std::string class_matrix_to_csv(const Cospan& c, const ClassMatrix& m) {
  std::vector<std::string> rows, cols;
  for (const NatClass& cl : m.row_basis) rows.push_back("[" + hom_label(*c.right, cl.rep) + "]");
  for (const NatClass& cl : m.col_basis) cols.push_back("[" + hom_label(*c.left, cl.rep) + "]");
  return entries_to_csv(m.entries, rows, cols);
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  return j;
}

} // namespace gtqft
