#include "gtqft/cli.hpp"

#include "gtqft/builders.hpp"
#include "gtqft/errors.hpp"
#include "gtqft/json_io.hpp"
#include "gtqft/tqft.hpp"
#include "gtqft/verify.hpp"

#include <cctype>
#include <sstream>

namespace gtqft::cli {

namespace {

Json load_json_arg(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\n");
  if (first != std::string::npos && arg[first] == '{') {
    try {
      return Json::parse(arg);
    } catch (const std::exception& e) {
      throw ParseError(std::string("inline JSON: ") + e.what());
    }
  }
  return load_json_file(arg);
}

std::string render(const Json& j) { return j.dump(2) + "\n"; }

void check_format(const JobConfig& cfg) {
  if (cfg.format != "json" && cfg.format != "csv")
    throw ParseError("unknown format '" + cfg.format + "' (expected json or csv)");
}

PresentationPtr load_presentation(const std::string& arg) {
  return std::make_shared<GroupoidPresentation>(presentation_from_json(load_json_arg(arg)));
}

Cospan lookup_example(const std::string& name) {
  if (name == "pair_of_pants") return pair_of_pants();
  if (name == "three_strand_tube") return three_strand_tube();
  if (name == "identity_circle") return identity_cospan(circle());
  if (name == "identity_two_circles")
    return identity_cospan(coproduct(circle(), circle()).presentation);
  if (name == "identity_figure_eight") return identity_cospan(figure_eight());
  if (name == "braid_s1_n2") return artin_braid_generator(2, 1);
  if (name == "braid_s1_n2_inv") return artin_braid_generator(2, 1, true);
  if (name == "braid_s1_n3") return artin_braid_generator(3, 1);
  if (name == "braid_s2_n3") return artin_braid_generator(3, 2);
  if (name == "loop_band_s1_n3") return loop_braid_generator(3, 1, LoopKind::band);
  if (name == "loop_perm_r1_n3") return loop_braid_generator(3, 1, LoopKind::permutation);
  std::string known;
  for (const std::string& n : example_names()) known += (known.empty() ? "" : ", ") + n;
  throw ParseError("unknown example '" + name + "' (known: " + known + ")");
}

Json matrices_json(const Cospan& c, const FiniteGroup& G, const JobConfig& cfg) {
  const EnumOptions opts = enum_options(cfg);
  Json j;
  j["group"] = group_to_json(G);
  j["matrix"] = class_matrix_to_json(c, class_matrix(c, G, opts));
  if (cfg.raw) j["raw"] = raw_matrix_to_json(c, raw_counting_matrix(c, G, opts));
  if (cfg.normalized)
    j["normalized"] = raw_matrix_to_json(c, normalized_counting_matrix(c, G, opts));
  return j;
}

std::string matrices_csv(const Cospan& c, const FiniteGroup& G, const JobConfig& cfg) {
  const EnumOptions opts = enum_options(cfg);
  std::ostringstream out;
  out << "# matrix " << c.label << "\n" << class_matrix_to_csv(c, class_matrix(c, G, opts));
  if (cfg.raw)
    out << "# raw " << c.label << "\n" << raw_matrix_to_csv(c, raw_counting_matrix(c, G, opts));
  if (cfg.normalized)
    out << "# normalized " << c.label << "\n"
        << raw_matrix_to_csv(c, normalized_counting_matrix(c, G, opts));
  return out.str();
}

} // namespace

const std::vector<std::string>& example_names() {
  static const std::vector<std::string> names = {
      "pair_of_pants",   "three_strand_tube",    "identity_circle",
      "identity_two_circles", "identity_figure_eight", "braid_s1_n2",
      "braid_s1_n2_inv", "braid_s1_n3",          "braid_s2_n3",
      "loop_band_s1_n3", "loop_perm_r1_n3"};
  return names;
}

FiniteGroup group_from_spec(const std::string& spec) {
  // Shorthands Z<n>, S<n>, D<n>; anything else is inline JSON or a file.
  if (spec.size() >= 2 && (spec[0] == 'Z' || spec[0] == 'S' || spec[0] == 'D')) {
    bool digits = true;
    for (std::size_t i = 1; i < spec.size(); ++i)
      digits = digits && std::isdigit(static_cast<unsigned char>(spec[i]));
    if (digits) {
      const int n = std::stoi(spec.substr(1));
      if (spec[0] == 'Z') return FiniteGroup::cyclic(n);
      if (spec[0] == 'S') return FiniteGroup::symmetric(n);
      return FiniteGroup::dihedral(n);
    }
  }
  return group_from_json(load_json_arg(spec));
}

EnumOptions enum_options(const JobConfig& cfg) {
  if (cfg.budget <= 0) throw ParseError("budget must be positive");
  if (cfg.parallel <= 0) throw ParseError("parallel degree must be positive");
  EnumOptions opts;
  opts.budget = cfg.budget;
  opts.threads = cfg.parallel;
  return opts;
}

CommandResult cmd_homs(const std::string& presentation_path, const JobConfig& cfg) {
  check_format(cfg);
  const FiniteGroup G = group_from_spec(cfg.group);
  PresentationPtr p = load_presentation(presentation_path);
  const auto homs = enumerate_homs(*p, G, enum_options(cfg));
  if (cfg.format == "csv") {
    std::ostringstream out;
    out << "index,hom\n";
    if (!cfg.count_only)
      for (std::size_t i = 0; i < homs.size(); ++i)
        out << i << "," << hom_to_json(*p, homs[i]).dump() << "\n";
    out << "count," << homs.size() << "\n";
    return {0, out.str()};
  }
  Json j;
  j["command"] = "homs";
  j["group"] = group_to_json(G);
  j["count"] = homs.size();
  if (!cfg.count_only) {
    j["homs"] = Json::array();
    for (const GroupoidHom& h : homs) j["homs"].push_back(hom_to_json(*p, h));
  }
  return {0, render(j)};
}

CommandResult cmd_classes(const std::string& presentation_path, const JobConfig& cfg) {
  check_format(cfg);
  const FiniteGroup G = group_from_spec(cfg.group);
  PresentationPtr p = load_presentation(presentation_path);
  const NatPartition part = nat_classes(*p, G, enum_options(cfg));
  if (cfg.format == "csv") {
    std::ostringstream out;
    out << "index,size,representative\n";
    for (std::size_t i = 0; i < part.classes.size(); ++i)
      out << i << "," << part.classes[i].size << ","
          << hom_to_json(*p, part.classes[i].rep).dump() << "\n";
    out << "count," << part.classes.size() << ",\n";
    return {0, out.str()};
  }
  Json j;
  j["command"] = "classes";
  j["group"] = group_to_json(G);
  j["hom_count"] = part.homs.size();
  j["class_count"] = part.classes.size();
  j["classes"] = Json::array();
  for (const NatClass& cl : part.classes) {
    Json e;
    e["rep"] = hom_to_json(*p, cl.rep);
    e["size"] = cl.size;
    j["classes"].push_back(std::move(e));
  }
  return {0, render(j)};
}

CommandResult cmd_tqft(const std::string& cospan_path, const JobConfig& cfg) {
  check_format(cfg);
  const FiniteGroup G = group_from_spec(cfg.group);
  const Cospan c = cospan_from_json(load_json_arg(cospan_path));
  if (cfg.format == "csv") return {0, matrices_csv(c, G, cfg)};
  Json j;
  j["command"] = "tqft";
  j["cospan"] = c.label;
  j.update(matrices_json(c, G, cfg));
  return {0, render(j)};
}

CommandResult cmd_compose(const std::vector<std::string>& cospan_paths, const JobConfig& cfg,
                          bool group_given) {
  check_format(cfg);
  if (cospan_paths.size() < 2) throw ParseError("compose needs at least two cospans");
  std::vector<Cospan> parts;
  for (const std::string& path : cospan_paths) parts.push_back(cospan_from_json(load_json_arg(path)));
  Cospan composed = parts[0];
  for (std::size_t k = 1; k < parts.size(); ++k) {
    try {
      composed = compose(composed, parts[k]);
    } catch (const BoundaryMismatchError& e) {
      throw BoundaryMismatchError("between inputs " + std::to_string(k - 1) + " and " +
                                  std::to_string(k) + ": " + e.what());
    }
  }
  Json j;
  j["command"] = "compose";
  j["inputs"] = cospan_paths.size();
  j["cospan"] = cospan_to_json(composed);
  int exit_code = 0;
  if (group_given) {
    const FiniteGroup G = group_from_spec(cfg.group);
    const EnumOptions opts = enum_options(cfg);
    const ClassMatrix whole = class_matrix(composed, G, opts);
    RationalMatrix product;
    for (std::size_t k = 0; k < parts.size(); ++k) {
      const RationalMatrix m = class_matrix(parts[k], G, opts).entries;
      product = k == 0 ? m : RationalMatrix(m * product);
    }
    const bool ok = matrices_equal(whole.entries, product);
    j.update(matrices_json(composed, G, cfg));
    j["product_identity"] = ok;
    if (!ok) exit_code = 1;
  }
  if (cfg.format == "csv" && group_given) {
    const FiniteGroup G = group_from_spec(cfg.group);
    std::string out = matrices_csv(composed, G, cfg);
    out += "product_identity," + std::string(j["product_identity"].get<bool>() ? "true" : "false") +
           "\n";
    return {exit_code, out};
  }
  return {exit_code, render(j)};
}

CommandResult cmd_verify(const std::vector<std::string>& suites, const JobConfig& cfg) {
  const FiniteGroup G = group_from_spec(cfg.group);
  const EnumOptions opts = enum_options(cfg);
  std::vector<std::string> to_run = suites;
  if (to_run.empty() || (to_run.size() == 1 && to_run[0] == "all"))
    to_run = verify::suite_names();
  Json j;
  j["command"] = "verify";
  j["group"] = group_to_json(G);
  j["seed"] = cfg.seed;
  j["suites"] = Json::array();
  bool all = true;
  for (const std::string& name : to_run) {
    const verify::SuiteResult r = verify::run_suite(name, G, cfg.seed, opts);
    all = all && r.passed;
    j["suites"].push_back(r.report);
  }
  j["passed"] = all;
  return {all ? 0 : 1, render(j)};
}

CommandResult cmd_example(const std::string& name, const JobConfig& cfg, bool group_given) {
  check_format(cfg);
  const Cospan c = lookup_example(name);
  if (cfg.format == "csv" && group_given)
    return {0, matrices_csv(c, group_from_spec(cfg.group), cfg)};
  Json j;
  j["command"] = "example";
  j["name"] = name;
  j["cospan"] = cospan_to_json(c);
  if (group_given) j.update(matrices_json(c, group_from_spec(cfg.group), cfg));
  return {0, render(j)};
}

} // namespace gtqft::cli
