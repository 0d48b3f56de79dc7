#pragma once

#include "gtqft/finite_group.hpp"
#include "gtqft/presentation.hpp"
#include "gtqft/tqft.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace gtqft {

using Json = nlohmann::ordered_json;

/// Group descriptor {"kind": "cyclic"|"symmetric"|"dihedral"|"table",
/// "n": ..., "table": ..., "name": ...}. Named kinds round-trip through the
/// table form bit-for-bit.
FiniteGroup group_from_json(const Json& j);
Json group_to_json(const FiniteGroup& g);       // named descriptor when possible
Json group_to_table_json(const FiniteGroup& g); // always the table form

GroupoidPresentation presentation_from_json(const Json& j);
Json presentation_to_json(const GroupoidPresentation& p);

/// Maps serialize as {"objects": {src: tgt}, "generators": {gen: [["g","+"]...]}}.
PresentationMap map_from_json(const Json& j, PresentationPtr source, PresentationPtr target);
Json map_to_json(const PresentationMap& m);

Cospan cospan_from_json(const Json& j);
Json cospan_to_json(const Cospan& c);

Json hom_to_json(const GroupoidPresentation& p, const GroupoidHom& h);
Json raw_matrix_to_json(const Cospan& c, const RawMatrix& m);
Json class_matrix_to_json(const Cospan& c, const ClassMatrix& m);

std::string raw_matrix_to_csv(const Cospan& c, const RawMatrix& m);
std::string class_matrix_to_csv(const Cospan& c, const ClassMatrix& m);

Json load_json_file(const std::string& path);

} // namespace gtqft
