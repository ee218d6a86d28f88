#pragma once

#include <string>

#include <json.hpp>

#include "kalmbach/algebra.hpp"
#include "kalmbach/effect_algebra.hpp"
#include "kalmbach/extension.hpp"
#include "kalmbach/omp.hpp"
#include "kalmbach/poset.hpp"

namespace kalmbach {

using json = nlohmann::ordered_json;

// All parsers throw ParseError on malformed or schema-violating input and
// propagate validation errors from the constructors they call.
BoundedPoset parse_poset(const json& j);
json serialize_poset(const BoundedPoset& p);

EffectAlgebra parse_ea(const json& j);  // table only; axioms not checked here
json serialize_ea(const EffectAlgebra& e);

OrthomodularPoset parse_omp(const json& j);
json serialize_omp(const OrthomodularPoset& a);

MonadAlgebra parse_algebra(const json& j);
json serialize_algebra(const MonadAlgebra& m);

json load_json_file(const std::string& path);  // throws ParseError

// Hasse-diagram DOT, edges from the covering relation, bottom at the
// bottom rank. For OMPs each node is annotated with its complement.
std::string dot_poset(const BoundedPoset& p);
std::string dot_omp(const OrthomodularPoset& a);

}  // namespace kalmbach
