#pragma once

#include <string>
#include <variant>
#include <vector>

#include "tselect/ast.hpp"
#include "tselect/composition.hpp"

namespace tselect {

// Parses a monolithic instance document:
//
//   declaration
//     name : {"v1", "v2"}      # one line per parameter
//   constraint                  # optional, absent means no restriction
//     name = "v1" or name != "v2"
//   criterion
//     <name = "v1"> ++ EACH(name : "v1", "v2") ** EXHAUSTIVE(name)
//
// '#' starts a comment. `true`/`false` may stand for the quoted strings
// "true"/"false" wherever a value is expected. Throws ParseError for
// malformed text and for validation failures (undeclared parameter,
// out-of-range value, duplicate declaration), always with a position.
Instance parse_instance(const std::string& text);

// Parses either a monolithic instance or a `compose` document consisting of
// named sub-instances combined with [AND++] / [AND**]:
//
//   compose
//     instance left
//       declaration ...
//       criterion ...
//     instance right
//       declaration ...
//       criterion ...
//     combine left [AND**] right
//
// Sub-instances used together must declare disjoint parameter names.
std::variant<Instance, CompositionTree> parse_document(const std::string& text);

// Canonical text for an instance. parse_instance(render_instance(i)) is
// structurally identical to i.
std::string render_instance(const Instance& inst);

// Document length with comments removed and whitespace runs collapsed to a
// single character. This is the size measure attached to parsed instances.
std::size_t stripped_source_size(const std::string& text);

}  // namespace tselect
