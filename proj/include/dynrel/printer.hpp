#pragma once

#include <string>

#include "dynrel/model.hpp"

namespace dynrel {

/// Serialize a model back to the DSL. Internal nodes get fresh gate names;
/// left-associated and/or chains are re-flattened into one n-ary gate line,
/// so reparsing yields a structurally equal model. Throws ModelError for
/// nodes the DSL has no surface syntax for (identity elements, bare
/// fault-tree temporal operators).
std::string print_model(const Model& m);

}  // namespace dynrel
