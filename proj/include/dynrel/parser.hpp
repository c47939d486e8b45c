#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dynrel/model.hpp"

namespace dynrel {

enum class Severity : std::uint8_t { Error, Warning };

/// Parser/validator finding with a 1-based source position. Errors block
/// analysis; warnings do not.
struct Diagnostic {
    Severity severity = Severity::Error;
    int line = 0;
    int column = 0;
    std::string message;
    std::string code;
};

std::string format_diagnostic(const Diagnostic& d);

struct ParseResult {
    std::optional<Model> model;
    std::vector<Diagnostic> diagnostics;

    bool ok() const { return model.has_value(); }
    bool has_errors() const;
};

/// Parse the model DSL:
///
///   model := ("dft" | "drbd") IDENT "{" decl* "top" IDENT ";" "}"
///   decl  := "basic" IDENT dist ";"
///          | "spare" IDENT "active" dist "dormancy" "(" NUMBER ")" ";"
///          | "gate" IDENT op IDENT+ ";"
///   dist  := "exponential" "(" "rate" "=" NUMBER ")"
///          | "weibull" "(" "shape" "=" NUMBER "," "scale" "=" NUMBER ")"
///   op    := "and" | "or" | "pand" | "fdep" | "wsp"
///          | "after" | "simult" | "iafter"
///
/// `and`/`or` take two or more operands (desugared left-associatively); the
/// other operators take exactly two. `wsp` takes (main, spare) where the
/// second operand names a spare declaration. `pand`/`fdep` are fault-tree
/// gates; `after`/`simult`/`iafter` are block-diagram operators. `#` starts
/// a comment running to end of line.
ParseResult parse_model(std::string_view text);

/// Severity of the shared-event check depends on what the model is about to
/// be used for: sharing breaks the independence prerequisite of the
/// inclusion-exclusion route but is harmless to simulation.
enum class ValidationTarget : std::uint8_t { General, AnalyticDft };

/// Structural checks past the grammar: event sharing between top-level
/// modules, spares adopted by more than one gate, dormancy range,
/// unreachable declarations.
std::vector<Diagnostic> validate(const Model& m,
                                 ValidationTarget target = ValidationTarget::General);

}  // namespace dynrel
