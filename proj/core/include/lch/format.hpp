#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "lch/dga.hpp"
#include "lch/errors.hpp"

namespace lch {

/// Position-tagged message about a `.dga` document (1-based line and column).
struct Diagnostic {
    std::size_t line = 0;
    std::size_t column = 0;
    std::string message;

    std::string to_string() const;
};

/// Syntax or name-resolution failure.
class ParseError : public Error {
public:
    explicit ParseError(std::vector<Diagnostic> diagnostics);
    const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

private:
    std::vector<Diagnostic> diagnostics_;
};

/// The document parsed but the DGA fails degree or d^2 = 0 checks.
class VerificationError : public Error {
public:
    explicit VerificationError(std::vector<Diagnostic> diagnostics);
    const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

private:
    std::vector<Diagnostic> diagnostics_;
};

struct ParseOptions {
    bool verify = true;
};

/// A parsed DGA together with source lines of its declarations.
struct DgaDocument {
    Dga dga;
    /// Per generator id: line of its `gen` and `d` declarations.
    std::vector<std::size_t> gen_line;
    std::vector<std::size_t> d_line;
};

/// Parses the line-oriented `.dga` format:
///
///     ring Z | ring F<p>
///     h1 rank <n> names <id> ... <id>
///     gen <id> deg <int> [mixed [<i> <j>]]
///     d <id> = <poly>
///
/// `#` starts a comment. Throws ParseError or, when verifying, VerificationError.
DgaDocument parse_dga_document(std::string_view text, const ParseOptions& opts = {});
inline Dga parse_dga(std::string_view text, const ParseOptions& opts = {})
{
    return parse_dga_document(text, opts).dga;
}

/// Parses one polynomial in the term syntax against an algebra.
NcPoly parse_poly(std::string_view text, const AlgebraPtr& algebra);

/// Canonical text form; parse_dga(render_dga(d)) == d. Prime fields and Z only.
std::string render_dga(const Dga& d);

}  // namespace lch
