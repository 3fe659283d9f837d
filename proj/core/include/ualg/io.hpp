#pragma once

// Text formats: algebra files, terms and equations, proof and certificate
// s-expressions, the free-algebra sidecar, and cap overrides.
//
// Algebra file:
//
//   signature
//   op f 2
//   end
//   algebra z2
//   size 2
//   op f 0 1 1 0
//   end
//
// `#` starts a comment in algebra and equation files, `;` in s-expressions.

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ualg/algebra.hpp"
#include "ualg/closure.hpp"
#include "ualg/entail.hpp"
#include "ualg/free.hpp"
#include "ualg/term.hpp"

namespace ualg {

/// 1-based position of a syntax problem.
struct SourceSpan {
  std::string file;
  std::size_t line = 1;
  std::size_t column_start = 1;
  std::size_t column_end = 1;

  std::string to_string() const;
};

class ParseError : public Error {
 public:
  ParseError(SourceSpan span, const std::string& message)
      : Error(ErrorKind::Syntax, span.to_string() + ": " + message), span_(std::move(span)) {}
  const SourceSpan& span() const noexcept { return span_; }

 private:
  SourceSpan span_;
};

struct AlgebraFile {
  Signature signature;
  std::vector<FiniteAlgebra> algebras;

  const FiniteAlgebra* find(std::string_view name) const;
};

/// Parses and validates. Throws ParseError, or ValidationError whose
/// violations name the algebra, symbol and table index.
AlgebraFile parse_algebra_file(std::string_view text, std::string_view file = "<input>");

/// Canonical form: single spaces, symbols in signature order, one table per
/// line, a blank line before each algebra block, trailing newline.
std::string emit_algebra_file(const Signature& sig, std::span<const FiniteAlgebra> algebras);

Term parse_term(std::string_view text, std::string_view file = "<input>");
Equation parse_equation(std::string_view text, std::string_view file = "<input>");
/// One `term = term` per line; `#` comments and blank lines are skipped.
std::vector<Equation> parse_equation_file(std::string_view text, std::string_view file = "<input>");
std::string emit_equation_file(std::span<const Equation> eqs);

Proof parse_proof(std::string_view text, std::string_view file = "<input>");
std::string emit_proof(const Proof& p);

enum class ParseKind { Term, Equation, Proof };
std::variant<Term, Equation, Proof> parse_term_equation_proof(std::string_view text, ParseKind kind,
                                                              std::string_view file = "<input>");

/// `(hsp (factors 0 0) (gens (0 1) (1 0)) (image 0 1 0))`
HspCertificate parse_certificate(std::string_view text, std::string_view file = "<input>");
std::string emit_certificate(const HspCertificate& cert);

/// `elem <i> repr <term>` lines, with ` gen <var>` on generator classes.
std::string emit_free_sidecar(const FreeAlgebra& f);

/// Applies `carrier=N,cells=M,search=P` overrides (any subset) to `base`.
/// Throws Error(InvalidArgument).
Caps parse_caps(std::string_view spec, Caps base = {});
/// Defaults overridden by the UALG_CAPS environment variable, if set.
Caps caps_from_environment();

std::string read_file(const std::string& path);

}  // namespace ualg
