#pragma once

// Executable pipelines for both directions of the HSP theorem on concrete
// finite instances, plus the preservation lemmas. A pipeline only certifies
// what it checks: the hard direction is exercised for algebras that come with
// an explicit HSP certificate.

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "ualg/algebra.hpp"
#include "ualg/closure.hpp"
#include "ualg/hom.hpp"
#include "ualg/term.hpp"

namespace ualg {

struct Stage {
  std::string name;
  bool pass = false;
  std::string witness;  // empty on pass unless informative
};

struct PipelineReport {
  std::vector<Stage> stages;
  bool overall = true;
  bool vacuous = false;

  void add(std::string name, bool pass, std::string witness = {});
  /// Human-readable rendering.
  std::string to_text() const;
  /// One `STAGE <name> PASS|FAIL <witness>` line per stage.
  std::string to_machine() const;
};

/// B with mutually inverse maps A -> B and B -> A.
struct IsoWitness {
  FiniteAlgebra other;
  CarrierMap to;
  CarrierMap from;
};

/// A homomorphism from A into `target`; the derived algebra is its image.
struct ImageWitness {
  FiniteAlgebra target;
  CarrierMap map;
};

/// B with an injective homomorphism B -> A.
struct SubalgebraWitness {
  FiniteAlgebra sub;
  CarrierMap embedding;
};

/// Further factors; the derived algebra is A x others[0] x ...
struct ProductWitness {
  std::vector<FiniteAlgebra> others;
};

using InvarianceWitness = std::variant<IsoWitness, ImageWitness, SubalgebraWitness, ProductWitness>;

/// Checks that A |= eq carries over to the algebra derived through `witness`.
/// Throws Error(InvalidArgument) for a malformed witness.
PipelineReport verify_invariance(const FiniteAlgebra& a, const Equation& eq,
                                 const InvarianceWitness& witness, const Caps& caps = {});

/// Every algebra over `sig` with carrier size 1..max_size, tables in
/// lexicographic order. Throws CapExceeded when there would be more than
/// `cap` of them.
std::vector<FiniteAlgebra> enumerate_algebras(const Signature& sig, std::size_t max_size,
                                              std::size_t cap = 1'000'000);

/// The models of E among all algebras up to `pool_size_bound`, checked for
/// closure under pairwise products, generated subalgebras and homomorphic
/// images found by search.
PipelineReport eqcl_to_var_check(const Signature& sig, std::span<const Equation> e,
                                 std::size_t pool_size_bound, const Caps& caps = {});

/// Certificate replay, then the free algebra on one variable per element of
/// B and the universal map onto B, then B against the depth-2 theory of K in
/// two variables.
PipelineReport var_to_eqcl_check(std::span<const FiniteAlgebra> k, const FiniteAlgebra& b,
                                 const HspCertificate& cert, const Caps& caps = {});

}  // namespace ualg
