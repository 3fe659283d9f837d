#pragma once

// The relatively free algebra over a finite variable set in the variety
// generated by a finite class K.
//
// F is realized as the subalgebra of the product of copies of the members of
// K, one copy per (member, environment) pair, generated by the variable
// projections. Each element is identified by its evaluation tuple and carries
// the first term that reached it as a representative.

#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "ualg/algebra.hpp"
#include "ualg/hom.hpp"
#include "ualg/term.hpp"

namespace ualg {

struct FreeIndex {
  std::size_t algebra;  // position in K
  Environment env;
};

struct FreeElement {
  std::vector<Elem> tuple;  // one coordinate per FreeIndex entry
  Term representative;
  std::optional<std::string> generator;  // variable this element is the class of
};

class FreeAlgebra {
 public:
  const FiniteAlgebra& algebra() const noexcept { return alg_; }
  std::span<const std::string> variables() const noexcept { return vars_; }
  std::span<const FreeIndex> index() const noexcept { return index_; }
  std::span<const FreeElement> elements() const noexcept { return elems_; }
  /// K as given to build_free.
  std::span<const FiniteAlgebra> generating_class() const noexcept { return k_; }

  /// Carrier value of the class of variable `x`.
  Elem generator(const std::string& x) const;
  /// Element whose evaluation tuple is `tuple`, if any.
  std::optional<Elem> find(std::span<const Elem> tuple) const;

 private:
  friend FreeAlgebra build_free(std::span<const FiniteAlgebra>, std::span<const std::string>,
                                const Signature&, const Caps&);

  FiniteAlgebra alg_;
  std::vector<std::string> vars_;
  std::vector<FiniteAlgebra> k_;
  std::vector<FreeIndex> index_;
  std::vector<FreeElement> elems_;
  std::map<std::vector<Elem>, Elem> by_tuple_;
  std::vector<Elem> gens_;
};

/// Worklist closure of the generator tuples under pointwise operations.
/// Labels follow discovery order: generators first (in variable order, a
/// variable identified with an earlier one reuses its element), then
/// constants in symbol order, then applications in the shared closure order.
/// `sig` is needed only when K is empty. Throws CapExceeded naming the
/// dimension ("cells" for the index, "carrier" for the element count),
/// EmptyCarrier, or SignatureMismatch.
FreeAlgebra build_free(std::span<const FiniteAlgebra> k, std::span<const std::string> vars,
                       const Signature& sig, const Caps& caps = {});

inline FreeAlgebra build_free(std::span<const FiniteAlgebra> k, std::span<const std::string> vars,
                              const Caps& caps = {}) {
  if (k.empty()) throw Error(ErrorKind::InvalidArgument, "empty class needs an explicit signature");
  return build_free(k, vars, k.front().signature(), caps);
}

/// Image of a term under the natural epimorphism onto F.
Elem nat_epi(const FreeAlgebra& f, const Term& t);

/// Evaluation tuple of `t` over F's index.
std::vector<Elem> evaluation_tuple(const FreeAlgebra& f, const Term& t);

struct UniversalMapFailure {
  enum class Reason { NotHom, NotSurjective };
  Reason reason;
  std::optional<HomWitness> witness;   // NotHom
  std::optional<Elem> unreached;       // NotSurjective
  CarrierMap candidate;
};

using UniversalMapResult = std::variant<CarrierMap, UniversalMapFailure>;

/// The map e -> evaluate(B, representative(e), assign), checked to be a
/// surjective homomorphism F -> B.
UniversalMapResult universal_map(const FreeAlgebra& f, const FiniteAlgebra& b,
                                 const Environment& assign);

/// `v0`, `v1`, ...
std::vector<std::string> numbered_variables(std::size_t n, const std::string& prefix = "v");

}  // namespace ualg
