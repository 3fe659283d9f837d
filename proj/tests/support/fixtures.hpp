#pragma once

// Small algebras shared by the unit and acceptance tests.

#include <functional>
#include <string>
#include <vector>

#include "ualg/algebra.hpp"

namespace fixtures {

using ualg::Elem;
using ualg::FiniteAlgebra;
using ualg::Signature;

inline Signature binary() { return Signature({{"f", 2}}); }

/// Binary table over [0, n) from a function.
inline std::vector<Elem> table2(std::size_t n, const std::function<Elem(Elem, Elem)>& fn) {
  std::vector<Elem> t;
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) t.push_back(fn(a, b));
  return t;
}

inline FiniteAlgebra cyclic(std::size_t n, const std::string& name) {
  return FiniteAlgebra::make(binary(), n,
                             {table2(n, [n](Elem a, Elem b) { return static_cast<Elem>((a + b) % n); })},
                             name);
}

inline FiniteAlgebra z2_xor() { return cyclic(2, "z2xor"); }
inline FiniteAlgebra z3_add() { return cyclic(3, "z3add"); }
inline FiniteAlgebra z4_add() { return cyclic(4, "z4add"); }

/// Meet semilattice on {0 < 1}.
inline FiniteAlgebra semilattice2() {
  return FiniteAlgebra::make(binary(), 2, {{0, 0, 0, 1}}, "slat2");
}

/// f(x, y) = x: idempotent, associative, not commutative.
inline FiniteAlgebra left_zero2() {
  return FiniteAlgebra::make(binary(), 2, {{0, 0, 1, 1}}, "left2");
}

/// Neither commutative nor associative nor idempotent.
inline FiniteAlgebra magma3() {
  return FiniteAlgebra::make(binary(), 3, {{1, 2, 0, 0, 0, 2, 1, 1, 1}}, "magma3");
}

/// Z3 as a group: multiplication, inverse, identity.
inline Signature group_sig() { return Signature({{"m", 2}, {"i", 1}, {"e", 0}}); }

inline FiniteAlgebra z3_group() {
  return FiniteAlgebra::make(
      group_sig(), 3,
      {table2(3, [](Elem a, Elem b) { return static_cast<Elem>((a + b) % 3); }), {0, 2, 1}, {0}},
      "z3grp");
}

}  // namespace fixtures
