#pragma once

// Shared discovery order for worklist closures (generated subalgebras and
// free algebras), so both label their elements the same way.

#include <algorithm>
#include <vector>

#include "ualg/algebra.hpp"

namespace ualg::detail {

/// For p = 0, 1, ... (re-reading count() as the worklist grows) and each
/// non-nullary symbol in signature order, calls visit(op, labels) once for
/// every label tuple whose largest entry is p, in lexicographic order. Every
/// tuple over the final carrier is visited exactly once.
template <class Count, class Visit>
void for_each_new_application(const Signature& sig, Count&& count, Visit&& visit) {
  std::vector<Elem> t(sig.max_arity());
  for (std::size_t p = 0; p < count(); ++p) {
    const auto top = static_cast<Elem>(p);
    for (std::size_t op = 0; op < sig.size(); ++op) {
      const std::size_t k = sig[op].arity;
      if (k == 0) continue;
      // odometer over [0, p]^k; `tops` counts entries equal to p
      std::fill(t.begin(), t.begin() + k, Elem{0});
      std::size_t tops = p == 0 ? k : 0;
      for (bool more = true; more;) {
        if (tops > 0) visit(op, std::span<const Elem>(t.data(), k));
        more = false;
        for (std::size_t i = k; i-- > 0;) {
          if (t[i] == top) {
            t[i] = 0;
            if (p != 0) --tops;
            continue;
          }
          if (++t[i] == top) ++tops;
          more = true;
          break;
        }
      }
    }
  }
}

inline constexpr std::size_t kMaxTableEntries = std::size_t{1} << 26;

/// Operation tables over [0, n) with entry(op, args) for every argument tuple.
template <class Entry>
std::vector<std::vector<Elem>> build_tables(const Signature& sig, std::size_t n, Entry&& entry) {
  std::vector<std::vector<Elem>> tables(sig.size());
  for (std::size_t op = 0; op < sig.size(); ++op) {
    const auto len = bounded_power(n, sig[op].arity, kMaxTableEntries);
    if (!len) throw CapExceededError("table entries", kMaxTableEntries);
    auto& table = tables[op];
    table.reserve(*len);
    for_each_tuple(n, sig[op].arity, [&](std::span<const Elem> args) {
      table.push_back(entry(op, args));
    });
  }
  return tables;
}

}  // namespace ualg::detail
