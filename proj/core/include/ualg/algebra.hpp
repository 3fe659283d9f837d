#pragma once

// Finite signatures and finite algebras over the carrier {0, ..., n-1}.
//
// Operation tables are stored row-major: the entry for arguments
// (a_1, ..., a_k) lives at sum a_i * n^(k-i).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ualg/error.hpp"

namespace ualg {

using Elem = std::uint32_t;

/// Resource limits shared by every search and construction in the library.
struct Caps {
  std::size_t carrier = 4096;    // largest constructed carrier
  std::size_t cells = 1'000'000;  // free-algebra tuple cells
  std::size_t search = 1'000'000;  // explored candidates / environments / terms
};

struct OpSymbol {
  std::string name;
  std::size_t arity = 0;

  bool operator==(const OpSymbol&) const = default;
};

/// Ordered list of operation symbols. The order is the canonical symbol order
/// used for every enumeration downstream.
class Signature {
 public:
  Signature() = default;
  explicit Signature(std::vector<OpSymbol> ops);

  /// Appends a symbol; throws InvalidArgument on a duplicate name.
  void add(std::string name, std::size_t arity);

  std::size_t size() const noexcept { return ops_.size(); }
  bool empty() const noexcept { return ops_.empty(); }
  const OpSymbol& operator[](std::size_t i) const { return ops_[i]; }
  std::span<const OpSymbol> ops() const noexcept { return ops_; }

  std::optional<std::size_t> find(std::string_view name) const;
  /// Like find, but throws UnknownSymbol.
  std::size_t index_of(std::string_view name) const;
  bool has_constants() const;
  std::size_t max_arity() const;

  bool operator==(const Signature&) const = default;

 private:
  std::vector<OpSymbol> ops_;
};

struct Violation {
  std::string symbol;
  std::optional<std::size_t> index;  // table position, absent for length errors
  std::string message;

  std::string to_string() const;
};

class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const noexcept { return violations_; }

 private:
  std::vector<Violation> violations_;
};

class FiniteAlgebra {
 public:
  FiniteAlgebra() = default;
  /// Stores the data as given. Use validate() or make() to check it.
  FiniteAlgebra(Signature sig, std::size_t size,
                std::vector<std::vector<Elem>> tables, std::string name = {});

  /// Constructs and validates; throws ValidationError.
  static FiniteAlgebra make(Signature sig, std::size_t size,
                            std::vector<std::vector<Elem>> tables,
                            std::string name = {});

  const Signature& signature() const noexcept { return sig_; }
  std::size_t size() const noexcept { return size_; }
  const std::string& name() const noexcept { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  std::span<const Elem> table(std::size_t op) const { return tables_[op]; }
  const std::vector<std::vector<Elem>>& tables() const noexcept { return tables_; }

  /// Unchecked fast path for validated algebras.
  Elem apply(std::size_t op, std::span<const Elem> args) const;

  /// Checked application by symbol name. Throws UnknownSymbol, ArityMismatch
  /// or OutOfRange.
  Elem apply_op(std::string_view symbol, std::span<const Elem> args) const;

  /// Structural equality; the name is not compared.
  bool operator==(const FiniteAlgebra& other) const;

 private:
  Signature sig_;
  std::size_t size_ = 0;
  std::vector<std::vector<Elem>> tables_;
  std::string name_;
};

std::vector<Violation> validate(const FiniteAlgebra& alg);

/// Free-function spelling of FiniteAlgebra::apply_op.
inline Elem apply_op(const FiniteAlgebra& alg, std::string_view symbol,
                     std::span<const Elem> args) {
  return alg.apply_op(symbol, args);
}

std::size_t row_major_index(std::span<const Elem> args, std::size_t n);
void row_major_decode(std::size_t index, std::size_t n, std::span<Elem> out);

/// base^exp, or nullopt when the result exceeds `limit`.
std::optional<std::size_t> bounded_power(std::size_t base, std::size_t exp,
                                         std::size_t limit);

/// Calls fn(span<const Elem>) for every tuple in [0,n)^k in row-major order.
template <class Fn>
void for_each_tuple(std::size_t n, std::size_t k, Fn&& fn) {
  std::vector<Elem> t(k, 0);
  if (k > 0 && n == 0) return;
  for (;;) {
    fn(std::span<const Elem>(t));
    std::size_t i = k;
    for (;;) {
      if (i == 0) return;
      --i;
      if (++t[i] < n) break;
      t[i] = 0;
    }
  }
}

}  // namespace ualg
