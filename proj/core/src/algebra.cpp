#include "ualg/algebra.hpp"

#include <algorithm>
#include <limits>

namespace ualg {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UnknownSymbol: return "unknown symbol";
    case ErrorKind::ArityMismatch: return "arity mismatch";
    case ErrorKind::OutOfRange: return "out of range";
    case ErrorKind::SignatureMismatch: return "signature mismatch";
    case ErrorKind::CarrierMismatch: return "carrier mismatch";
    case ErrorKind::UnboundVariable: return "unbound variable";
    case ErrorKind::CapExceeded: return "cap exceeded";
    case ErrorKind::NotHom: return "not a homomorphism";
    case ErrorKind::NotSurjective: return "not surjective";
    case ErrorKind::KernelInclusion: return "kernel inclusion fails";
    case ErrorKind::EmptyCarrier: return "empty carrier";
    case ErrorKind::BadHypothesis: return "bad hypothesis index";
    case ErrorKind::TransMismatch: return "transitivity middle mismatch";
    case ErrorKind::Syntax: return "syntax error";
    case ErrorKind::Validation: return "validation error";
    case ErrorKind::InvalidArgument: return "invalid argument";
  }
  return "error";
}

Signature::Signature(std::vector<OpSymbol> ops) {
  for (auto& op : ops) add(std::move(op.name), op.arity);
}

void Signature::add(std::string name, std::size_t arity) {
  if (find(name)) {
    throw Error(ErrorKind::InvalidArgument, "duplicate operation symbol '" + name + "'");
  }
  ops_.push_back({std::move(name), arity});
}

std::optional<std::size_t> Signature::find(std::string_view name) const {
  for (std::size_t i = 0; i < ops_.size(); ++i) {
    if (ops_[i].name == name) return i;
  }
  return std::nullopt;
}

std::size_t Signature::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw Error(ErrorKind::UnknownSymbol, "unknown operation symbol '" + std::string(name) + "'");
}

bool Signature::has_constants() const {
  return std::any_of(ops_.begin(), ops_.end(), [](const OpSymbol& op) { return op.arity == 0; });
}

std::size_t Signature::max_arity() const {
  std::size_t m = 0;
  for (const auto& op : ops_) m = std::max(m, op.arity);
  return m;
}

std::string Violation::to_string() const {
  std::string s = symbol.empty() ? message : symbol + ": " + message;
  if (index) s += " at index " + std::to_string(*index);
  return s;
}

namespace {

std::string join_violations(const std::vector<Violation>& vs) {
  std::string s = "invalid algebra";
  for (const auto& v : vs) s += "; " + v.to_string();
  return s;
}

}  // namespace

ValidationError::ValidationError(std::vector<Violation> violations)
    : Error(ErrorKind::Validation, join_violations(violations)),
      violations_(std::move(violations)) {}

FiniteAlgebra::FiniteAlgebra(Signature sig, std::size_t size,
                             std::vector<std::vector<Elem>> tables, std::string name)
    : sig_(std::move(sig)), size_(size), tables_(std::move(tables)), name_(std::move(name)) {}

FiniteAlgebra FiniteAlgebra::make(Signature sig, std::size_t size,
                                  std::vector<std::vector<Elem>> tables, std::string name) {
  FiniteAlgebra alg(std::move(sig), size, std::move(tables), std::move(name));
  if (auto vs = validate(alg); !vs.empty()) throw ValidationError(std::move(vs));
  return alg;
}

Elem FiniteAlgebra::apply(std::size_t op, std::span<const Elem> args) const {
  return tables_[op][row_major_index(args, size_)];
}

Elem FiniteAlgebra::apply_op(std::string_view symbol, std::span<const Elem> args) const {
  const std::size_t op = sig_.index_of(symbol);
  if (args.size() != sig_[op].arity) {
    throw Error(ErrorKind::ArityMismatch,
                "symbol '" + std::string(symbol) + "' expects " +
                    std::to_string(sig_[op].arity) + " arguments, got " +
                    std::to_string(args.size()));
  }
  for (Elem a : args) {
    if (a >= size_) {
      throw Error(ErrorKind::OutOfRange, "argument " + std::to_string(a) +
                                             " outside carrier of size " +
                                             std::to_string(size_));
    }
  }
  const std::size_t idx = row_major_index(args, size_);
  if (op >= tables_.size() || idx >= tables_[op].size()) {
    throw Error(ErrorKind::Validation,
                "table for '" + std::string(symbol) + "' is too short");
  }
  return tables_[op][idx];
}

bool FiniteAlgebra::operator==(const FiniteAlgebra& other) const {
  return size_ == other.size_ && sig_ == other.sig_ && tables_ == other.tables_;
}

std::vector<Violation> validate(const FiniteAlgebra& alg) {
  std::vector<Violation> out;
  const auto& sig = alg.signature();
  const std::size_t n = alg.size();
  if (n == 0) out.push_back({"", std::nullopt, "size must be at least 1"});
  if (alg.tables().size() != sig.size()) {
    out.push_back({"", std::nullopt,
                   "expected " + std::to_string(sig.size()) + " tables, got " +
                       std::to_string(alg.tables().size())});
    return out;
  }
  for (std::size_t op = 0; op < sig.size(); ++op) {
    const auto& name = sig[op].name;
    const auto table = alg.table(op);
    const auto expected =
        bounded_power(n, sig[op].arity, std::numeric_limits<std::size_t>::max());
    if (!expected || table.size() != *expected) {
      out.push_back({name, std::nullopt,
                     "expected " + (expected ? std::to_string(*expected) : std::string("too many")) +
                         " entries, got " + std::to_string(table.size())});
      continue;
    }
    for (std::size_t i = 0; i < table.size(); ++i) {
      if (table[i] >= n) {
        out.push_back({name, i,
                       "entry " + std::to_string(table[i]) + " >= size " + std::to_string(n)});
      }
    }
  }
  return out;
}

std::size_t row_major_index(std::span<const Elem> args, std::size_t n) {
  std::size_t idx = 0;
  for (Elem a : args) idx = idx * n + a;
  return idx;
}

void row_major_decode(std::size_t index, std::size_t n, std::span<Elem> out) {
  for (std::size_t i = out.size(); i > 0; --i) {
    out[i - 1] = static_cast<Elem>(index % n);
    index /= n;
  }
}

std::optional<std::size_t> bounded_power(std::size_t base, std::size_t exp, std::size_t limit) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && r > limit / base) return std::nullopt;
    r *= base;
  }
  if (r > limit) return std::nullopt;
  return r;
}

}  // namespace ualg
