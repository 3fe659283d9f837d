#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ualg {

enum class ErrorKind {
  UnknownSymbol,
  ArityMismatch,
  OutOfRange,
  SignatureMismatch,
  CarrierMismatch,
  UnboundVariable,
  CapExceeded,
  NotHom,
  NotSurjective,
  KernelInclusion,
  EmptyCarrier,
  BadHypothesis,
  TransMismatch,
  Syntax,
  Validation,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

/// Base of every error raised by the library. The kind is stable and meant
/// for dispatch; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// A configured resource limit was hit. `dimension` names which one
/// ("carrier", "cells", "search", "terms", ...).
class CapExceededError : public Error {
 public:
  CapExceededError(std::string dimension, std::size_t limit)
      : Error(ErrorKind::CapExceeded,
              "cap exceeded: " + dimension + " > " + std::to_string(limit)),
        dimension_(std::move(dimension)),
        limit_(limit) {}

  const std::string& dimension() const noexcept { return dimension_; }
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::string dimension_;
  std::size_t limit_;
};

}  // namespace ualg
