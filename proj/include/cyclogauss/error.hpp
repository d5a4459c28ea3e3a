#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cyclogauss {

/// Named precondition failures raised by the library.
enum class Errc {
  CompositeP,
  Overflow,
  NotCoprime,
  NotDivisor,
  NotRational,
  MismatchedN,
  NotAP,
  NotSquareQ,
  MidValueMismatch,
  AsymmetricClasses,
  BadDiscriminant,
  NotIndex2,
  NoDecomposition,
  PreconditionFailed,
  BaseNotTwoValued,
  InvalidArgument,
  Io,
};

std::string_view to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace cyclogauss
