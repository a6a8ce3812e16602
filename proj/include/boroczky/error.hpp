#pragma once

#include <stdexcept>
#include <string>

namespace boroczky {

enum class Errc {
  IndexBeyondWord,
  FiniteWordMode,
  EmptyWindow,
  WallDissectsTile,
  WindowTooSmall,
  InsufficientData,
  UnsupportedDimension,
  ParseError,
  ValidationError,
  InvalidArgument,
};

const char* to_string(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map them onto exit paths.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace boroczky
