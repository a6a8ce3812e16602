#include "boroczky/error.hpp"

namespace boroczky {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::IndexBeyondWord: return "IndexBeyondWord";
    case Errc::FiniteWordMode: return "FiniteWordMode";
    case Errc::EmptyWindow: return "EmptyWindow";
    case Errc::WallDissectsTile: return "WallDissectsTile";
    case Errc::WindowTooSmall: return "WindowTooSmall";
    case Errc::InsufficientData: return "InsufficientData";
    case Errc::UnsupportedDimension: return "UnsupportedDimension";
    case Errc::ParseError: return "ParseError";
    case Errc::ValidationError: return "ValidationError";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace boroczky
