#include "vpart/error.hpp"

namespace vpart {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidInput: return "InvalidInput";
    case Errc::EmptyMatrix: return "EmptyMatrix";
    case Errc::ZeroColumn: return "ZeroColumn";
    case Errc::OriginInHull: return "OriginInHull";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::ParallelColumns: return "ParallelColumns";
    case Errc::TooFewColumns: return "TooFewColumns";
    case Errc::OrderTooHigh: return "OrderTooHigh";
    case Errc::DegenerateBase: return "DegenerateBase";
    case Errc::NotCoprime: return "NotCoprime";
    case Errc::NotInvertible: return "NotInvertible";
    case Errc::NotOnePrime: return "NotOnePrime";
    case Errc::NonIntegerResult: return "NonIntegerResult";
    case Errc::PreconditionFailed: return "PreconditionFailed";
    case Errc::NotPairwiseCoprime: return "NotPairwiseCoprime";
    case Errc::DegenerateDirection: return "DegenerateDirection";
    case Errc::HorizonExceeded: return "HorizonExceeded";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code), detail_(message) {}

}  // namespace vpart
