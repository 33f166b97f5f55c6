#include "polytile/error.hpp"

namespace polytile {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::NotClosed: return "NotClosed";
    case Errc::SelfIntersecting: return "SelfIntersecting";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::UnknownColor: return "UnknownColor";
    case Errc::DuplicateTileName: return "DuplicateTileName";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::BlockNotOnSide: return "BlockNotOnSide";
    case Errc::OverlappingFeatures: return "OverlappingFeatures";
    case Errc::ResultSelfIntersects: return "ResultSelfIntersects";
    case Errc::ColorOverflow: return "ColorOverflow";
    case Errc::CavitiesDisjoint: return "CavitiesDisjoint";
    case Errc::InvalidParameter: return "InvalidParameter";
    case Errc::UnknownRole: return "UnknownRole";
    case Errc::ResidualHoleUnmatched: return "ResidualHoleUnmatched";
    case Errc::WangTilingInvalid: return "WangTilingInvalid";
    case Errc::MalformedPattern: return "MalformedPattern";
  }
  return "Unknown";
}

}  // namespace polytile
