#pragma once

#include <stdexcept>
#include <string>

namespace polytile {

enum class Errc {
  NotClosed,
  SelfIntersecting,
  SyntaxError,
  UnknownColor,
  DuplicateTileName,
  IndexOutOfRange,
  BlockNotOnSide,
  OverlappingFeatures,
  ResultSelfIntersects,
  ColorOverflow,
  CavitiesDisjoint,
  InvalidParameter,
  UnknownRole,
  ResidualHoleUnmatched,
  WangTilingInvalid,
  MalformedPattern,
};

const char* errc_name(Errc code);

// All domain failures surface as this exception; code() lets callers branch.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace polytile
