#pragma once

#include <stdexcept>
#include <string>

namespace glwidth {

enum class Errc {
  Singular,
  NotSpanning,
  FiniteSet,
  CharTwo,
  UnsupportedAlpha,
  UnsupportedShape,
  NotInSubgroup,
  OverlapUnresolved,
  WitnessInvalid,
  NotGenerating,
  CapExceeded,
  Unsupported,
  BadDocument,
};

inline const char* errcName(Errc c) {
  switch (c) {
    case Errc::Singular: return "SINGULAR";
    case Errc::NotSpanning: return "NOT_SPANNING";
    case Errc::FiniteSet: return "FINITE_SET";
    case Errc::CharTwo: return "CHAR_TWO";
    case Errc::UnsupportedAlpha: return "UNSUPPORTED_ALPHA";
    case Errc::UnsupportedShape: return "UNSUPPORTED_SHAPE";
    case Errc::NotInSubgroup: return "NOT_IN_SUBGROUP";
    case Errc::OverlapUnresolved: return "OVERLAP_UNRESOLVED";
    case Errc::WitnessInvalid: return "WITNESS_INVALID";
    case Errc::NotGenerating: return "NOT_GENERATING";
    case Errc::CapExceeded: return "CAP_EXCEEDED";
    case Errc::Unsupported: return "UNSUPPORTED";
    case Errc::BadDocument: return "BAD_DOCUMENT";
  }
  return "UNKNOWN";
}

// Operation-level failure with a stable code and a human-readable detail.
class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string detail)
      : std::runtime_error(std::string(errcName(code)) + ": " + detail), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& detail) { throw Error(code, detail); }

}  // namespace glwidth
