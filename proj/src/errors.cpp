#include "gdelta/errors.hpp"

namespace gdelta {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Syntax: return "SyntaxError";
    case ErrorKind::NotPrenex: return "NotPrenex";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::NotGround: return "NotGround";
    case ErrorKind::MissingAtom: return "MissingAtom";
    case ErrorKind::TooManyAtoms: return "TooManyAtoms";
    case ErrorKind::TooManyTerms: return "TooManyTerms";
    case ErrorKind::NonGround: return "NonGround";
    case ErrorKind::NotDeltaPrefixed: return "NotDeltaPrefixed";
    case ErrorKind::NotHexShape: return "NotHexShape";
    case ErrorKind::MalformedWitness: return "MalformedWitness";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::BadTrace: return "BadTrace";
  }
  return "Error";
}

}  // namespace gdelta
