#include "bdc/errors.hpp"

namespace bdc {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::MalformedInput: return "MalformedInput";
    case ErrorCode::NotAlternating: return "NotAlternating";
    case ErrorCode::NotReduced: return "NotReduced";
    case ErrorCode::NonPlanar: return "NonPlanar";
    case ErrorCode::SplitDiagram: return "SplitDiagram";
    case ErrorCode::DegenerateGraph: return "DegenerateGraph";
    case ErrorCode::NonSquare: return "NonSquare";
    case ErrorCode::NonSymmetric: return "NonSymmetric";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::CertificationFailure: return "CertificationFailure";
    case ErrorCode::InvalidEmbedding: return "InvalidEmbedding";
    case ErrorCode::EmptyCharacteristicSet: return "EmptyCharacteristicSet";
    case ErrorCode::NotCharacteristic: return "NotCharacteristic";
    case ErrorCode::NotATree: return "NotATree";
    case ErrorCode::NotExcessive: return "NotExcessive";
    case ErrorCode::EvenDeterminant: return "EvenDeterminant";
    case ErrorCode::InvalidFraction: return "InvalidFraction";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::NotAccessibleByConstruction: return "NotAccessibleByConstruction";
    case ErrorCode::NotReducible: return "NotReducible";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

ErrorClass classify(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::MalformedInput:
    case ErrorCode::DimensionMismatch:
    case ErrorCode::NonSquare:
    case ErrorCode::NonSymmetric:
    case ErrorCode::InvalidFraction:
    case ErrorCode::NotCoprime:
      return ErrorClass::Input;
    case ErrorCode::NotAlternating:
    case ErrorCode::NotReduced:
    case ErrorCode::NonPlanar:
    case ErrorCode::SplitDiagram:
    case ErrorCode::DegenerateGraph:
    case ErrorCode::Singular:
    case ErrorCode::Disconnected:
    case ErrorCode::InvalidEmbedding:
    case ErrorCode::NotATree:
    case ErrorCode::NotExcessive:
    case ErrorCode::NotCharacteristic:
    case ErrorCode::EmptyCharacteristicSet:
    case ErrorCode::NotAccessibleByConstruction:
      return ErrorClass::Topology;
    case ErrorCode::EvenDeterminant:
      return ErrorClass::Hypothesis;
    case ErrorCode::CertificationFailure:
    case ErrorCode::NotReducible:
    case ErrorCode::Internal:
      return ErrorClass::Internal;
  }
  return ErrorClass::Internal;
}

}  // namespace bdc
