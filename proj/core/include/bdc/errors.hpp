#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bdc {

enum class ErrorCode {
  MalformedInput,
  NotAlternating,
  NotReduced,
  NonPlanar,
  SplitDiagram,
  DegenerateGraph,
  NonSquare,
  NonSymmetric,
  Singular,
  DimensionMismatch,
  Disconnected,
  CertificationFailure,
  InvalidEmbedding,
  EmptyCharacteristicSet,
  NotCharacteristic,
  NotATree,
  NotExcessive,
  EvenDeterminant,
  InvalidFraction,
  NotCoprime,
  NotAccessibleByConstruction,
  NotReducible,
  Internal,
};

std::string_view to_string(ErrorCode code) noexcept;

// Broad classes used to pick process exit codes.
enum class ErrorClass { Input, Topology, Hypothesis, Internal };
ErrorClass classify(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Internal consistency check; failure means a bug, not bad input.
#define BDC_ASSERT(cond, msg)                                           \
  do {                                                                  \
    if (!(cond)) throw ::bdc::Error(::bdc::ErrorCode::Internal, (msg)); \
  } while (false)

}  // namespace bdc
