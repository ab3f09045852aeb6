#pragma once

#include <stdexcept>
#include <string>

namespace fairaug {

// Stable error codes; each maps to one of three kinds that the CLI turns
// into process exit codes (validation=1, io=2, internal=3).
enum class Errc {
  // manifest
  MissingColumn,
  UnparsableValue,
  DuplicateSubjectId,
  FrameIndexOutOfRange,
  InvalidRecord,
  EmptyManifest,
  // stratify
  EmptyCell,
  SampleLargerThanPopulation,
  NoDonorInGroup,
  // preprocess
  InsufficientSlices,
  TemporalBoundary,
  IndexOutOfRange,
  InvalidSide,
  // radiomics
  MaskTooSmall,
  NoValidPairs,
  EmptyStructure,
  // frd
  ReferenceTooSmall,
  TooFewSamples,
  NotSymmetric,
  IndefiniteBeyondTolerance,
  DimensionMismatch,
  // fairmetrics
  SingleClass,
  TooFewGroups,
  JoinFailure,
  BootstrapUnstable,
  // genbridge
  NotEnoughSynthetic,
  MaskUnreadable,
  AllOutputsMissing,
  // generic
  InvalidArgument,
  IoFailure,
  BadImage,
  Internal,
};

enum class ErrorKind { Validation = 1, Io = 2, Internal = 3 };

const char* errc_name(Errc c);
ErrorKind errc_kind(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  Errc code() const { return code_; }
  ErrorKind kind() const { return errc_kind(code_); }

 private:
  Errc code_;
};

}  // namespace fairaug
