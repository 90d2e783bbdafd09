// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The eudoxos Authors

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace eudoxos {

enum class ErrorCode {
  KindMismatch,
  NotGreater,
  NoWitness,
  Indistinguishable,
  NotArchimedean,
  NonPositive,
  EmptySum,
  DegeneratePolygon,
  NotSimple,
  IrrationalVertex,
  InvalidInput,
  Collinear,
  DuplicatePoint,
  NotAcute,
  DomainError,
  EmptyArc,
  NotDisjoint,
  UnknownAtResolution,
  NoCommonRepresentation,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so the
/// CLI can map it onto an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace eudoxos
