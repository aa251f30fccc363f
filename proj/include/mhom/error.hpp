// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MHOM_ERROR_HPP_
#define MHOM_ERROR_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mhom/element_set.hpp"

namespace mhom {

enum class ErrorKind {
  // Circuit axioms.
  EmptyCircuit,
  NotAntichain,
  EliminationFails,
  // Input shape.
  DuplicateLabel,
  EmptyLabel,
  DuplicateCircuit,
  ElementNotInGround,
  InvalidParameters,
  InvalidVertex,
  FiberOverlap,
  EmptyFiber,
  GroundMismatch,
  SizeMismatch,
  PartialMap,
  ParseError,
  UnknownName,
  SpecTooLarge,
  // Structural preconditions.
  NotConnected,
  HasColoops,
  NotCR2,
  PreconditionViolated,
  // Outcomes that would contradict a proven statement.
  NoSuchCircuit,
  NoCoveringCircuit,
  NoSuchB,
  InternalTheoremViolation,
};

std::string_view kind_name(ErrorKind kind);

// The single exception type thrown by the library. Carries the offending
// sets (in dense indices of whatever ground set the operation was given) and
// an optional offending element.
class MatroidError : public std::runtime_error {
 public:
  MatroidError(ErrorKind kind, const std::string& message,
               std::vector<ElementSet> sets = {},
               std::optional<Element> element = std::nullopt)
      : std::runtime_error(std::string(kind_name(kind)) + ": " + message),
        kind_(kind),
        sets_(std::move(sets)),
        element_(element) {}

  ErrorKind kind() const { return kind_; }
  const std::vector<ElementSet>& sets() const { return sets_; }
  std::optional<Element> element() const { return element_; }

 private:
  ErrorKind kind_;
  std::vector<ElementSet> sets_;
  std::optional<Element> element_;
};

}  // namespace mhom

#endif  // MHOM_ERROR_HPP_
