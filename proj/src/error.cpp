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

#include "mhom/error.hpp"

namespace mhom {

std::string_view kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::EmptyCircuit: return "EmptyCircuit";
    case ErrorKind::NotAntichain: return "NotAntichain";
    case ErrorKind::EliminationFails: return "EliminationFails";
    case ErrorKind::DuplicateLabel: return "DuplicateLabel";
    case ErrorKind::EmptyLabel: return "EmptyLabel";
    case ErrorKind::DuplicateCircuit: return "DuplicateCircuit";
    case ErrorKind::ElementNotInGround: return "ElementNotInGround";
    case ErrorKind::InvalidParameters: return "InvalidParameters";
    case ErrorKind::InvalidVertex: return "InvalidVertex";
    case ErrorKind::FiberOverlap: return "FiberOverlap";
    case ErrorKind::EmptyFiber: return "EmptyFiber";
    case ErrorKind::GroundMismatch: return "GroundMismatch";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::PartialMap: return "PartialMap";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::SpecTooLarge: return "SpecTooLarge";
    case ErrorKind::NotConnected: return "NotConnected";
    case ErrorKind::HasColoops: return "HasColoops";
    case ErrorKind::NotCR2: return "NotCR2";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::NoSuchCircuit: return "NoSuchCircuit";
    case ErrorKind::NoCoveringCircuit: return "NoCoveringCircuit";
    case ErrorKind::NoSuchB: return "NoSuchB";
    case ErrorKind::InternalTheoremViolation: return "InternalTheoremViolation";
  }
  return "Unknown";
}

}  // namespace mhom
