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

#include "trophom/error.h"

namespace trophom {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidParameters: return "InvalidParameters";
    case ErrorCode::kGroundSetTooLarge: return "GroundSetTooLarge";
    case ErrorCode::kNotALattice: return "NotALattice";
    case ErrorCode::kPartitionAxiomFails: return "PartitionAxiomFails";
    case ErrorCode::kLoops: return "Loops";
    case ErrorCode::kExchangeAxiomFails: return "ExchangeAxiomFails";
    case ErrorCode::kRankTooSmall: return "RankTooSmall";
    case ErrorCode::kNonGenericWeight: return "NonGenericWeight";
    case ErrorCode::kTOutOfRange: return "TOutOfRange";
    case ErrorCode::kNotComparable: return "NotComparable";
    case ErrorCode::kFaceNotInComplex: return "FaceNotInComplex";
    case ErrorCode::kNotASubcomplex: return "NotASubcomplex";
    case ErrorCode::kVoidComplex: return "VoidComplex";
    case ErrorCode::kNotPure: return "NotPure";
    case ErrorCode::kNotAPermutation: return "NotAPermutation";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kNotASubchain: return "NotASubchain";
    case ErrorCode::kNotAFlat: return "NotAFlat";
    case ErrorCode::kNonGenericHalfspace: return "NonGenericHalfspace";
    case ErrorCode::kParse: return "Parse";
    case ErrorCode::kInternal: return "Internal";
  }
  return "Unknown";
}

}  // namespace trophom
