// Copyright 2026 The Inose-MWL Authors.
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

#include "inose/errors.hpp"
#include "inose/rational.hpp"

#include <cctype>

namespace inose {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotMonic: return "NotMonic";
    case ErrorCode::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NotAField: return "NotAField";
    case ErrorCode::TowerMismatch: return "TowerMismatch";
    case ErrorCode::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorCode::IndeterminateForm: return "IndeterminateForm";
    case ErrorCode::ZeroFunction: return "ZeroFunction";
    case ErrorCode::NotInSubfield: return "NotInSubfield";
    case ErrorCode::PointNotOnCurve: return "PointNotOnCurve";
    case ErrorCode::SingularCurve: return "SingularCurve";
    case ErrorCode::ZeroScale: return "ZeroScale";
    case ErrorCode::SingularPoint: return "SingularPoint";
    case ErrorCode::SingularMember: return "SingularMember";
    case ErrorCode::SingularInput: return "SingularInput";
    case ErrorCode::UnsupportedN: return "UnsupportedN";
    case ErrorCode::DegenerateSystem: return "DegenerateSystem";
    case ErrorCode::ResidualNotRational: return "ResidualNotRational";
    case ErrorCode::ImageOffCurve: return "ImageOffCurve";
    case ErrorCode::UnhandledType: return "UnhandledType";
    case ErrorCode::InvalidAutomorphism: return "InvalidAutomorphism";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

BigRational parse_rational(const std::string& text) {
  std::string t;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
  if (t.empty()) fail(ErrorCode::ParseError, "empty rational");
  BigRational q;
  if (q.set_str(t, 10) != 0) fail(ErrorCode::ParseError, "bad rational '" + text + "'");
  if (q.get_den() == 0) fail(ErrorCode::DivisionByZero, "zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const BigRational& q) { return q.get_str(); }

}  // namespace inose
