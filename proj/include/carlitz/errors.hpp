// Copyright 2026 The carlitz-jets Authors.
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

#pragma once

#include <stdexcept>
#include <string>

namespace carlitz {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define CARLITZ_DEFINE_ERROR(Name)          \
  class Name : public Error {               \
   public:                                  \
    explicit Name(const std::string& what)  \
        : Error(#Name ": " + what) {}       \
  }

CARLITZ_DEFINE_ERROR(DivisionByZero);
CARLITZ_DEFINE_ERROR(SpecMismatch);
CARLITZ_DEFINE_ERROR(InvalidCharacteristic);
CARLITZ_DEFINE_ERROR(InvalidSpec);
CARLITZ_DEFINE_ERROR(NonUnit);
CARLITZ_DEFINE_ERROR(BudgetExceeded);
CARLITZ_DEFINE_ERROR(InsufficientPrecision);
CARLITZ_DEFINE_ERROR(ShapeMismatch);
CARLITZ_DEFINE_ERROR(WindowEmpty);
CARLITZ_DEFINE_ERROR(MalformedOrder);
CARLITZ_DEFINE_ERROR(SegmentViolation);
CARLITZ_DEFINE_ERROR(ParseError);

#undef CARLITZ_DEFINE_ERROR

}  // namespace carlitz
