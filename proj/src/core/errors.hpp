/*
 * Copyright (c) the wigner9j developers.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <stdexcept>
#include <string>

namespace w9j {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : Error {
  using Error::Error;
};
struct InvalidTriad : Error {
  using Error::Error;
};
struct NonTerminating : Error {
  using Error::Error;
};
struct DenominatorPole : Error {
  using Error::Error;
};
struct PoleError : Error {
  using Error::Error;
};
struct NonIntegerOffset : Error {
  using Error::Error;
};
struct MixedRadicands : Error {
  using Error::Error;
};
struct ArityMismatch : Error {
  using Error::Error;
};
struct ParityViolation : Error {
  using Error::Error;
};
struct VerificationMismatch : Error {
  using Error::Error;
};
struct FormulaMismatch : Error {
  using Error::Error;
};

}  // namespace w9j
