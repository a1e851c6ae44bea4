/*
   Copyright 2026 The brauer-residues Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef BRAUER_ERROR_HPP
#define BRAUER_ERROR_HPP

#include <stdexcept>
#include <string>

namespace brauer {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual input (polynomial, symbol or place grammar).
class ParseError : public Error {
public:
    using Error::Error;
};

/// Parameters that violate a structural requirement, e.g. n not dividing q - 1.
class ConstraintError : public Error {
public:
    using Error::Error;
};

/// A mathematical precondition of an operation does not hold for its arguments.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Enumeration would exceed the configured table size.
class SizeGuardError : public Error {
public:
    using Error::Error;
};

/// A conic bundle admits no rank-2 local model at some place.
class NonStandardModelError : public Error {
public:
    using Error::Error;
};

} // namespace brauer

#endif // BRAUER_ERROR_HPP
