/*
   Copyright 2026 The pma-sanitize Authors

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

#ifndef PMA_ERRORS_HPP
#define PMA_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pma {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidPattern : public Error {
public:
    using Error::Error;
};

class InvalidThreshold : public Error {
public:
    using Error::Error;
};

/// Malformed input text. `line()` is 1-based; 0 when no line applies.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Well-formed input that violates a semantic invariant (duplicate pattern...).
class ValidationError : public Error {
public:
    using Error::Error;
};

class OracleCapacityError : public Error {
public:
    using Error::Error;
};

class SelectionError : public Error {
public:
    using Error::Error;
};

/// The sanitized database is not derivable from the original by deletions.
class InvalidPairError : public Error {
public:
    using Error::Error;
};

}  // namespace pma

#endif  // PMA_ERRORS_HPP
