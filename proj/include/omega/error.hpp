/*
 * Copyright 2026 The omegajump Authors
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace omega {

class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// A structural invariant of an automaton, word or game does not hold.
class ValidationError : public Error
{
public:
    using Error::Error;
};

/// Operands are over different alphabets, or an alphabet is not a superset.
class AlphabetMismatch : public Error
{
public:
    using Error::Error;
};

/// An exponential construction would exceed its configured size cap.
class GuardExceeded : public Error
{
public:
    using Error::Error;
};

class ParseError : public Error
{
public:
    ParseError(std::size_t line, const std::string& msg)
        : Error("line " + std::to_string(line) + ": " + msg), line_(line)
    {
    }

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

} // namespace omega
