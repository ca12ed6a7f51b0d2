// Copyright 2026 The treehardy Authors
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

#include <cstdint>
#include <stdexcept>
#include <string>

namespace treehardy {

// Base of every exception thrown by the library. name() is the stable
// identifier the CLI prints on the diagnostic stream.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    virtual const char* name() const noexcept = 0;
};

class RootHasNoParent final : public Error {
public:
    RootHasNoParent() : Error("the root vertex has no parent") {}
    const char* name() const noexcept override { return "RootHasNoParent"; }
};

class LevelTooLarge final : public Error {
public:
    LevelTooLarge(unsigned level, std::uint64_t cap)
        : Error("level " + std::to_string(level) + " has more than " + std::to_string(cap) +
                " vertices; dense enumeration refused"),
          level_(level), cap_(cap) {}
    const char* name() const noexcept override { return "LevelTooLarge"; }
    unsigned level() const noexcept { return level_; }
    std::uint64_t cap() const noexcept { return cap_; }

private:
    unsigned level_;
    std::uint64_t cap_;
};

class InvalidVertex final : public Error {
public:
    using Error::Error;
    const char* name() const noexcept override { return "InvalidVertex"; }
};

class InvalidGeometry final : public Error {
public:
    using Error::Error;
    const char* name() const noexcept override { return "InvalidGeometry"; }
};

class GeometryMismatch final : public Error {
public:
    GeometryMismatch() : Error("functions live on trees with different branching") {}
    const char* name() const noexcept override { return "GeometryMismatch"; }
};

class InvalidExponent final : public Error {
public:
    using Error::Error;
    const char* name() const noexcept override { return "InvalidExponent"; }
};

class InvalidExponents final : public Error {
public:
    using Error::Error;
    const char* name() const noexcept override { return "InvalidExponents"; }
};

class InconsistentTail final : public Error {
public:
    using Error::Error;
    const char* name() const noexcept override { return "InconsistentTail"; }
};

class NotInvertible final : public Error {
public:
    using Error::Error;
    const char* name() const noexcept override { return "NotInvertible"; }
};

class InvalidArgument final : public Error {
public:
    using Error::Error;
    const char* name() const noexcept override { return "InvalidArgument"; }
};

class ParseError final : public Error {
public:
    using Error::Error;
    const char* name() const noexcept override { return "ParseError"; }
};

}  // namespace treehardy
