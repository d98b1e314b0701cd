// Copyright 2026 The realhaar Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef REALHAAR_ERRORS_H
#define REALHAAR_ERRORS_H

#include <stdexcept>
#include <string>

namespace realhaar {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
    virtual const char *kind() const noexcept = 0;
};

/// An argument is outside the mathematical domain of an operation.
class DomainError : public Error {
   public:
    using Error::Error;
    const char *kind() const noexcept override {
        return "domain";
    }
};

/// A formula was asked for outside the (d, t) regime it is valid in.
class UnsupportedRegimeError : public Error {
   public:
    using Error::Error;
    const char *kind() const noexcept override {
        return "unsupported_regime";
    }
};

/// A documented precondition of a closed form or bound does not hold.
class PreconditionError : public Error {
   public:
    using Error::Error;
    const char *kind() const noexcept override {
        return "precondition";
    }
};

/// A dense d^t construction would exceed the configured matrix cap.
class ResourceError : public Error {
   public:
    using Error::Error;
    const char *kind() const noexcept override {
        return "resource";
    }
};

/// Two independent computations of the same quantity disagreed.
class VerificationError : public Error {
   public:
    using Error::Error;
    const char *kind() const noexcept override {
        return "verification";
    }
};

}  // namespace realhaar

#endif
