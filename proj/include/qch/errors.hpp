/*
   Copyright 2026 The qch Authors

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

#ifndef QCH_ERRORS_HPP
#define QCH_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace qch {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

#define QCH_DEFINE_ERROR(Name)          \
    class Name : public Error {         \
       public:                          \
        using Error::Error;             \
    };

QCH_DEFINE_ERROR(DomainError)
QCH_DEFINE_ERROR(PoleError)
QCH_DEFINE_ERROR(ZeroQError)
QCH_DEFINE_ERROR(IndexError)
QCH_DEFINE_ERROR(RangeError)
QCH_DEFINE_ERROR(ShapeError)
QCH_DEFINE_ERROR(NotSkewInvertible)
QCH_DEFINE_ERROR(NotInvertible)
QCH_DEFINE_ERROR(DegenerateQ)
QCH_DEFINE_ERROR(NonStandardTarget)
QCH_DEFINE_ERROR(BoundExceeded)
QCH_DEFINE_ERROR(Unsupported)
QCH_DEFINE_ERROR(ConfigError)

#undef QCH_DEFINE_ERROR

/// Malformed scalar text; carries the offending byte offset.
class SyntaxError : public Error {
   public:
    SyntaxError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const noexcept { return position_; }

   private:
    std::size_t position_;
};

/// An identity failed to hold; `residual` is a printable description of the first nonzero residual.
class VerificationFailed : public Error {
   public:
    VerificationFailed(const std::string& what, std::string residual)
        : Error(what), residual_(std::move(residual)) {}
    const std::string& residual() const noexcept { return residual_; }

   private:
    std::string residual_;
};

}  // namespace qch

#endif
