/*
   Copyright 2026 The qsync Authors

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

#ifndef QSYNC_ERRORS_HPP
#define QSYNC_ERRORS_HPP

#include <stdexcept>

namespace qsync {

/// Caller supplied something outside an operation's contract.
class InvalidArgument : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Misalignment margins c_l + c_r reach or exceed ord(f).
class ToleranceExceeded : public InvalidArgument {
   public:
    using InvalidArgument::InvalidArgument;
};

/// An algebraic identity that must hold did not. Never a user error.
class InvariantViolation : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

}  // namespace qsync

#endif
