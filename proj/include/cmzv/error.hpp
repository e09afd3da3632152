// Copyright 2026 The cmzv Authors
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

#ifndef CMZV_ERROR_HPP
#define CMZV_ERROR_HPP

#include <stdexcept>
#include <string>

namespace cmzv
{

/// Operands live in different coefficient fields or rings.
class mismatch_error : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

/// A series is zero to its known precision where a unit was required.
/// Distinct from division by an exact zero, which raises std::domain_error.
class precision_error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// An enumeration would exceed the configured work budget.
class budget_error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// A convergence condition or certificate required by an operation fails.
class convergence_error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

} // namespace cmzv

#endif
