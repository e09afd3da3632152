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

#ifndef CMZV_CMZV_HPP
#define CMZV_CMZV_HPP

/// @file cmzv.hpp
/// Umbrella header for the whole library.

#include <cmzv/block_group.hpp>
#include <cmzv/carlitz.hpp>
#include <cmzv/error.hpp>
#include <cmzv/ffield.hpp>
#include <cmzv/index.hpp>
#include <cmzv/laurent.hpp>
#include <cmzv/matrix.hpp>
#include <cmzv/motive.hpp>
#include <cmzv/parallel.hpp>
#include <cmzv/polynomial.hpp>
#include <cmzv/ratfunc.hpp>
#include <cmzv/serialize.hpp>
#include <cmzv/special.hpp>
#include <cmzv/suite.hpp>
#include <cmzv/tate.hpp>

#endif
