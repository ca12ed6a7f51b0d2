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

#include <treehardy/algebra.hpp>
#include <treehardy/error.hpp>
#include <treehardy/exponent.hpp>
#include <treehardy/function.hpp>
#include <treehardy/hardy.hpp>
#include <treehardy/multiplication.hpp>
#include <treehardy/numeric.hpp>
#include <treehardy/oracle.hpp>
#include <treehardy/scenarios.hpp>
#include <treehardy/serialize.hpp>
#include <treehardy/tail.hpp>
#include <treehardy/tree.hpp>
