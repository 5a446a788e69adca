// Copyright 2026 The convexp Authors
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

#ifndef CONVEXP_CONVEXP_HPP_
#define CONVEXP_CONVEXP_HPP_

#include "convexp/convexity.hpp"
#include "convexp/enumerate.hpp"
#include "convexp/errors.hpp"
#include "convexp/format.hpp"
#include "convexp/generators.hpp"
#include "convexp/graph.hpp"
#include "convexp/oracle.hpp"
#include "convexp/partition.hpp"
#include "convexp/skeleton.hpp"
#include "convexp/vertex_set.hpp"

#endif  // CONVEXP_CONVEXP_HPP_
