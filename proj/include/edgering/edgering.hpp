// Copyright 2026 The edgering Authors.
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

#include "edgering/commands.hpp"
#include "edgering/cycles.hpp"
#include "edgering/error.hpp"
#include "edgering/exact_linear_algebra.hpp"
#include "edgering/facets.hpp"
#include "edgering/families.hpp"
#include "edgering/graph.hpp"
#include "edgering/graph_io.hpp"
#include "edgering/jobs.hpp"
#include "edgering/report.hpp"
#include "edgering/s2.hpp"
#include "edgering/semigroup.hpp"
