// Copyright 2026 The gsp Authors.
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

#include "gsp/cg.hpp"
#include "gsp/completion.hpp"
#include "gsp/error.hpp"
#include "gsp/experiments.hpp"
#include "gsp/filtering.hpp"
#include "gsp/generators.hpp"
#include "gsp/graph.hpp"
#include "gsp/kernel.hpp"
#include "gsp/rank_one.hpp"
#include "gsp/recovery.hpp"
#include "gsp/sampling.hpp"
#include "gsp/selection.hpp"
#include "gsp/spectral.hpp"
#include "gsp/types.hpp"
