// Copyright 2026 The ggstate Authors
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

// Everything except ggs/io.hpp, which additionally needs nlohmann/json.

#include "ggs/core.hpp"
#include "ggs/hadamard.hpp"
#include "ggs/graph.hpp"
#include "ggs/state.hpp"
#include "ggs/tensornet.hpp"
#include "ggs/entangle.hpp"
#include "ggs/symmetry.hpp"
#include "ggs/codes.hpp"
