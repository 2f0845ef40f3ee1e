/*
 * Copyright 2026 The partialbet Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Umbrella header.

#pragma once

#include "partialbet/error.hpp"
#include "partialbet/values.hpp"
#include "partialbet/partial_set.hpp"
#include "partialbet/truth.hpp"
#include "partialbet/formula.hpp"
#include "partialbet/kleene.hpp"
#include "partialbet/probability.hpp"
#include "partialbet/betting.hpp"
#include "partialbet/synth.hpp"
#include "partialbet/random.hpp"
#include "partialbet/verify.hpp"
#include "partialbet/io.hpp"
