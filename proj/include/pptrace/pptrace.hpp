/*
 * Copyright 2026 The pptrace authors
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

#pragma once

#include "pptrace/asymptotics.hpp"
#include "pptrace/bernoulli.hpp"
#include "pptrace/bigint.hpp"
#include "pptrace/circle.hpp"
#include "pptrace/complex.hpp"
#include "pptrace/differences.hpp"
#include "pptrace/errors.hpp"
#include "pptrace/eval.hpp"
#include "pptrace/farey.hpp"
#include "pptrace/io.hpp"
#include "pptrace/phase.hpp"
#include "pptrace/plane_partition.hpp"
#include "pptrace/polylog.hpp"
#include "pptrace/real.hpp"
#include "pptrace/root_of_unity.hpp"
#include "pptrace/solvers.hpp"
#include "pptrace/trace_table.hpp"
