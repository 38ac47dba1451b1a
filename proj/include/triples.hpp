// Copyright 2026 The triples Authors
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

#include "triples/bigint.hpp"
#include "triples/bound_report.hpp"
#include "triples/bounds.hpp"
#include "triples/brute_fourier.hpp"
#include "triples/cache.hpp"
#include "triples/cyclotomic.hpp"
#include "triples/enumeration.hpp"
#include "triples/errors.hpp"
#include "triples/fourier.hpp"
#include "triples/fourier_value.hpp"
#include "triples/group.hpp"
#include "triples/log_magnitude.hpp"
#include "triples/major_arcs.hpp"
#include "triples/orbits.hpp"
#include "triples/parallel.hpp"
#include "triples/partitions.hpp"
#include "triples/pinned.hpp"
#include "triples/real.hpp"
#include "triples/sparseval.hpp"
#include "triples/structured.hpp"
#include "triples/tracked_complex.hpp"
#include "triples/verify.hpp"
