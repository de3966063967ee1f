// Copyright 2026 The rspm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RSPM_HARNESS_HPP
#define RSPM_HARNESS_HPP

#include "rspm/harness/compare.hpp"
#include "rspm/harness/experiment.hpp"
#include "rspm/harness/kernels.hpp"
#include "rspm/harness/report.hpp"
#include "rspm/harness/summary.hpp"

#endif  // RSPM_HARNESS_HPP
