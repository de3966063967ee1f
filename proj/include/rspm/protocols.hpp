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

#ifndef RSPM_PROTOCOLS_HPP
#define RSPM_PROTOCOLS_HPP

#include "rspm/protocols/joint.hpp"
#include "rspm/protocols/rsm.hpp"
#include "rspm/protocols/rsp.hpp"
#include "rspm/protocols/singlet.hpp"
#include "rspm/protocols/teleport.hpp"
#include "rspm/protocols/universal_not.hpp"

#endif  // RSPM_PROTOCOLS_HPP
