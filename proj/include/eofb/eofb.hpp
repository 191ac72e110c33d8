// Copyright 2026 The eofb authors
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

#include "eofb/benchmarks.hpp"
#include "eofb/bounds.hpp"
#include "eofb/covariance.hpp"
#include "eofb/ensemble.hpp"
#include "eofb/error.hpp"
#include "eofb/standard_form.hpp"
#include "eofb/symmetrization.hpp"
