// Copyright 2026 The jp2c Authors
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

// Everything except the JSON/CLI layer, which needs the vendored headers.

#include "jp2c/error.hpp"
#include "jp2c/graphs.hpp"
#include "jp2c/hamilton.hpp"
#include "jp2c/oracle.hpp"
#include "jp2c/p2c_johnson.hpp"
#include "jp2c/p2c_qj.hpp"
#include "jp2c/subset.hpp"
#include "jp2c/sweep.hpp"
#include "jp2c/types.hpp"
#include "jp2c/verify.hpp"
