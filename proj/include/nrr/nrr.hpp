// Copyright 2026 The nrr Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "nrr/errors.hpp"
#include "nrr/graphs.hpp"
#include "nrr/hilbert.hpp"
#include "nrr/limits.hpp"
#include "nrr/partitions.hpp"
#include "nrr/qseries.hpp"
#include "nrr/signature.hpp"
#include "nrr/verify.hpp"
