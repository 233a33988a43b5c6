// Copyright 2026 The qpc Authors
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

#pragma once

#include "qpc/controller.hpp"
#include "qpc/core.hpp"
#include "qpc/gates.hpp"
#include "qpc/linalg.hpp"
#include "qpc/program_bus.hpp"
#include "qpc/program_file.hpp"
#include "qpc/random.hpp"
#include "qpc/report.hpp"
#include "qpc/universality.hpp"
