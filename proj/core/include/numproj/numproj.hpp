// Copyright 2026 The numproj Authors
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

#include "numproj/cliques.hpp"
#include "numproj/errors.hpp"
#include "numproj/exact.hpp"
#include "numproj/hamio.hpp"
#include "numproj/kravchuk.hpp"
#include "numproj/pauli.hpp"
#include "numproj/projector.hpp"
