// Copyright 2026 The measchain Authors
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


// Command dispatch: each command turns a RunConfig into a Report.

#ifndef MEASCHAIN_TOOLS_EXECUTE_H
#define MEASCHAIN_TOOLS_EXECUTE_H

#include "config.h"
#include "report.h"

namespace measchain::app {

std::string version_string();

Report run_chain(const RunConfig &cfg);
Report run_discriminate(const RunConfig &cfg);
Report run_overlap(const RunConfig &cfg);
Report run_born(const RunConfig &cfg);
Report run_decohere(const RunConfig &cfg);

/// Dispatches on cfg.command; `all` concatenates the five commands in order.
Report execute(const RunConfig &cfg);

}  // namespace measchain::app

#endif
