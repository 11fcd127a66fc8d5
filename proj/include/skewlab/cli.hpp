/**************************************************************************
 * Copyright 2026 The skewlab Authors
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
 **************************************************************************/

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace skewlab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitGuardExceeded = 2;

/// Runs one skewlab invocation. `args` excludes the program name.
/// Returns 0 on success, 1 on parse or domain errors, 2 when a search guard
/// is exceeded.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace skewlab::cli
