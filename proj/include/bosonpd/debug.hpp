/*
 * Copyright 2026 The bosonpd developers
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
 */

#ifndef BOSONPD_DEBUG_HPP
#define BOSONPD_DEBUG_HPP

#include <string>

namespace bosonpd {

/// Process-wide debug verbosity. When enabled, numerical diagnostics that
/// are normally silent (imaginary residues above the asserted tolerance but
/// below the hard error level) are written to stderr before truncation.
void set_debug_logging(bool enabled);
bool debug_logging_enabled();

/// Writes one line to stderr when debug logging is on.
void debug_log(const std::string& message);

} // namespace bosonpd

#endif
