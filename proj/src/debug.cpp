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

#include "bosonpd/debug.hpp"

#include <atomic>
#include <iostream>

namespace bosonpd {

namespace {
std::atomic<bool> g_debug{false};
}

void set_debug_logging(bool enabled) { g_debug.store(enabled, std::memory_order_relaxed); }

bool debug_logging_enabled() { return g_debug.load(std::memory_order_relaxed); }

void debug_log(const std::string& message) {
    if (debug_logging_enabled()) std::cerr << "debug: " << message << "\n";
}

} // namespace bosonpd
