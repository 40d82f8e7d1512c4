// Copyright 2026 The lrqaoa Authors
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

namespace lrqaoa {

/// Worker-thread cap shared by all parallel loops. Defaults to the
/// LRQAOA_THREADS environment variable, else the OpenMP default.
int max_threads() noexcept;
void set_max_threads(int threads) noexcept;

}  // namespace lrqaoa
