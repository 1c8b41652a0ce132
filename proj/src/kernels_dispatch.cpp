// Copyright 2026 The qres Authors
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

#include "qres/kernels.hpp"

#include <atomic>
#include <cstdlib>

namespace qres::kernels {

namespace {

const Ops* pick_auto() {
    if (const Ops* v = avx2_ops()) return v;
    return &scalar_ops();
}

const Ops* initial_selection() {
    if (const char* env = std::getenv("QRES_KERNELS")) {
        std::string_view want{env};
        if (want == "scalar") return &scalar_ops();
        if (want == "avx2") {
            if (const Ops* v = avx2_ops()) return v;
        }
        // unrecognized or unsupported value: fall through to auto
    }
    return pick_auto();
}

std::atomic<const Ops*>& slot() {
    static std::atomic<const Ops*> current{initial_selection()};
    return current;
}

}  // namespace

const Ops& active() { return *slot().load(std::memory_order_acquire); }

bool select_backend(std::string_view name) {
    const Ops* next = nullptr;
    if (name == "scalar") next = &scalar_ops();
    else if (name == "avx2") next = avx2_ops();
    else if (name == "auto") next = pick_auto();
    if (!next) return false;
    slot().store(next, std::memory_order_release);
    return true;
}

}  // namespace qres::kernels
