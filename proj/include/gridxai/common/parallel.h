// Copyright 2026 The gridxai Authors.
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

#ifndef GRIDXAI_COMMON_PARALLEL_H_
#define GRIDXAI_COMMON_PARALLEL_H_

namespace gridxai {

// Selects between the OpenMP kernel and the serial reference kernel. Both
// produce bit-identical results; the serial path exists for testing and
// benchmarking.
enum class Execution { kSerial, kParallel };

inline bool IsParallel(Execution e) { return e == Execution::kParallel; }

}  // namespace gridxai

#endif  // GRIDXAI_COMMON_PARALLEL_H_
