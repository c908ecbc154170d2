// Copyright 2026 the tydic authors
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

#include "tydic/stdlib.hpp"

namespace tydic {

const char* stdlib_source() {
  return R"(// Built-in template library.
//
// duplicator: copies every packet to all outputs and acknowledges the input
// only when every output has accepted. voider: always-ready sink that
// discards packets. Both operate on the handshake layer for any stream type,
// so their bodies are generated by the backend rather than written here.

streamlet duplicator_s<T: type, count: int, dom: clockdomain> {
  input: T in @dom,
  output: T out [count] @dom,
}

external impl duplicator_i<T: type, count: int, dom: clockdomain>
    of duplicator_s<type T, count, dom> {
  assert(count >= 2),
}

streamlet voider_s<T: type, dom: clockdomain> {
  input: T in @dom,
}

external impl voider_i<T: type, dom: clockdomain> of voider_s<type T, dom> {
}
)";
}

}  // namespace tydic
