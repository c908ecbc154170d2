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

#pragma once

namespace tydic {

/// Built-in template library source, implicitly in scope for every file.
/// Holds the handshake-level duplicator/voider templates the sugaring passes
/// instantiate; their hardware bodies come from the backend, not from the
/// language, so they are external and tagged intrinsic.
const char* stdlib_source();

/// File name the builtin library registers under.
inline const char* stdlib_file_name() { return "<builtin>"; }

}  // namespace tydic
