// Copyright 2026 The pdftables Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <filesystem>
#include <string>
#include <string_view>

namespace pdftables {

// True for http:// and https:// sources (scheme compared case-insensitively).
bool is_url(std::string_view source);

// Directory that holds downloaded sources for this process. Taken from
// PDFTABLES_TMPDIR when set, otherwise a fresh directory under the system
// temp dir. Created on first use and removed at process exit.
std::filesystem::path download_dir();

// Downloads `url` into download_dir() and returns the local path. Repeated
// calls with the same URL reuse the first download. Throws
// UnreachableError on network failure or a non-2xx response.
std::filesystem::path fetch_url(const std::string& url);

}  // namespace pdftables
