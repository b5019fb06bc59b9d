// Copyright 2026 The qperm Authors
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

#include <filesystem>
#include <string>
#include <string_view>

#include "qperm/matrix.hpp"

namespace qperm {

/// Parses {"n": int, "rows": [[[re, im], ...], ...]}. Entries may also be bare numbers
/// (real). Throws ParseError naming the offending row on malformed input.
SquareMatrix parse_matrix_json(std::string_view text);
SquareMatrix read_matrix_file(const std::filesystem::path& path);

/// Writes the same format. Real matrices are written with bare numbers; doubles are
/// printed with round-trip precision.
std::string format_matrix_json(const SquareMatrix& a);
void write_matrix_file(const std::filesystem::path& path, const SquareMatrix& a);

}  // namespace qperm
