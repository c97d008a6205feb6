// Copyright 2026 The Parafact Authors.
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

#ifndef PARAFACT_TEXT_H_
#define PARAFACT_TEXT_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace parafact {

// Lowercases ASCII and the Latin-1 supplement / Latin Extended-A capitals
// used by French (À..Þ, Œ). Other bytes pass through untouched.
std::string ToLower(std::string_view text);

std::string_view Trim(std::string_view text);

// Splits on runs of ASCII whitespace; no empty fields.
std::vector<std::string_view> SplitWhitespace(std::string_view text);

// Splits on a single separator; keeps empty fields.
std::vector<std::string_view> Split(std::string_view text, char sep);

// 64-bit FNV-1a.
uint64_t Fingerprint(std::string_view data);

// Fixed-width lowercase hex.
std::string Hex64(uint64_t value);

// printf-style "%.6f".
std::string FormatFixed(double value, int decimals);

}  // namespace parafact

#endif  // PARAFACT_TEXT_H_
