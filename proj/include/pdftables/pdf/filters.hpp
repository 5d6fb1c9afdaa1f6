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

#include <string>
#include <string_view>

#include "pdftables/pdf/object.hpp"

namespace pdftables::pdf {

// Inflates zlib (or, failing that, raw deflate) data. Truncated input yields
// whatever was recovered before the damage.
std::string flate_decode(std::string_view in);
std::string flate_encode(std::string_view in);

std::string ascii_hex_decode(std::string_view in);
std::string ascii85_decode(std::string_view in);
std::string lzw_decode(std::string_view in, bool early_change = true);
std::string run_length_decode(std::string_view in);

// Undoes a TIFF (2) or PNG (>= 10) predictor described by DecodeParms.
std::string apply_predictor(std::string data, const Dict& parms);

// Applies every filter in the stream dictionary in order. Image codecs
// (DCT, JPX, CCITT, JBIG2) are not decoded: the call throws ParseError.
// Object lookup for indirect /Filter or /DecodeParms is the caller's job,
// so `dict` must already be resolved.
std::string decode_stream_data(const Dict& dict, std::string_view raw);

}  // namespace pdftables::pdf
