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

#include "pdftables/pdf/filters.hpp"

#include <zlib.h>

#include <cstdint>
#include <cstdlib>
#include <vector>

#include "pdftables/error.hpp"

namespace pdftables::pdf {

namespace {

bool inflate_with(std::string_view in, int window_bits, std::string& out) {
  z_stream zs{};
  if (inflateInit2(&zs, window_bits) != Z_OK) return false;
  zs.next_in = reinterpret_cast<Bytef*>(const_cast<char*>(in.data()));
  zs.avail_in = static_cast<uInt>(in.size());
  char buf[16384];
  int ret = Z_OK;
  do {
    zs.next_out = reinterpret_cast<Bytef*>(buf);
    zs.avail_out = sizeof(buf);
    ret = inflate(&zs, Z_NO_FLUSH);
    out.append(buf, sizeof(buf) - zs.avail_out);
  } while (ret == Z_OK);
  inflateEnd(&zs);
  return ret == Z_STREAM_END || !out.empty();
}

}  // namespace

std::string flate_decode(std::string_view in) {
  std::string out;
  if (inflate_with(in, 15, out)) return out;
  out.clear();
  inflate_with(in, -15, out);
  return out;
}

std::string flate_encode(std::string_view in) {
  uLongf bound = compressBound(static_cast<uLong>(in.size()));
  std::string out(bound, '\0');
  if (compress2(reinterpret_cast<Bytef*>(out.data()), &bound,
                reinterpret_cast<const Bytef*>(in.data()), static_cast<uLong>(in.size()),
                Z_BEST_COMPRESSION) != Z_OK) {
    throw Error("deflate failed");
  }
  out.resize(bound);
  return out;
}

std::string ascii_hex_decode(std::string_view in) {
  std::string out;
  int hi = -1;
  for (char c : in) {
    if (c == '>') break;
    int v = -1;
    if (c >= '0' && c <= '9') v = c - '0';
    else if (c >= 'a' && c <= 'f') v = c - 'a' + 10;
    else if (c >= 'A' && c <= 'F') v = c - 'A' + 10;
    if (v < 0) continue;
    if (hi < 0) {
      hi = v;
    } else {
      out.push_back(static_cast<char>(hi * 16 + v));
      hi = -1;
    }
  }
  if (hi >= 0) out.push_back(static_cast<char>(hi * 16));
  return out;
}

std::string ascii85_decode(std::string_view in) {
  std::string out;
  std::uint32_t tuple = 0;
  int count = 0;
  std::size_t i = 0;
  if (in.substr(0, 2) == "<~") i = 2;
  for (; i < in.size(); ++i) {
    char c = in[i];
    if (c == '~') break;
    if (c == 'z' && count == 0) {
      out.append(4, '\0');
      continue;
    }
    if (c < '!' || c > 'u') continue;
    tuple = tuple * 85 + static_cast<std::uint32_t>(c - '!');
    if (++count == 5) {
      for (int k = 3; k >= 0; --k) out.push_back(static_cast<char>((tuple >> (8 * k)) & 0xff));
      tuple = 0;
      count = 0;
    }
  }
  if (count > 1) {
    for (int k = count; k < 5; ++k) tuple = tuple * 85 + 84;
    for (int k = 0; k < count - 1; ++k) out.push_back(static_cast<char>((tuple >> (24 - 8 * k)) & 0xff));
  }
  return out;
}

std::string lzw_decode(std::string_view in, bool early_change) {
  std::string out;
  std::vector<std::string> table;
  auto reset = [&] {
    table.clear();
    for (int k = 0; k < 256; ++k) table.emplace_back(1, static_cast<char>(k));
    table.emplace_back();  // 256 clear
    table.emplace_back();  // 257 EOD
  };
  reset();
  int code_len = 9;
  std::uint32_t bitbuf = 0;
  int bits = 0;
  std::size_t pos = 0;
  int prev = -1;
  while (true) {
    while (bits < code_len && pos < in.size()) {
      bitbuf = (bitbuf << 8) | static_cast<unsigned char>(in[pos++]);
      bits += 8;
    }
    if (bits < code_len) break;
    int code = static_cast<int>((bitbuf >> (bits - code_len)) & ((1u << code_len) - 1));
    bits -= code_len;
    if (code == 256) {
      reset();
      code_len = 9;
      prev = -1;
      continue;
    }
    if (code == 257) break;
    std::string entry;
    if (code < static_cast<int>(table.size())) {
      entry = table[code];
      if (prev >= 0) table.push_back(table[prev] + entry[0]);
    } else if (prev >= 0) {
      entry = table[prev] + table[prev][0];
      table.push_back(entry);
    } else {
      break;
    }
    out += entry;
    prev = code;
    int next = static_cast<int>(table.size()) + (early_change ? 1 : 0);
    if (next >= 4096) {
      code_len = 12;
    } else if (next >= 2048) {
      code_len = 12;
    } else if (next >= 1024) {
      code_len = 11;
    } else if (next >= 512) {
      code_len = 10;
    }
  }
  return out;
}

std::string run_length_decode(std::string_view in) {
  std::string out;
  std::size_t i = 0;
  while (i < in.size()) {
    int len = static_cast<unsigned char>(in[i++]);
    if (len == 128) break;
    if (len < 128) {
      std::size_t n = static_cast<std::size_t>(len) + 1;
      out.append(in.substr(i, n));
      i += n;
    } else if (i < in.size()) {
      out.append(static_cast<std::size_t>(257 - len), in[i++]);
    }
  }
  return out;
}

std::string apply_predictor(std::string data, const Dict& parms) {
  const Object& pred = dict_get(parms, "Predictor");
  int predictor = pred.is_number() ? static_cast<int>(pred.as_int()) : 1;
  if (predictor <= 1) return data;
  auto param = [&](std::string_view key, int fallback) {
    const Object& o = dict_get(parms, key);
    return o.is_number() ? static_cast<int>(o.as_int()) : fallback;
  };
  int colors = param("Colors", 1);
  int bpc = param("BitsPerComponent", 8);
  int columns = param("Columns", 1);
  std::size_t bpp = static_cast<std::size_t>(std::max(1, (colors * bpc + 7) / 8));
  std::size_t row_len = static_cast<std::size_t>((colors * bpc * columns + 7) / 8);
  if (row_len == 0) return data;

  if (predictor == 2) {
    if (bpc != 8) return data;
    for (std::size_t r = 0; r + row_len <= data.size(); r += row_len) {
      for (std::size_t i = bpp; i < row_len; ++i) {
        data[r + i] = static_cast<char>(data[r + i] + data[r + i - bpp]);
      }
    }
    return data;
  }

  std::string out;
  std::vector<unsigned char> prev(row_len, 0), cur(row_len);
  std::size_t pos = 0;
  while (pos < data.size()) {
    int type = static_cast<unsigned char>(data[pos++]);
    std::size_t n = std::min(row_len, data.size() - pos);
    std::fill(cur.begin(), cur.end(), 0);
    for (std::size_t i = 0; i < n; ++i) cur[i] = static_cast<unsigned char>(data[pos + i]);
    pos += n;
    for (std::size_t i = 0; i < row_len; ++i) {
      unsigned a = i >= bpp ? cur[i - bpp] : 0;
      unsigned b = prev[i];
      unsigned c = i >= bpp ? prev[i - bpp] : 0;
      switch (type) {
        case 1: cur[i] = static_cast<unsigned char>(cur[i] + a); break;
        case 2: cur[i] = static_cast<unsigned char>(cur[i] + b); break;
        case 3: cur[i] = static_cast<unsigned char>(cur[i] + (a + b) / 2); break;
        case 4: {
          int p = static_cast<int>(a + b) - static_cast<int>(c);
          int pa = std::abs(p - static_cast<int>(a));
          int pb = std::abs(p - static_cast<int>(b));
          int pc = std::abs(p - static_cast<int>(c));
          unsigned pr = (pa <= pb && pa <= pc) ? a : (pb <= pc ? b : c);
          cur[i] = static_cast<unsigned char>(cur[i] + pr);
          break;
        }
        default: break;
      }
    }
    out.append(reinterpret_cast<const char*>(cur.data()), n);
    prev = cur;
  }
  return out;
}

std::string decode_stream_data(const Dict& dict, std::string_view raw) {
  const Object& filter = dict_get(dict, "Filter");
  const Object& parms_obj = dict_get(dict, "DecodeParms");
  std::vector<std::string> filters;
  std::vector<const Object*> parms;
  if (filter.is_name()) {
    filters.push_back(filter.as_name());
    parms.push_back(&parms_obj);
  } else if (filter.is_array()) {
    for (std::size_t i = 0; i < filter.as_array().size(); ++i) {
      const Object& f = filter.as_array()[i];
      if (!f.is_name()) continue;
      filters.push_back(f.as_name());
      if (parms_obj.is_array() && i < parms_obj.as_array().size()) {
        parms.push_back(&parms_obj.as_array()[i]);
      } else {
        parms.push_back(&null_object());
      }
    }
  }

  std::string data(raw);
  static const Dict kEmpty;
  for (std::size_t i = 0; i < filters.size(); ++i) {
    const std::string& f = filters[i];
    const Dict& p = parms[i]->is_dict() ? parms[i]->as_dict() : kEmpty;
    if (f == "FlateDecode" || f == "Fl") {
      data = apply_predictor(flate_decode(data), p);
    } else if (f == "LZWDecode" || f == "LZW") {
      const Object& ec = dict_get(p, "EarlyChange");
      data = apply_predictor(lzw_decode(data, !ec.is_number() || ec.as_int() != 0), p);
    } else if (f == "ASCIIHexDecode" || f == "AHx") {
      data = ascii_hex_decode(data);
    } else if (f == "ASCII85Decode" || f == "A85") {
      data = ascii85_decode(data);
    } else if (f == "RunLengthDecode" || f == "RL") {
      data = run_length_decode(data);
    } else if (f == "Crypt") {
      continue;  // identity crypt filter; decryption happens at load time
    } else {
      throw ParseError("unsupported stream filter " + f);
    }
  }
  return data;
}

}  // namespace pdftables::pdf
