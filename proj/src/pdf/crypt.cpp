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

#include "pdftables/pdf/crypt.hpp"

#include <openssl/evp.h>

#include <array>
#include <memory>

#include "pdftables/error.hpp"

namespace pdftables::pdf {

namespace {

constexpr unsigned char kPadding[32] = {
    0x28, 0xBF, 0x4E, 0x5E, 0x4E, 0x75, 0x8A, 0x41, 0x64, 0x00, 0x4E, 0x56, 0xFF, 0xFA, 0x01, 0x08,
    0x2E, 0x2E, 0x00, 0xB6, 0xD0, 0x68, 0x3E, 0x80, 0x2F, 0x0C, 0xA9, 0xFE, 0x64, 0x53, 0x69, 0x7A};

std::string padded_password(std::string_view pw) {
  std::string out(pw.substr(0, 32));
  out.append(reinterpret_cast<const char*>(kPadding), 32 - out.size());
  return out;
}

std::string digest(const EVP_MD* md, std::string_view data) {
  unsigned char buf[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), buf, &len, md, nullptr) != 1) {
    throw Error("digest failed");
  }
  return std::string(reinterpret_cast<char*>(buf), len);
}

using CipherCtx = std::unique_ptr<EVP_CIPHER_CTX, decltype(&EVP_CIPHER_CTX_free)>;

std::string evp_crypt(const EVP_CIPHER* cipher, std::string_view key, std::string_view iv,
                      std::string_view data, bool encrypt, bool padding) {
  CipherCtx ctx(EVP_CIPHER_CTX_new(), &EVP_CIPHER_CTX_free);
  if (!ctx ||
      EVP_CipherInit_ex(ctx.get(), cipher, nullptr,
                        reinterpret_cast<const unsigned char*>(key.data()),
                        iv.empty() ? nullptr : reinterpret_cast<const unsigned char*>(iv.data()),
                        encrypt ? 1 : 0) != 1) {
    throw Error("cipher init failed");
  }
  EVP_CIPHER_CTX_set_padding(ctx.get(), padding ? 1 : 0);
  std::string out(data.size() + 32, '\0');
  int n1 = 0, n2 = 0;
  auto* o = reinterpret_cast<unsigned char*>(out.data());
  if (EVP_CipherUpdate(ctx.get(), o, &n1, reinterpret_cast<const unsigned char*>(data.data()),
                       static_cast<int>(data.size())) != 1) {
    return {};
  }
  if (EVP_CipherFinal_ex(ctx.get(), o + n1, &n2) != 1) {
    // Bad padding: keep what decrypted cleanly rather than dropping the object.
    n2 = 0;
  }
  out.resize(static_cast<std::size_t>(n1 + n2));
  return out;
}

const EVP_CIPHER* aes_for_key(std::size_t key_len) {
  return key_len == 32 ? EVP_aes_256_cbc() : EVP_aes_128_cbc();
}

std::string le_bytes(std::uint32_t v, int n) {
  std::string out;
  for (int i = 0; i < n; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
  return out;
}

// Revision 6 password hash.
std::string hash_2b(std::string_view password, std::string_view salt, std::string_view udata,
                    int revision) {
  std::string k = digest(EVP_sha256(), std::string(password) + std::string(salt) + std::string(udata));
  if (revision < 6) return k;
  for (int round = 0;; ++round) {
    std::string k1;
    std::string unit = std::string(password) + k + std::string(udata);
    k1.reserve(unit.size() * 64);
    for (int r = 0; r < 64; ++r) k1 += unit;
    std::string e = evp_crypt(EVP_aes_128_cbc(), std::string_view(k).substr(0, 16),
                              std::string_view(k).substr(16, 16), k1, true, false);
    int mod = 0;
    for (int i = 0; i < 16; ++i) mod += static_cast<unsigned char>(e[i]);
    mod %= 3;
    k = digest(mod == 0 ? EVP_sha256() : mod == 1 ? EVP_sha384() : EVP_sha512(), e);
    if (round >= 63 && static_cast<unsigned char>(e.back()) <= round + 1 - 32) break;
  }
  return k.substr(0, 32);
}

StandardSecurity::Cipher cipher_from_name(const Dict& encrypt, const Object& name) {
  if (!name.is_name() || name.as_name() == "Identity") return StandardSecurity::Cipher::kIdentity;
  const Object& cf = dict_get(encrypt, "CF");
  const Object& entry = cf.get(name.as_name());
  const Object& cfm = entry.get("CFM");
  if (cfm.is_name("AESV2")) return StandardSecurity::Cipher::kAes128;
  if (cfm.is_name("AESV3")) return StandardSecurity::Cipher::kAes256;
  if (cfm.is_name("None")) return StandardSecurity::Cipher::kIdentity;
  return StandardSecurity::Cipher::kRc4;
}

std::string compute_rc4_key(std::string_view password, const std::string& owner,
                            std::int32_t permissions, std::string_view first_id, int revision,
                            std::size_t key_len, bool encrypt_metadata) {
  std::string input = padded_password(password) + owner.substr(0, 32) +
                      le_bytes(static_cast<std::uint32_t>(permissions), 4) + std::string(first_id);
  if (revision >= 4 && !encrypt_metadata) input += std::string(4, '\xff');
  std::string h = md5(input);
  if (revision >= 3) {
    for (int i = 0; i < 50; ++i) h = md5(h.substr(0, key_len));
  }
  return h.substr(0, key_len);
}

std::string compute_user_entry(std::string_view key, std::string_view first_id, int revision) {
  if (revision == 2) {
    return rc4(key, std::string_view(reinterpret_cast<const char*>(kPadding), 32));
  }
  std::string h = md5(std::string(reinterpret_cast<const char*>(kPadding), 32) + std::string(first_id));
  std::string x = rc4(key, h);
  for (int i = 1; i <= 19; ++i) {
    std::string k(key);
    for (char& c : k) c = static_cast<char>(c ^ i);
    x = rc4(k, x);
  }
  return x + std::string(16, '\0');
}

std::string owner_rc4_key(std::string_view owner_password, int revision, std::size_t key_len) {
  std::string h = md5(padded_password(owner_password));
  if (revision >= 3) {
    for (int i = 0; i < 50; ++i) h = md5(h);
  }
  return h.substr(0, key_len);
}

}  // namespace

std::string rc4(std::string_view key, std::string_view data) {
  std::array<unsigned char, 256> s{};
  for (int i = 0; i < 256; ++i) s[i] = static_cast<unsigned char>(i);
  if (key.empty()) return std::string(data);
  unsigned j = 0;
  for (int i = 0; i < 256; ++i) {
    j = (j + s[i] + static_cast<unsigned char>(key[i % key.size()])) & 0xff;
    std::swap(s[i], s[j]);
  }
  std::string out(data);
  unsigned i = 0;
  j = 0;
  for (char& c : out) {
    i = (i + 1) & 0xff;
    j = (j + s[i]) & 0xff;
    std::swap(s[i], s[j]);
    c = static_cast<char>(c ^ s[(s[i] + s[j]) & 0xff]);
  }
  return out;
}

std::string md5(std::string_view data) { return digest(EVP_md5(), data); }

std::string aes_cbc_decrypt(std::string_view key, std::string_view iv_and_data) {
  if (iv_and_data.size() < 16) return {};
  return evp_crypt(aes_for_key(key.size()), key, iv_and_data.substr(0, 16), iv_and_data.substr(16),
                   false, true);
}

std::string aes_cbc_encrypt(std::string_view key, std::string_view iv, std::string_view data) {
  return std::string(iv) + evp_crypt(aes_for_key(key.size()), key, iv, data, true, true);
}

std::optional<StandardSecurity> StandardSecurity::open(const Dict& encrypt,
                                                       std::string_view first_id,
                                                       std::string_view password) {
  const Object& filter = dict_get(encrypt, "Filter");
  if (!filter.is_name("Standard")) {
    throw ParseError("unsupported security handler");
  }
  auto int_of = [&](std::string_view key, std::int64_t fallback) {
    const Object& o = dict_get(encrypt, key);
    return o.is_number() ? o.as_int() : fallback;
  };
  int v = static_cast<int>(int_of("V", 0));
  int revision = static_cast<int>(int_of("R", 2));
  auto perms = static_cast<std::int32_t>(static_cast<std::uint32_t>(int_of("P", -1)));
  const Object& o_obj = dict_get(encrypt, "O");
  const Object& u_obj = dict_get(encrypt, "U");
  if (!o_obj.is_string() || !u_obj.is_string()) throw ParseError("malformed /Encrypt dictionary");
  const std::string& owner = o_obj.as_string();
  const std::string& user = u_obj.as_string();

  StandardSecurity sec;
  const Object& em = dict_get(encrypt, "EncryptMetadata");
  sec.encrypt_metadata_ = !em.is_bool() || em.as_bool();

  if (v >= 4) {
    sec.stream_cipher_ = cipher_from_name(encrypt, dict_get(encrypt, "StmF"));
    sec.string_cipher_ = cipher_from_name(encrypt, dict_get(encrypt, "StrF"));
  }

  if (revision >= 5) {
    if (owner.size() < 48 || user.size() < 48) throw ParseError("malformed /Encrypt dictionary");
    std::string pw(password.substr(0, 127));
    const Object& oe = dict_get(encrypt, "OE");
    const Object& ue = dict_get(encrypt, "UE");
    std::string_view udata(user.data(), 48);
    if (hash_2b(pw, owner.substr(32, 8), udata, revision) == owner.substr(0, 32) && oe.is_string()) {
      std::string k = hash_2b(pw, owner.substr(40, 8), udata, revision);
      sec.key_ = evp_crypt(EVP_aes_256_cbc(), k, std::string(16, '\0'), oe.as_string(), false, false);
    } else if (hash_2b(pw, user.substr(32, 8), "", revision) == user.substr(0, 32) && ue.is_string()) {
      std::string k = hash_2b(pw, user.substr(40, 8), "", revision);
      sec.key_ = evp_crypt(EVP_aes_256_cbc(), k, std::string(16, '\0'), ue.as_string(), false, false);
    } else {
      return std::nullopt;
    }
    return sec;
  }

  std::size_t key_len = 5;
  if (revision >= 3) key_len = static_cast<std::size_t>(int_of("Length", 40) / 8);
  if (key_len < 5 || key_len > 16) key_len = 16;

  auto try_user = [&](std::string_view pw) -> std::optional<std::string> {
    std::string key = compute_rc4_key(pw, owner, perms, first_id, revision, key_len,
                                      sec.encrypt_metadata_);
    std::string expect = compute_user_entry(key, first_id, revision);
    std::size_t n = revision == 2 ? 32 : 16;
    if (user.size() >= n && expect.compare(0, n, user, 0, n) == 0) return key;
    return std::nullopt;
  };

  if (auto key = try_user(password)) {
    sec.key_ = *key;
    return sec;
  }
  // Owner password: recover the user password from /O and retry.
  std::string okey = owner_rc4_key(password, revision, revision == 2 ? 5 : key_len);
  std::string recovered = owner.substr(0, 32);
  if (revision == 2) {
    recovered = rc4(okey, recovered);
  } else {
    for (int i = 19; i >= 0; --i) {
      std::string k = okey;
      for (char& c : k) c = static_cast<char>(c ^ i);
      recovered = rc4(k, recovered);
    }
  }
  if (auto key = try_user(recovered)) {
    sec.key_ = *key;
    return sec;
  }
  return std::nullopt;
}

std::string StandardSecurity::crypt(Ref ref, std::string_view data, Cipher cipher) const {
  switch (cipher) {
    case Cipher::kIdentity:
      return std::string(data);
    case Cipher::kAes256:
      return aes_cbc_decrypt(key_, data);
    case Cipher::kRc4:
    case Cipher::kAes128: {
      std::string input = key_ + le_bytes(static_cast<std::uint32_t>(ref.num), 3) +
                          le_bytes(static_cast<std::uint32_t>(ref.gen), 2);
      if (cipher == Cipher::kAes128) input += "sAlT";
      std::string k = md5(input).substr(0, std::min<std::size_t>(key_.size() + 5, 16));
      return cipher == Cipher::kRc4 ? rc4(k, data) : aes_cbc_decrypt(k, data);
    }
  }
  return std::string(data);
}

std::string StandardSecurity::decrypt_string(Ref ref, std::string_view data) const {
  return crypt(ref, data, string_cipher_);
}

std::string StandardSecurity::decrypt_stream(Ref ref, std::string_view data,
                                             const Dict& stream_dict) const {
  const Object& type = dict_get(stream_dict, "Type");
  if (type.is_name("XRef")) return std::string(data);
  if (type.is_name("Metadata") && !encrypt_metadata_) return std::string(data);
  const Object& filter = dict_get(stream_dict, "Filter");
  bool identity_crypt = filter.is_name("Crypt") ||
                        (filter.is_array() && !filter.as_array().empty() &&
                         filter.as_array().front().is_name("Crypt"));
  if (identity_crypt) return std::string(data);
  return crypt(ref, data, stream_cipher_);
}

StandardSecurity::Rc4Entries StandardSecurity::build_rc4(std::string_view user_password,
                                                         std::string_view owner_password,
                                                         std::int32_t permissions,
                                                         std::string_view first_id,
                                                         int key_bytes) {
  const int revision = 3;
  auto key_len = static_cast<std::size_t>(key_bytes);
  std::string okey = owner_rc4_key(owner_password.empty() ? user_password : owner_password,
                                   revision, key_len);
  std::string o = rc4(okey, padded_password(user_password));
  for (int i = 1; i <= 19; ++i) {
    std::string k = okey;
    for (char& c : k) c = static_cast<char>(c ^ i);
    o = rc4(k, o);
  }
  Rc4Entries out;
  out.owner = o;
  out.key = compute_rc4_key(user_password, o, permissions, first_id, revision, key_len, true);
  out.user = compute_user_entry(out.key, first_id, revision);
  return out;
}

std::string StandardSecurity::rc4_object(std::string_view file_key, Ref ref,
                                         std::string_view data) {
  std::string input = std::string(file_key) + le_bytes(static_cast<std::uint32_t>(ref.num), 3) +
                      le_bytes(static_cast<std::uint32_t>(ref.gen), 2);
  std::string k = md5(input).substr(0, std::min<std::size_t>(file_key.size() + 5, 16));
  return rc4(k, data);
}

}  // namespace pdftables::pdf
