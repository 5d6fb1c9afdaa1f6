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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "pdftables/pdf/object.hpp"

namespace pdftables::pdf {

std::string rc4(std::string_view key, std::string_view data);
std::string md5(std::string_view data);
std::string aes_cbc_decrypt(std::string_view key, std::string_view iv_and_data);
// PKCS#5-padded AES-CBC; the IV is prepended to the result.
std::string aes_cbc_encrypt(std::string_view key, std::string_view iv, std::string_view data);

// Standard security handler (revisions 2 through 6). Objects are decrypted as
// they are loaded; nothing downstream sees ciphertext.
class StandardSecurity {
 public:
  enum class Cipher { kIdentity, kRc4, kAes128, kAes256 };

  // Returns nullopt when `password` opens neither the user nor the owner
  // entry. Throws ParseError for handlers other than /Standard.
  static std::optional<StandardSecurity> open(const Dict& encrypt, std::string_view first_id,
                                              std::string_view password);

  std::string decrypt_string(Ref ref, std::string_view data) const;
  std::string decrypt_stream(Ref ref, std::string_view data, const Dict& stream_dict) const;

  std::string_view file_key() const { return key_; }
  bool encrypts_metadata() const { return encrypt_metadata_; }

  // Produces the /O and /U entries for an RC4 revision-3 handler, plus the
  // file key. Used to synthesise encrypted documents.
  struct Rc4Entries {
    std::string owner;
    std::string user;
    std::string key;
  };
  static Rc4Entries build_rc4(std::string_view user_password, std::string_view owner_password,
                              std::int32_t permissions, std::string_view first_id,
                              int key_bytes);
  // Encrypts with the per-object RC4 key derived from `file_key`.
  static std::string rc4_object(std::string_view file_key, Ref ref, std::string_view data);

 private:
  std::string crypt(Ref ref, std::string_view data, Cipher cipher) const;

  std::string key_;
  Cipher string_cipher_ = Cipher::kRc4;
  Cipher stream_cipher_ = Cipher::kRc4;
  bool encrypt_metadata_ = true;
};

}  // namespace pdftables::pdf
