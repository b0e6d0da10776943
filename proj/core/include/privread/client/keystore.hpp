// Copyright 2026 The privread Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PRIVREAD_CLIENT_KEYSTORE_HPP_
#define PRIVREAD_CLIENT_KEYSTORE_HPP_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>

#include "privread/bgv/scheme.hpp"
#include "privread/common/random.hpp"

namespace privread::client {

class KeystoreError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct KeyInfo {
  std::string fingerprint;
  std::filesystem::path pk_path;
  std::filesystem::path sk_path;
  std::size_t pk_bytes = 0;
  std::size_t sk_bytes = 0;
  // True when the secret key file grants no group or other permissions.
  bool sk_owner_only = false;
};

// Client-local key directory. Keys live under <root>/<params fingerprint>/ as
// pk.bin and sk.bin in the engine wire format, so channels with identical
// parameters share one key pair.
class Keystore {
 public:
  explicit Keystore(std::filesystem::path root);

  // explicit > $PIRCTL_KEYS > $HOME/.pirctl/keys > ./.pirctl/keys
  static std::filesystem::path ResolveRoot(const std::optional<std::filesystem::path>& explicit_root);

  const std::filesystem::path& root() const { return root_; }
  std::filesystem::path DirFor(const bgv::BgvParams& params) const;
  bool Has(const bgv::BgvParams& params) const;

  // Throws KeystoreError when keys exist and force is false.
  bgv::KeyPair Generate(const bgv::ContextPtr& context, RandomStream& rng, bool force);
  std::optional<bgv::KeyPair> Load(const bgv::ContextPtr& context) const;
  std::optional<KeyInfo> Info(const bgv::BgvParams& params) const;

 private:
  std::filesystem::path root_;
};

// Holds an exclusive advisory lock on the keystore root for its lifetime.
class KeystoreLock {
 public:
  explicit KeystoreLock(const std::filesystem::path& root);
  ~KeystoreLock();
  KeystoreLock(const KeystoreLock&) = delete;
  KeystoreLock& operator=(const KeystoreLock&) = delete;

 private:
  int fd_ = -1;
};

}  // namespace privread::client

#endif  // PRIVREAD_CLIENT_KEYSTORE_HPP_
