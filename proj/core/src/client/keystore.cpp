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

#include "privread/client/keystore.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <iterator>

#include "privread/bgv/serialization.hpp"

namespace privread::client {
namespace fs = std::filesystem;

namespace {

constexpr char kPublicKeyFile[] = "pk.bin";
constexpr char kSecretKeyFile[] = "sk.bin";

Bytes ReadFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw KeystoreError("cannot read " + path.string());
  return Bytes(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void WriteFile(const fs::path& path, const Bytes& data, fs::perms perms) {
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw KeystoreError("cannot write " + tmp.string());
    fs::permissions(tmp, perms, fs::perm_options::replace);
    out.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
    if (!out) throw KeystoreError("short write to " + tmp.string());
  }
  fs::rename(tmp, path);
}

}  // namespace

Keystore::Keystore(fs::path root) : root_(std::move(root)) {}

fs::path Keystore::ResolveRoot(const std::optional<fs::path>& explicit_root) {
  if (explicit_root) return *explicit_root;
  if (const char* env = std::getenv("PIRCTL_KEYS"); env != nullptr && *env != '\0') return env;
  if (const char* home = std::getenv("HOME"); home != nullptr && *home != '\0') {
    return fs::path(home) / ".pirctl" / "keys";
  }
  return fs::path(".pirctl") / "keys";
}

fs::path Keystore::DirFor(const bgv::BgvParams& params) const {
  return root_ / params.Fingerprint();
}

bool Keystore::Has(const bgv::BgvParams& params) const {
  const fs::path dir = DirFor(params);
  return fs::exists(dir / kPublicKeyFile) && fs::exists(dir / kSecretKeyFile);
}

bgv::KeyPair Keystore::Generate(const bgv::ContextPtr& context, RandomStream& rng, bool force) {
  const bgv::BgvParams& params = context->params();
  if (Has(params) && !force) {
    throw KeystoreError("keys for " + params.Fingerprint().substr(0, 16) +
                        " already exist; pass --force to overwrite");
  }
  const fs::path dir = DirFor(params);
  fs::create_directories(dir);
  fs::permissions(dir, fs::perms::owner_all, fs::perm_options::replace);
  bgv::KeyPair keys = bgv::KeyGen(context, rng);
  WriteFile(dir / kSecretKeyFile, bgv::Serialize(keys.secret_key),
            fs::perms::owner_read | fs::perms::owner_write);
  WriteFile(dir / kPublicKeyFile, bgv::Serialize(keys.public_key),
            fs::perms::owner_read | fs::perms::owner_write | fs::perms::group_read |
                fs::perms::others_read);
  return keys;
}

std::optional<bgv::KeyPair> Keystore::Load(const bgv::ContextPtr& context) const {
  if (!Has(context->params())) return std::nullopt;
  const fs::path dir = DirFor(context->params());
  try {
    return bgv::KeyPair{bgv::DeserializePublicKey(ReadFile(dir / kPublicKeyFile), context),
                        bgv::DeserializeSecretKey(ReadFile(dir / kSecretKeyFile), context)};
  } catch (const FormatError& e) {
    throw KeystoreError("corrupt key file in " + dir.string() + ": " + e.what());
  }
}

std::optional<KeyInfo> Keystore::Info(const bgv::BgvParams& params) const {
  if (!Has(params)) return std::nullopt;
  KeyInfo info;
  info.fingerprint = params.Fingerprint();
  info.pk_path = DirFor(params) / kPublicKeyFile;
  info.sk_path = DirFor(params) / kSecretKeyFile;
  info.pk_bytes = fs::file_size(info.pk_path);
  info.sk_bytes = fs::file_size(info.sk_path);
  const fs::perms p = fs::status(info.sk_path).permissions();
  const fs::perms shared = fs::perms::group_all | fs::perms::others_all;
  info.sk_owner_only = (p & shared) == fs::perms::none;
  return info;
}

KeystoreLock::KeystoreLock(const fs::path& root) {
  fs::create_directories(root);
  const fs::path lock = root / ".lock";
  fd_ = ::open(lock.c_str(), O_RDWR | O_CREAT | O_CLOEXEC, 0600);
  if (fd_ < 0) throw KeystoreError("cannot open " + lock.string());
  if (::flock(fd_, LOCK_EX) != 0) {
    ::close(fd_);
    throw KeystoreError("cannot lock " + lock.string());
  }
}

KeystoreLock::~KeystoreLock() {
  if (fd_ >= 0) {
    ::flock(fd_, LOCK_UN);
    ::close(fd_);
  }
}

}  // namespace privread::client
