#pragma once

// Content-addressed on-disk store for characters. Each file holds the full weight
// function JSON for one (datum, highest weight) pair, named by the SHA-256 of the key.
// Entries that fail validation are recomputed and overwritten, never trusted.

#include <openssl/evp.h>

#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <thread>

#include "lbranch/json_io.hpp"

namespace lbranch::tools {

inline std::string sha256_hex(std::string_view data)
{
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr);
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 15];
  }
  return out;
}

class DiskCache : public CharacterStore {
public:
  explicit DiskCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  static Json key(const RootDatum& datum, const Weight& highest)
  {
    return Json{{"matrix", datum.cartan().matrix},
                {"symmetrizers", datum.cartan().symmetrizers},
                {"highest", to_json(highest)}};
  }

  std::filesystem::path path_for(const RootDatum& datum, const Weight& highest) const
  {
    return dir_ / (sha256_hex(key(datum, highest).dump()) + ".json");
  }

  std::optional<WeightMap> load(const RootDatum& datum, const Weight& highest) override
  {
    auto loaded = read_validated(datum, highest);
    if (loaded)
      ++hits_;
    else
      ++misses_;
    return loaded;
  }

  void save(const RootDatum& datum, const Weight& highest, const WeightMap& dominant) override
  {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec)
      return;
    Json doc{{"key", key(datum, highest)}, {"character", to_json(expand_orbits(datum, dominant))}};
    const auto target = path_for(datum, highest);
    std::ostringstream tmp_name;
    tmp_name << target.filename().string() << ".tmp." << std::this_thread::get_id() << '.' << counter_++;
    const auto tmp = dir_ / tmp_name.str();
    {
      std::ofstream out(tmp, std::ios::binary);
      out << doc.dump();
      if (!out)
        return;
    }
    std::filesystem::rename(tmp, target, ec);
    if (ec)
      std::filesystem::remove(tmp, ec);
  }

  std::size_t hits() const { return hits_; }
  std::size_t misses() const { return misses_; }
  const std::filesystem::path& directory() const { return dir_; }

private:
  std::optional<WeightMap> read_validated(const RootDatum& datum, const Weight& highest) const
  {
    std::ifstream in(path_for(datum, highest), std::ios::binary);
    if (!in)
      return std::nullopt;
    try {
      Json doc = Json::parse(in);
      if (doc.at("key") != key(datum, highest))
        return std::nullopt;
      WeightFunction f = weight_function_from_json(doc.at("character"), datum);
      if (f(highest) != 1 || f.total() != weyl_dimension(datum, highest) || !f.is_w_invariant())
        return std::nullopt;
      WeightMap dominant;
      for (const auto& [w, v] : f) {
        if (v <= 0 || !datum.leq(w, highest))
          return std::nullopt;
        if (w.is_dominant())
          dominant.emplace(w, v);
      }
      return dominant;
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }

  std::filesystem::path dir_;
  std::atomic<std::size_t> hits_{0}, misses_{0}, counter_{0};
};

} // namespace lbranch::tools
