#ifndef ORBITHAM_CACHE_HPP
#define ORBITHAM_CACHE_HPP

#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>

#include "orbitham/orbitalgebra.hpp"

namespace orbitham {

// Append-only persistent store for computed tables, one file per root system.
// Line 1 is a version header; every further line is one record.  Records are
// immutable: re-storing a key with different bytes is an error, and loading a
// file whose header does not match the running configuration is an error.
class CacheStore {
public:
  static constexpr int kFormatVersion = 1;
  static constexpr const char* kNormalizationTag = "long-roots-squared-2";

  explicit CacheStore(std::filesystem::path root);

  const std::filesystem::path& root() const { return root_; }

  std::optional<MExpansion> load_decomposition(const RootSystem& rs, const Weight& j, int a);
  void store_decomposition(const RootSystem& rs, const Weight& j, int a, const MExpansion& d);

  std::optional<TauPoly> load_m2tau(const RootSystem& rs, const Weight& n);
  void store_m2tau(const RootSystem& rs, const Weight& n, const TauPoly& p);

  std::optional<TauPoly> load_coeff(const RootSystem& rs, const std::string& kind,
                                    const std::string& key);
  void store_coeff(const RootSystem& rs, const std::string& kind, const std::string& key,
                   const TauPoly& p);

  // reflection-pair accumulation rows used by the interaction part
  std::optional<MExpansionQ> load_hint(const RootSystem& rs, const Weight& n);
  void store_hint(const RootSystem& rs, const Weight& n, const MExpansionQ& acc);

  struct Stats {
    std::size_t systems = 0;
    std::size_t records = 0;
    std::uintmax_t bytes = 0;
  };
  Stats stats() const;
  void clear();

private:
  std::filesystem::path root_;
  std::mutex mu_;
  // per system: key -> serialized record value
  std::map<std::string, std::map<std::string, std::string>> loaded_;
  std::map<std::string, bool> dirty_open_;

  void ensure_loaded(const RootSystem& rs);
  std::optional<std::string> get(const RootSystem& rs, const std::string& key);
  void put(const RootSystem& rs, const std::string& key, const std::string& value);
  std::filesystem::path file_for(const std::string& system) const;
};

}  // namespace orbitham

#endif
