#include "orbitham/cache.hpp"

#include <fstream>

#include "orbitham/json_io.hpp"

namespace orbitham {

using nlohmann::json;

namespace {

std::string weight_key(const Weight& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w[i]);
  }
  return s;
}

json header_for(const RootSystem& rs) {
  return json{{"format", CacheStore::kFormatVersion},
              {"system", rs.name()},
              {"normalization", CacheStore::kNormalizationTag}};
}

}  // namespace

CacheStore::CacheStore(std::filesystem::path root) : root_(std::move(root)) {
  std::filesystem::create_directories(root_);
}

std::filesystem::path CacheStore::file_for(const std::string& system) const {
  return root_ / (system + ".jsonl");
}

void CacheStore::ensure_loaded(const RootSystem& rs) {
  if (loaded_.count(rs.name())) return;
  auto& table = loaded_[rs.name()];
  auto path = file_for(rs.name());
  std::ifstream in(path);
  if (!in.good()) return;  // not yet created
  std::string line;
  if (!std::getline(in, line)) return;
  json header = json::parse(line, nullptr, false);
  if (header.is_discarded() || header != header_for(rs))
    fail(Errc::cache_mismatch, "cache header mismatch in " + path.string() +
                                   " (version/system/normalization)");
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    json rec = json::parse(line, nullptr, false);
    if (rec.is_discarded() || !rec.contains("key") || !rec.contains("value"))
      fail(Errc::cache_mismatch, "corrupt cache record in " + path.string());
    table[rec.at("key").get<std::string>()] = dump_stable(rec.at("value"));
  }
}

std::optional<std::string> CacheStore::get(const RootSystem& rs, const std::string& key) {
  std::lock_guard<std::mutex> lk(mu_);
  ensure_loaded(rs);
  auto& table = loaded_[rs.name()];
  auto it = table.find(key);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

void CacheStore::put(const RootSystem& rs, const std::string& key, const std::string& value) {
  std::lock_guard<std::mutex> lk(mu_);
  ensure_loaded(rs);
  auto& table = loaded_[rs.name()];
  auto it = table.find(key);
  if (it != table.end()) {
    if (it->second != value)
      fail(Errc::cache_mismatch, "cache record rewrite differs for key " + key);
    return;  // idempotent
  }
  auto path = file_for(rs.name());
  bool fresh = !std::filesystem::exists(path);
  std::ofstream out(path, std::ios::app);
  if (!out.good()) fail(Errc::bad_argument, "cannot open cache file " + path.string());
  if (fresh) out << dump_stable(header_for(rs)) << "\n";
  json rec{{"key", key}, {"value", json::parse(value)}};
  out << dump_stable(rec) << "\n";
  out.flush();
  table.emplace(key, value);
}

std::optional<MExpansion> CacheStore::load_decomposition(const RootSystem& rs, const Weight& j,
                                                         int a) {
  auto v = get(rs, "decomp:" + weight_key(j) + ":" + std::to_string(a));
  if (!v) return std::nullopt;
  return mexpansion_from_json(json::parse(*v), rs.rank());
}

void CacheStore::store_decomposition(const RootSystem& rs, const Weight& j, int a,
                                     const MExpansion& d) {
  put(rs, "decomp:" + weight_key(j) + ":" + std::to_string(a), dump_stable(mexpansion_to_json(d)));
}

std::optional<TauPoly> CacheStore::load_m2tau(const RootSystem& rs, const Weight& n) {
  auto v = get(rs, "m2tau:" + weight_key(n));
  if (!v) return std::nullopt;
  return taupoly_from_json(json::parse(*v), rs.rank());
}

void CacheStore::store_m2tau(const RootSystem& rs, const Weight& n, const TauPoly& p) {
  put(rs, "m2tau:" + weight_key(n), dump_stable(taupoly_to_json(p)));
}

std::optional<MExpansionQ> CacheStore::load_hint(const RootSystem& rs, const Weight& n) {
  auto v = get(rs, "hint:" + weight_key(n));
  if (!v) return std::nullopt;
  MExpansionQ acc;
  for (const auto& t : json::parse(*v).at("terms"))
    acc.emplace(weight_from_json(t.at(0), rs.rank()),
                rational_from_string(t.at(1).get<std::string>()));
  return acc;
}

void CacheStore::store_hint(const RootSystem& rs, const Weight& n, const MExpansionQ& acc) {
  json terms = json::array();
  for (const auto& [m, c] : acc) terms.push_back({weight_to_json(m), rational_to_string(c)});
  put(rs, "hint:" + weight_key(n), dump_stable(json{{"terms", terms}}));
}

std::optional<TauPoly> CacheStore::load_coeff(const RootSystem& rs, const std::string& kind,
                                              const std::string& key) {
  auto v = get(rs, kind + ":" + key);
  if (!v) return std::nullopt;
  return taupoly_from_json(json::parse(*v), rs.rank());
}

void CacheStore::store_coeff(const RootSystem& rs, const std::string& kind, const std::string& key,
                             const TauPoly& p) {
  put(rs, kind + ":" + key, dump_stable(taupoly_to_json(p)));
}

CacheStore::Stats CacheStore::stats() const {
  Stats s;
  if (!std::filesystem::exists(root_)) return s;
  for (const auto& entry : std::filesystem::directory_iterator(root_)) {
    if (!entry.is_regular_file() || entry.path().extension() != ".jsonl") continue;
    ++s.systems;
    s.bytes += entry.file_size();
    std::ifstream in(entry.path());
    std::string line;
    std::size_t lines = 0;
    while (std::getline(in, line))
      if (!line.empty()) ++lines;
    if (lines > 0) s.records += lines - 1;  // minus header
  }
  return s;
}

void CacheStore::clear() {
  std::lock_guard<std::mutex> lk(mu_);
  if (std::filesystem::exists(root_))
    for (const auto& entry : std::filesystem::directory_iterator(root_))
      if (entry.is_regular_file() && entry.path().extension() == ".jsonl")
        std::filesystem::remove(entry.path());
  loaded_.clear();
}

}  // namespace orbitham
