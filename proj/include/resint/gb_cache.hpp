#pragma once

#include <atomic>
#include <filesystem>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "resint/gb.hpp"

namespace resint {

/// Stable 64-bit fingerprint of (ring, module order, generators, options) as hex.
std::string gb_fingerprint(const FreeModule& F, const std::vector<TermList>& gens, const GBOptions& opts);

/// Text serialization of a basis with a self-describing header.
std::string serialize_basis(const GBasis& gb);
/// Rebuilds the ring and module from the header. Returns nullopt when the
/// header names another tool version; throws std::runtime_error on malformed content.
std::optional<GBasis> deserialize_basis(const std::string& text);

/// On-disk cache of Gröbner bases, one file per fingerprint.
class GBCache {
 public:
  explicit GBCache(std::filesystem::path dir);

  const std::filesystem::path& dir() const { return dir_; }

  std::optional<GBasis> lookup(const FreeModule& F, const std::vector<TermList>& gens, const GBOptions& opts);
  void store(const FreeModule& F, const std::vector<TermList>& gens, const GBOptions& opts, const GBasis& gb);
  /// Lookup, else compute and store.
  GBasis groebner(const FreeModule& F, std::vector<TermList> gens, const GBOptions& opts = {});

  struct Stats {
    std::size_t entries = 0;
    std::size_t bytes = 0;
    std::uint64_t hits = 0;
    std::uint64_t misses = 0;
  };
  Stats stats() const;
  std::size_t clear();

  struct VerifyReport {
    std::size_t checked = 0;
    std::size_t passed = 0;
    std::size_t stale = 0;
    std::vector<std::string> corrupt;
  };
  /// Re-checks the Buchberger criterion on up to `sample` entries chosen by `seed`.
  VerifyReport verify(std::size_t sample, std::uint64_t seed) const;

 private:
  std::filesystem::path dir_;
  std::atomic<std::uint64_t> hits_{0};
  std::atomic<std::uint64_t> misses_{0};
};

/// Process-wide cache used by ideal operations; null disables caching.
void set_global_gb_cache(std::shared_ptr<GBCache> cache);
std::shared_ptr<GBCache> global_gb_cache();
/// groebner() through the global cache when one is set.
GBasis cached_groebner(const FreeModule& F, std::vector<TermList> gens, const GBOptions& opts = {});

}  // namespace resint
