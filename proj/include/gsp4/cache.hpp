#pragma once

#include <filesystem>
#include <optional>

#include "gsp4/oracle.hpp"

namespace gsp4 {

/// On-disk store of convolution results, one JSON file per (p, mu, nu).
/// Concurrent readers are allowed; writers are exclusive and publish by
/// renaming a temporary file into place.
class ConvolutionCache {
 public:
  static constexpr int kFormatVersion = 1;

  explicit ConvolutionCache(std::filesystem::path directory);

  const std::filesystem::path& directory() const { return dir_; }
  std::filesystem::path entry_path(int p, const DominantCoweight& mu, const DominantCoweight& nu) const;

  /// nullopt on a miss; files with another format version or unreadable
  /// contents count as misses.
  std::optional<ConvolutionResult> load(int p, const DominantCoweight& mu, const DominantCoweight& nu) const;
  void store(const ConvolutionResult& result) const;

 private:
  std::filesystem::path dir_;
};

/// convolve_oracle through the cache when one is given.
ConvolutionResult convolve_cached(const DominantCoweight& mu, const DominantCoweight& nu, int p,
                                  const ConvolutionCache* cache, int window = kDefaultWindow);

}  // namespace gsp4
