#include "gsp4/cache.hpp"

#include <atomic>
#include <fstream>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <unistd.h>

#include <json.hpp>

namespace gsp4 {

namespace {

std::shared_mutex& cache_mutex() {
  static std::shared_mutex m;
  return m;
}

std::string slug(const DominantCoweight& w) {
  std::string s;
  for (int i = 0; i < 4; ++i) {
    if (i) s += '_';
    s += std::to_string(w[i]);
  }
  return s;
}

}  // namespace

ConvolutionCache::ConvolutionCache(std::filesystem::path directory) : dir_(std::move(directory)) {}

std::filesystem::path ConvolutionCache::entry_path(int p, const DominantCoweight& mu,
                                                   const DominantCoweight& nu) const {
  return dir_ / ("conv_p" + std::to_string(p) + "__" + slug(mu) + "__" + slug(nu) + ".json");
}

std::optional<ConvolutionResult> ConvolutionCache::load(int p, const DominantCoweight& mu,
                                                        const DominantCoweight& nu) const {
  std::shared_lock lock(cache_mutex());
  std::ifstream in(entry_path(p, mu, nu));
  if (!in) return std::nullopt;
  try {
    auto j = nlohmann::json::parse(in);
    if (j.at("format_version").get<int>() != kFormatVersion) return std::nullopt;
    if (j.at("p").get<int>() != p || DominantCoweight::parse(j.at("mu").get<std::string>()) != mu ||
        DominantCoweight::parse(j.at("nu").get<std::string>()) != nu)
      return std::nullopt;
    ConvolutionResult r;
    r.p = p;
    r.mu = mu;
    r.nu = nu;
    for (const auto& [key, value] : j.at("coefficients").items())
      r.coefficients[DominantCoweight::parse(key)] = parse_decimal(value.get<std::string>());
    return r;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void ConvolutionCache::store(const ConvolutionResult& result) const {
  nlohmann::json j;
  j["format_version"] = kFormatVersion;
  j["p"] = result.p;
  j["mu"] = result.mu.to_string();
  j["nu"] = result.nu.to_string();
  j["coefficients"] = nlohmann::json::object();
  for (const auto& [lambda, n] : result.coefficients) j["coefficients"][lambda.to_string()] = to_decimal(n);

  static std::atomic<unsigned> counter{0};
  std::unique_lock lock(cache_mutex());
  std::filesystem::create_directories(dir_);
  auto target = entry_path(result.p, result.mu, result.nu);
  auto tmp = target;
  tmp += ".tmp." + std::to_string(::getpid()) + "." + std::to_string(counter++);
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
    out << j.dump(2) << "\n";
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
  }
  std::filesystem::rename(tmp, target);
}

ConvolutionResult convolve_cached(const DominantCoweight& mu, const DominantCoweight& nu, int p,
                                  const ConvolutionCache* cache, int window) {
  for (const auto* w : {&mu, &nu})
    if (w->spread() > window)
      throw WindowError("coweight " + w->to_string() + " has spread " + std::to_string(w->spread()) +
                        " beyond the enumeration window " + std::to_string(window));
  if (cache)
    if (auto hit = cache->load(p, mu, nu)) return *hit;
  ConvolutionResult r = convolve_oracle(mu, nu, p, window);
  if (cache) cache->store(r);
  return r;
}

}  // namespace gsp4
