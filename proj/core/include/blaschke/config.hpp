#pragma once

// Flat key=value configuration text. Blank lines and lines starting with '#'
// are skipped; whitespace around keys and values is trimmed.

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "blaschke/orbit.hpp"

namespace blaschke {

class Config {
 public:
  /// Throws DomainError naming the offending line.
  static Config parse(std::string_view text);
  /// Throws IoError if the file cannot be read.
  static Config load(const std::string& path);

  std::optional<std::string> get(const std::string& key) const;
  const std::map<std::string, std::string>& entries() const { return entries_; }

  /// Applies max-iter, eps-cycle, eps-circle, escape-factor, warmup and
  /// parabolic-band when present.
  OrbitSpec apply(OrbitSpec spec) const;

 private:
  std::map<std::string, std::string> entries_;
};

}  // namespace blaschke
