#include "blaschke/config.hpp"

#include <charconv>

#include "blaschke/errors.hpp"
#include "blaschke/records.hpp"

namespace blaschke {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <class T>
T number(const std::string& key, const std::string& value) {
  T x{};
  const auto res = std::from_chars(value.data(), value.data() + value.size(), x);
  if (res.ec != std::errc{} || res.ptr != value.data() + value.size()) {
    throw DomainError("config: bad value for " + key + ": '" + value + "'");
  }
  return x;
}

}  // namespace

Config Config::parse(std::string_view text) {
  Config cfg;
  int line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    const std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw DomainError("config line " + std::to_string(line_no) + ": expected key=value");
    }
    const std::string_view key = trim(line.substr(0, eq));
    if (key.empty()) throw DomainError("config line " + std::to_string(line_no) + ": empty key");
    cfg.entries_[std::string(key)] = std::string(trim(line.substr(eq + 1)));
  }
  return cfg;
}

Config Config::load(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return parse(text);
  } catch (const DomainError& e) {
    throw DomainError(path + ": " + e.what());
  }
}

std::optional<std::string> Config::get(const std::string& key) const {
  const auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

OrbitSpec Config::apply(OrbitSpec spec) const {
  if (auto v = get("max-iter")) spec.max_iter = number<int>("max-iter", *v);
  if (auto v = get("eps-cycle")) spec.eps_cycle = number<double>("eps-cycle", *v);
  if (auto v = get("eps-circle")) spec.eps_circle = number<double>("eps-circle", *v);
  if (auto v = get("escape-factor")) spec.escape_factor = number<double>("escape-factor", *v);
  if (auto v = get("warmup")) spec.warmup = number<int>("warmup", *v);
  if (auto v = get("parabolic-band")) spec.parabolic_band = number<double>("parabolic-band", *v);
  spec.validate();
  return spec;
}

}  // namespace blaschke
