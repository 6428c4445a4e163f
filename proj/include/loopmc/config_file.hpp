#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace loopmc {

// Flat "key = value" text with one level of [section] headers; '#' starts a
// comment.  Keys may not repeat within a section.  Commands read their own
// section overlaid on the top-level keys, so shared model parameters are
// written once and per-command settings live under [sample], [oracle], ...
struct ConfigFile {
  std::map<std::string, std::map<std::string, std::string>> sections;

  static ConfigFile parse_text(const std::string& text);
  static ConfigFile parse_file(const std::string& path);

  // Top-level keys overlaid with one section (the section wins on clashes).
  std::map<std::string, std::string> merged(const std::string& section) const;
};

// Consume-style accessor over a key set: every take() removes the key and
// reject_leftovers() turns anything unconsumed into a ConfigError, so a
// misspelled key can never pass silently.
class KeyView {
 public:
  explicit KeyView(std::map<std::string, std::string> kv);

  bool has(const std::string& key) const;
  std::optional<std::string> take(const std::string& key);
  std::string take_str(const std::string& key, const std::string& dflt);
  double take_double(const std::string& key);  // required
  double take_double(const std::string& key, double dflt);
  std::optional<double> take_opt_double(const std::string& key);
  long take_long(const std::string& key, long dflt);
  std::uint64_t take_u64(const std::string& key, std::uint64_t dflt);
  void reject_leftovers(const std::string& context) const;

 private:
  std::map<std::string, std::string> kv_;
};

// "1, 2.5 3" -> {1, 2.5, 3}; separators are commas and/or whitespace.
std::vector<double> parse_double_list(const std::string& text);

}  // namespace loopmc
