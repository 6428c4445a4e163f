#include "loopmc/config_file.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "loopmc/errors.hpp"

namespace loopmc {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

}  // namespace

ConfigFile ConfigFile::parse_text(const std::string& text) {
  ConfigFile cf;
  cf.sections[""];
  std::istringstream is(text);
  std::string line;
  std::string section;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::string where = "config line " + std::to_string(lineno);
    if (line.front() == '[') {
      if (line.back() != ']')
        throw ConfigError(where + ": unterminated section header");
      section = trim(line.substr(1, line.size() - 2));
      if (section.empty()) throw ConfigError(where + ": empty section name");
      cf.sections[section];
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError(where + ": expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw ConfigError(where + ": empty key");
    auto& sec = cf.sections[section];
    if (sec.count(key))
      throw ConfigError(where + ": duplicate key '" + key + "'");
    sec[key] = value;
  }
  return cf;
}

ConfigFile ConfigFile::parse_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw IoError("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << is.rdbuf();
  return parse_text(buf.str());
}

std::map<std::string, std::string> ConfigFile::merged(
    const std::string& section) const {
  std::map<std::string, std::string> out;
  auto top = sections.find("");
  if (top != sections.end()) out = top->second;
  auto sec = sections.find(section);
  if (sec != sections.end())
    for (const auto& [k, v] : sec->second) out[k] = v;
  return out;
}

KeyView::KeyView(std::map<std::string, std::string> kv) : kv_(std::move(kv)) {}

bool KeyView::has(const std::string& key) const { return kv_.count(key) > 0; }

std::optional<std::string> KeyView::take(const std::string& key) {
  auto it = kv_.find(key);
  if (it == kv_.end()) return std::nullopt;
  std::string v = it->second;
  kv_.erase(it);
  return v;
}

std::string KeyView::take_str(const std::string& key,
                              const std::string& dflt) {
  auto v = take(key);
  return v ? *v : dflt;
}

namespace {

double parse_double(const std::string& key, const std::string& text) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(text, &pos);
    if (pos != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("key '" + key + "': bad numeric value '" + text + "'");
  }
}

}  // namespace

double KeyView::take_double(const std::string& key) {
  auto v = take(key);
  if (!v) throw ConfigError("missing required key '" + key + "'");
  return parse_double(key, *v);
}

double KeyView::take_double(const std::string& key, double dflt) {
  auto v = take(key);
  return v ? parse_double(key, *v) : dflt;
}

std::optional<double> KeyView::take_opt_double(const std::string& key) {
  auto v = take(key);
  if (!v) return std::nullopt;
  return parse_double(key, *v);
}

long KeyView::take_long(const std::string& key, long dflt) {
  auto v = take(key);
  if (!v) return dflt;
  const double d = parse_double(key, *v);
  const long r = std::lround(d);
  if (d != static_cast<double>(r))
    throw ConfigError("key '" + key + "' must be an integer");
  return r;
}

std::uint64_t KeyView::take_u64(const std::string& key, std::uint64_t dflt) {
  auto v = take(key);
  if (!v) return dflt;
  try {
    std::size_t pos = 0;
    const std::uint64_t r = std::stoull(*v, &pos);
    if (pos != v->size()) throw std::invalid_argument(*v);
    return r;
  } catch (const std::exception&) {
    throw ConfigError("key '" + key + "': bad unsigned value '" + *v + "'");
  }
}

void KeyView::reject_leftovers(const std::string& context) const {
  if (kv_.empty()) return;
  std::string names;
  for (const auto& [k, v] : kv_) {
    if (!names.empty()) names += ", ";
    names += "'" + k + "'";
  }
  throw ConfigError("unknown key(s) for " + context + ": " + names);
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> out;
  std::string item;
  auto flush = [&]() {
    if (item.empty()) return;
    try {
      std::size_t pos = 0;
      out.push_back(std::stod(item, &pos));
      if (pos != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ConfigError("bad numeric list element '" + item + "'");
    }
    item.clear();
  };
  for (char ch : text) {
    if (ch == ',' || ch == ' ' || ch == '\t') {
      flush();
    } else {
      item += ch;
    }
  }
  flush();
  return out;
}

}  // namespace loopmc
