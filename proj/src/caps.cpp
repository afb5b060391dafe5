#include "nestbraid/caps.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "nestbraid/errors.hpp"

namespace nestbraid {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

Caps parse_caps(const std::string& text, Caps base) {
  const std::map<std::string, std::size_t Caps::*> fields = {
      {"max_group_order", &Caps::max_group_order},
      {"max_closure", &Caps::max_closure},
      {"max_building", &Caps::max_building},
      {"max_nested", &Caps::max_nested},
      {"max_bipartition_lines", &Caps::max_bipartition_lines},
      {"fuzz_word_length", &Caps::fuzz_word_length},
      {"fuzz_trials", &Caps::fuzz_trials},
      {"max_conjugation_search", &Caps::max_conjugation_search},
  };
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw InvalidInput("config line " + std::to_string(lineno) + ": expected key = value");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    auto it = fields.find(key);
    if (it == fields.end())
      throw InvalidInput("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    std::size_t parsed = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), parsed);
    if (ec != std::errc() || ptr != value.data() + value.size())
      throw InvalidInput("config line " + std::to_string(lineno) + ": bad number '" + value + "'");
    base.*(it->second) = parsed;
  }
  return base;
}

Caps load_caps(const std::string& path, Caps base) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open config file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_caps(buf.str(), base);
}

}  // namespace nestbraid
