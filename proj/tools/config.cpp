#include "config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace sppcli {

namespace {

struct Key {
  const char* name;
  const char* fallback;
  const char* help;
};

struct Section {
  const char* name;
  std::vector<Key> keys;
};

// Empty defaults mean "derived" or "unused"; see the help text.
const std::vector<Section>& schema() {
  static const std::vector<Section> s = {
      {"metal",
       {{"model", "drude", "drude | direct"},
        {"omega_p", "1.402e16", "plasma frequency, rad/s (drude)"},
        {"gamma", "6.25e13", "collision rate, rad/s (drude)"},
        {"eps_re", "", "Re eps_m (direct)"},
        {"eps_im", "", "Im eps_m (direct)"}}},
      {"dielectric",
       {{"n_real", "0.9726", "refractive index"},
        {"n_imag", "-0.08", "extinction; negative is gain"}}},
      {"geometry", {{"d", "60e-9", "film thickness, m"}}},
      {"solver",
       {{"tolerance", "1e-12", "relative step at convergence"},
        {"max_iterations", "100", "Newton iterations per seed"}}},
      {"dispersion",
       {{"parities", "symmetric, antisymmetric", "mode families"},
        {"omega", "", "explicit grid, rad/s; overrides the range"},
        {"omega_min", "1e15", "rad/s"},
        {"omega_max", "6e15", "rad/s"},
        {"omega_count", "51", "grid points"},
        {"out", "", "CSV path; empty writes to stdout"}}},
      {"gain_sweep",
       {{"parities", "symmetric, antisymmetric", "mode families"},
        {"n_real", "", "refractive index; empty uses [dielectric] n_real"},
        {"omega", "4.8e15", "rad/s"},
        {"kappa", "", "explicit grid; overrides the range"},
        {"kappa_min", "-0.1", "first grid value"},
        {"kappa_max", "0", "last grid value"},
        {"kappa_count", "101", "grid points"},
        {"out", "", "CSV path; empty writes to stdout"}}},
      {"field",
       {{"parities", "symmetric, antisymmetric", "mode families"},
        {"omega", "4.8e15", "rad/s"},
        {"alpha_mag", "2.6457513110645907", "|alpha|"},
        {"theta", "1.5", "arg alpha, rad"},
        {"xi_mag", "0", "|xi|; 0 is a coherent state"},
        {"theta_xi", "", "arg xi, rad; required when xi_mag != 0"},
        {"x_min", "0", "m"},
        {"x_max", "", "m; empty uses 5/|Im k| per mode"},
        {"x_count", "500", "samples per z row"},
        {"z", "", "depths, m; empty samples both faces (0 and d)"},
        {"out", "", "CSV path; empty writes to stdout"}}},
      {"compare",
       {{"alpha_mag", "2.6457513110645907", "second state |alpha|"},
        {"theta", "1.5", "second state arg alpha, rad"},
        {"xi_mag", "", "second state |xi|; required with --compare"},
        {"theta_xi", "", "second state arg xi, rad; required with --compare"}}},
      {"verify",
       {{"parities", "symmetric, antisymmetric", "mode families"},
        {"omega", "4.8e15", "rad/s"},
        {"commutator_pairs", "10", "random (x, x') pairs per kernel"},
        {"seed", "20240229", "pair generator seed"},
        {"curl_depths", "20", "finite-difference depths per region"},
        {"out", "", "report path; empty writes to stdout"}}},
  };
  return s;
}

const Key* find_key(const std::string& section, const std::string& key) {
  for (const auto& s : schema())
    if (section == s.name)
      for (const auto& k : s.keys)
        if (key == k.name) return &k;
  return nullptr;
}

bool known_section(const std::string& section) {
  return std::any_of(schema().begin(), schema().end(),
                     [&](const Section& s) { return section == s.name; });
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::string where(const std::string& section, const std::string& key) {
  return "[" + section + "] " + key;
}

}  // namespace

double parse_number(const std::string& text, const std::string& what) {
  const std::string t = trim(text);
  double v = 0.0;
  const char* first = t.data();
  const char* last = t.data() + t.size();
  if (!t.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (t.empty() || ec != std::errc() || ptr != last || !std::isfinite(v))
    throw ConfigError(what + ": '" + text + "' is not a finite number");
  return v;
}

Config Config::defaults() {
  Config c;
  for (const auto& s : schema())
    for (const auto& k : s.keys) c.values_[s.name][k.name] = k.fallback;
  return c;
}

Config Config::parse(std::istream& in, const std::string& origin) {
  Config c = defaults();
  std::string line;
  std::string section;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const std::string at = origin + ":" + std::to_string(number) + ": ";
    // Comments run from '#' or ';' to the end of the line.
    const auto hash = line.find_first_of("#;");
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigError(at + "unterminated section header");
      section = trim(line.substr(1, line.size() - 2));
      if (!known_section(section)) throw ConfigError(at + "unknown section [" + section + "]");
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError(at + "expected key = value");
    if (section.empty()) throw ConfigError(at + "key outside of a section");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (!find_key(section, key)) throw ConfigError(at + "unknown key " + where(section, key));
    if (c.explicit_[section][key]) throw ConfigError(at + "duplicate key " + where(section, key));
    c.values_[section][key] = value;
    c.explicit_[section][key] = true;
  }
  return c;
}

Config Config::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  return parse(in, path);
}

const std::string& Config::raw(const std::string& section, const std::string& key) const {
  if (!find_key(section, key)) throw std::logic_error("schema has no " + where(section, key));
  return values_.at(section).at(key);
}

bool Config::was_set(const std::string& section, const std::string& key) const {
  const auto s = explicit_.find(section);
  if (s == explicit_.end()) return false;
  const auto k = s->second.find(key);
  return k != s->second.end() && k->second;
}

double Config::number(const std::string& section, const std::string& key) const {
  return parse_number(raw(section, key), where(section, key));
}

std::optional<double> Config::optional_number(const std::string& section,
                                              const std::string& key) const {
  if (trim(raw(section, key)).empty()) return std::nullopt;
  return number(section, key);
}

std::int64_t Config::integer(const std::string& section, const std::string& key) const {
  const std::string t = trim(raw(section, key));
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size())
    throw ConfigError(where(section, key) + ": '" + t + "' is not an integer");
  return v;
}

std::vector<double> Config::numbers(const std::string& section, const std::string& key) const {
  std::vector<double> out;
  for (const auto& item : split_list(raw(section, key)))
    out.push_back(parse_number(item, where(section, key)));
  return out;
}

std::vector<std::string> Config::words(const std::string& section, const std::string& key) const {
  return split_list(raw(section, key));
}

void Config::set(const std::string& section, const std::string& key, const std::string& value) {
  if (!find_key(section, key)) throw std::logic_error("schema has no " + where(section, key));
  values_[section][key] = value;
  explicit_[section][key] = true;
}

void Config::dump(std::ostream& out) const {
  bool first = true;
  for (const auto& s : schema()) {
    if (!first) out << '\n';
    first = false;
    out << '[' << s.name << "]\n";
    for (const auto& k : s.keys) {
      // Empty values stay commented so the dump parses back to the same effective config.
      const std::string& v = values_.at(s.name).at(k.name);
      if (v.empty())
        out << "# " << k.name << " =  (" << k.help << ")\n";
      else
        out << k.name << " = " << v << "  # " << k.help << '\n';
    }
  }
}

}  // namespace sppcli
