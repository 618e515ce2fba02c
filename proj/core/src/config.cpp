#include "liecurv/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>

#include "liecurv/errors.hpp"
#include "liecurv/format.hpp"

namespace liecurv {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::optional<std::string> ConfigSection::find(const std::string& key) const {
  for (const auto& [k, v] : entries)
    if (k == key) return v;
  return std::nullopt;
}

std::string ConfigSection::get(const std::string& key) const {
  if (auto v = find(key)) return *v;
  throw ConfigError("section [" + name + "] is missing key '" + key + "'");
}

const ConfigSection* ConfigFile::first(const std::string& name) const {
  for (const auto& s : sections)
    if (s.name == name) return &s;
  return nullptr;
}

std::vector<const ConfigSection*> ConfigFile::all(const std::string& name) const {
  std::vector<const ConfigSection*> out;
  for (const auto& s : sections)
    if (s.name == name) out.push_back(&s);
  return out;
}

ConfigFile parse_config(std::istream& in) {
  ConfigFile file;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line.substr(0, line.find('#')));
    if (t.empty() || t[0] == ';') continue;
    if (t.front() == '[') {
      if (t.back() != ']') throw ConfigError("line " + std::to_string(lineno) + ": unterminated section header");
      file.sections.push_back({trim(t.substr(1, t.size() - 2)), {}});
      continue;
    }
    const auto eq = t.find('=');
    if (eq == std::string::npos) throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
    if (file.sections.empty()) throw ConfigError("line " + std::to_string(lineno) + ": entry outside a section");
    file.sections.back().entries.emplace_back(trim(t.substr(0, eq)), trim(t.substr(eq + 1)));
  }
  return file;
}

ConfigFile read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open configuration file '" + path + "'");
  return parse_config(in);
}

std::vector<std::vector<std::string>> parse_entries(const std::string& value) {
  std::vector<std::vector<std::string>> out;
  std::stringstream outer(value);
  std::string entry;
  while (std::getline(outer, entry, ';')) {
    std::replace(entry.begin(), entry.end(), ',', ' ');
    std::stringstream inner(entry);
    std::vector<std::string> items;
    std::string item;
    while (inner >> item) items.push_back(item);
    if (!items.empty()) out.push_back(std::move(items));
  }
  return out;
}

double parse_double(const std::string& item) {
  double v = 0.0;
  const char* end = item.data() + item.size();
  auto [ptr, ec] = std::from_chars(item.data(), end, v);
  if (ec != std::errc{} || ptr != end) throw ConfigError("cannot parse number '" + item + "'");
  return v;
}

long long parse_integer(const std::string& item) {
  long long v = 0;
  const char* end = item.data() + item.size();
  auto [ptr, ec] = std::from_chars(item.data(), end, v);
  if (ec != std::errc{} || ptr != end) throw ConfigError("cannot parse integer '" + item + "'");
  return v;
}

std::vector<double> parse_vector(const std::string& value) {
  std::vector<double> out;
  for (const auto& entry : parse_entries(value))
    for (const auto& item : entry) out.push_back(parse_double(item));
  return out;
}

MetricAlgebraSpec parse_algebra_section(const ConfigSection& section) {
  const long long dim = parse_integer(section.get("dim"));
  if (dim < 1) throw ConfigError("[" + section.name + "] dim must be positive");
  const auto n = static_cast<std::size_t>(dim);

  std::vector<StructureEntry> entries;
  if (auto s = section.find("structure")) {
    for (const auto& e : parse_entries(*s)) {
      if (e.size() != 4) throw ConfigError("structure entries need four items: i j k value");
      entries.push_back({int(parse_integer(e[0])), int(parse_integer(e[1])), int(parse_integer(e[2])),
                         parse_double(e[3])});
    }
  }

  MetricAlgebraSpec spec;
  spec.name = section.find("name").value_or(section.name);
  spec.structure = structure_from_entries(n, entries);

  const std::string gram = trim(section.find("gram").value_or("identity"));
  if (gram == "identity") {
    spec.gram = Matrix::Identity(n, n);
  } else if (gram.rfind("diag:", 0) == 0) {
    const auto d = parse_vector(gram.substr(5));
    if (d.size() != n) throw ConfigError("diag Gram needs " + std::to_string(n) + " entries");
    spec.gram = Matrix::Zero(n, n);
    for (std::size_t i = 0; i < n; ++i) spec.gram(i, i) = d[i];
  } else {
    const auto rows = parse_entries(gram);
    if (rows.size() != n) throw ConfigError("Gram needs " + std::to_string(n) + " rows");
    spec.gram = Matrix::Zero(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      if (rows[i].size() != n) throw ConfigError("Gram row " + std::to_string(i + 1) + " has wrong length");
      for (std::size_t j = 0; j < n; ++j) spec.gram(i, j) = parse_double(rows[i][j]);
    }
  }
  return spec;
}

ActionSpec parse_action_section(const ConfigSection& section, std::size_t dim_g, std::size_t dim_h) {
  std::vector<ActionEntry> entries;
  for (const auto& e : parse_entries(section.find("entries").value_or(""))) {
    if (e.size() != 4) throw ConfigError("action entries need four items: g-index h-row h-col value");
    entries.push_back({int(parse_integer(e[0])), int(parse_integer(e[1])), int(parse_integer(e[2])),
                       parse_double(e[3])});
  }
  return action_from_entries(dim_g, dim_h, entries);
}

namespace {

struct TrigEntry {
  torus::Parity parity;
  int k1;
  int k2;
  double coefficient;
  int component;
};

std::vector<TrigEntry> parse_trig_entries(const std::string& value) {
  std::vector<TrigEntry> out;
  for (const auto& e : parse_entries(value)) {
    if (e.size() != 5) throw ConfigError("trig entries need five items: parity k1 k2 coefficient component");
    torus::Parity p;
    if (e[0] == "cos")
      p = torus::Parity::Cos;
    else if (e[0] == "sin")
      p = torus::Parity::Sin;
    else
      throw ConfigError("trig parity must be cos or sin, got '" + e[0] + "'");
    out.push_back({p, int(parse_integer(e[1])), int(parse_integer(e[2])), parse_double(e[3]),
                   int(parse_integer(e[4]))});
  }
  return out;
}

}  // namespace

torus::TrigFunction parse_trig_function(const std::string& value) {
  torus::TrigFunction f;
  for (const auto& e : parse_trig_entries(value)) {
    if (e.component != 0) throw ConfigError("function trig entries use component 0");
    f.add_term(e.k1, e.k2, e.parity, e.coefficient);
  }
  return f;
}

torus::TrigVectorField parse_trig_field(const std::string& value) {
  torus::TrigVectorField x;
  for (const auto& e : parse_trig_entries(value)) {
    if (e.component != 1 && e.component != 2) throw ConfigError("vector field trig entries use component 1 or 2");
    x[e.component - 1].add_term(e.k1, e.k2, e.parity, e.coefficient);
  }
  return x;
}

std::string format_trig(const torus::TrigFunction& f, int component) {
  std::string out;
  for (const auto& [m, c] : f.terms()) {
    if (!out.empty()) out += "; ";
    out += torus::to_string(m.parity) + " " + std::to_string(m.k1) + " " + std::to_string(m.k2) + " " +
           format_number(c) + " " + std::to_string(component);
  }
  return out;
}

std::string format_trig(const torus::TrigVectorField& x) {
  const std::string a = format_trig(x.c1, 1);
  const std::string b = format_trig(x.c2, 2);
  if (a.empty()) return b;
  if (b.empty()) return a;
  return a + "; " + b;
}

}  // namespace liecurv
