#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liecurv/algebra.hpp"
#include "liecurv/semidirect.hpp"
#include "liecurv/trig.hpp"

namespace liecurv {

/// Flat sectioned key-value files:
///
///   # comment            ; whole-line comment
///   [section]
///   key = value          # trailing comment
///
/// Sections may repeat (e.g. one [plane] per plane). List values separate entries with ';'
/// and items within an entry with whitespace or ','.
struct ConfigSection {
  std::string name;
  std::vector<std::pair<std::string, std::string>> entries;

  std::optional<std::string> find(const std::string& key) const;
  std::string get(const std::string& key) const;
};

struct ConfigFile {
  std::vector<ConfigSection> sections;

  const ConfigSection* first(const std::string& name) const;
  std::vector<const ConfigSection*> all(const std::string& name) const;
};

ConfigFile parse_config(std::istream& in);
ConfigFile read_config_file(const std::string& path);

/// Splits "a b; c,d" into {{"a","b"},{"c","d"}}.
std::vector<std::vector<std::string>> parse_entries(const std::string& value);
std::vector<double> parse_vector(const std::string& value);
double parse_double(const std::string& item);
long long parse_integer(const std::string& item);

/// [algebra]-style section: dim, structure = "i j k value; ...", gram = identity | diag: d1,d2,.. |
/// "row; row; ...", optional name.
MetricAlgebraSpec parse_algebra_section(const ConfigSection& section);
/// [action] section: entries = "g-index h-row h-col value; ...".
ActionSpec parse_action_section(const ConfigSection& section, std::size_t dim_g, std::size_t dim_h);

/// Trig entries "parity k1 k2 coefficient component; ..." (component 0 for functions, 1 or 2
/// for vector field components).
torus::TrigFunction parse_trig_function(const std::string& value);
torus::TrigVectorField parse_trig_field(const std::string& value);
std::string format_trig(const torus::TrigFunction& f, int component = 0);
std::string format_trig(const torus::TrigVectorField& x);

}  // namespace liecurv
