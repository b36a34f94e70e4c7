#include "abflux/config.hpp"
#include "abflux/errors.hpp"
#include "abflux/flux.hpp"
#include "abflux/waveop.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <set>
#include <sstream>

namespace abflux::cli {

namespace {

const std::set<std::string> known_outputs = {"spectrum", "smatrix", "classify", "wavesymbol", "verify"};

std::string trim(const std::string& s)
{
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep)
{
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(trim(item));
  return out;
}

double to_double(const std::string& v, const std::string& where)
{
  try {
    std::size_t pos = 0;
    const double d = std::stod(v, &pos);
    if (pos != v.size() || !std::isfinite(d)) throw std::invalid_argument(v);
    return d;
  } catch (const std::exception&) {
    throw ConfigError(where + ": expected a number, got '" + v + "'");
  }
}

std::size_t to_count(const std::string& v, const std::string& where)
{
  const double d = to_double(v, where);
  if (d < 1 || d != std::floor(d)) throw ConfigError(where + ": expected a positive integer");
  return static_cast<std::size_t>(d);
}

cplx to_complex(const std::string& v, const std::string& where)
{
  const auto parts = split(v, ',');
  if (parts.size() != 2) throw ConfigError(where + ": expected 're, im'");
  return {to_double(parts[0], where), to_double(parts[1], where)};
}

// "U.12" -> (0, 1)
bool matrix_key(const std::string& key, char& name, int& i, int& j)
{
  if (key.size() != 4 || key[1] != '.') return false;
  name = key[0];
  if (name != 'U' && name != 'C' && name != 'D') return false;
  i = key[2] - '1';
  j = key[3] - '1';
  return i >= 0 && i < 2 && j >= 0 && j < 2;
}

void apply(RunConfig& cfg, const std::string& key, const std::string& value, const std::string& where,
           bool& saw_u, bool& saw_cd)
{
  char name;
  int i, j;
  if (key == "alpha") {
    cfg.alpha = to_double(value, where);
    try {
      Flux f(cfg.alpha);
    } catch (const DomainError& e) {
      throw ConfigError(where + ": " + e.what());
    }
  } else if (matrix_key(key, name, i, j)) {
    const cplx z = to_complex(value, where);
    if (name == 'U') {
      cfg.u(i, j) = z;
      saw_u = true;
    } else {
      (name == 'C' ? cfg.c : cfg.d)(i, j) = z;
      saw_cd = true;
    }
  } else if (key == "kappa.min" || key == "x.min") {
    (key[0] == 'k' ? cfg.kappa : cfg.x).min = to_double(value, where);
  } else if (key == "kappa.max" || key == "x.max") {
    (key[0] == 'k' ? cfg.kappa : cfg.x).max = to_double(value, where);
  } else if (key == "kappa.count" || key == "x.count") {
    (key[0] == 'k' ? cfg.kappa : cfg.x).count = to_count(value, where);
  } else if (key == "kappa.spacing" || key == "x.spacing") {
    (key[0] == 'k' ? cfg.kappa : cfg.x).spacing = value;
  } else if (key == "outputs") {
    cfg.outputs.clear();
    for (const auto& o : split(value, ',')) {
      if (!known_outputs.count(o)) throw ConfigError(where + ": unknown output '" + o + "'");
      cfg.outputs.push_back(o);
    }
  } else if (key == "format") {
    if (value != "csv" && value != "json") throw ConfigError(where + ": format must be csv or json");
    cfg.format = value;
  } else if (key == "wavesymbol.kappa") {
    cfg.wave_kappa = to_double(value, where);
  } else if (key == "seed") {
    cfg.seed = static_cast<unsigned long long>(to_count(value, where));
  } else {
    throw ConfigError(where + ": unknown key '" + key + "'");
  }
}

void finish(RunConfig& cfg, bool saw_u, bool saw_cd)
{
  if (saw_u && saw_cd) throw ConfigError("extension: give either U entries or C/D entries, not both");
  cfg.unitary_form = !saw_cd;
  validate(cfg);
}

RunConfig parse_json(const std::string& text)
{
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("json: ") + e.what());
  }
  const nlohmann::json& c = doc.contains("config") ? doc["config"] : doc;
  RunConfig cfg;
  bool saw_u = false, saw_cd = false;
  for (auto it = c.begin(); it != c.end(); ++it) {
    const std::string where = "field " + it.key();
    const auto& v = it.value();
    if (it.key() == "U" || it.key() == "C" || it.key() == "D") {
      Matrix2 m;
      try {
        for (int i = 0; i < 2; ++i)
          for (int j = 0; j < 2; ++j) m(i, j) = cplx(v.at(i).at(j).at(0).get<double>(), v.at(i).at(j).at(1).get<double>());
      } catch (const nlohmann::json::exception&) {
        throw ConfigError(where + ": expected [[[re,im],[re,im]],[[re,im],[re,im]]]");
      }
      if (it.key() == "U") {
        cfg.u = m;
        saw_u = true;
      } else {
        (it.key() == "C" ? cfg.c : cfg.d) = m;
        saw_cd = true;
      }
    } else if (it.key() == "kappa" || it.key() == "x") {
      GridSpec& g = it.key() == "kappa" ? cfg.kappa : cfg.x;
      try {
        g.min = v.at("min").get<double>();
        g.max = v.at("max").get<double>();
        g.count = v.at("count").get<std::size_t>();
        g.spacing = v.at("spacing").get<std::string>();
      } catch (const nlohmann::json::exception&) {
        throw ConfigError(where + ": malformed grid");
      }
    } else if (it.key() == "outputs") {
      std::string joined;
      for (const auto& o : v) joined += (joined.empty() ? "" : ",") + o.get<std::string>();
      apply(cfg, "outputs", joined, where, saw_u, saw_cd);
    } else if (it.key() == "alpha" || it.key() == "wavesymbol.kappa") {
      if (!v.is_number()) throw ConfigError(where + ": expected a number");
      std::ostringstream os;
      os.precision(17);
      os << v.get<double>();
      apply(cfg, it.key(), os.str(), where, saw_u, saw_cd);
    } else if (it.key() == "seed") {
      cfg.seed = v.get<unsigned long long>();
    } else if (it.key() == "format") {
      apply(cfg, "format", v.get<std::string>(), where, saw_u, saw_cd);
    } else {
      throw ConfigError(where + ": unknown key");
    }
  }
  finish(cfg, saw_u, saw_cd);
  return cfg;
}

}  // namespace

std::vector<double> GridSpec::nodes() const
{
  if (spacing == "log") return log_grid(min, max, count);
  if (spacing == "linear") return linear_grid(min, max, count);
  std::vector<double> t = tanh_grid(1.0, count);
  for (double& v : t) v = 0.5 * (min + max) + 0.5 * (max - min) * v;
  return t;
}

ExtensionPair RunConfig::pair() const
{
  if (unitary_form) return from_unitary(UnitaryParam(u));
  return ExtensionPair(c, d);
}

void validate(const RunConfig& cfg)
{
  try {
    Flux f(cfg.alpha);
  } catch (const DomainError& e) {
    throw ConfigError(std::string("alpha: ") + e.what());
  }
  auto check_grid = [](const GridSpec& g, const std::string& name, bool positive, const std::set<std::string>& sp) {
    if (!sp.count(g.spacing)) throw ConfigError(name + ".spacing: unsupported spacing '" + g.spacing + "'");
    if (g.count < 1) throw ConfigError(name + ".count: grid must be nonempty");
    if (!(g.min <= g.max)) throw ConfigError(name + ": min must not exceed max");
    if (positive && !(g.min > 0.0)) throw ConfigError(name + ".min: must be positive");
  };
  check_grid(cfg.kappa, "kappa", true, {"log", "linear"});
  check_grid(cfg.x, "x", false, {"linear", "tanh"});
  if (std::max(std::abs(cfg.x.min), std::abs(cfg.x.max)) > ChannelSymbol::envelope)
    throw ConfigError("x: grid exceeds |x| <= 1e5");
  if (!(cfg.wave_kappa > 0.0)) throw ConfigError("wavesymbol.kappa: must be positive");
  try {
    cfg.pair();
  } catch (const AdmissibilityError& e) {
    throw ConfigError(std::string("extension: ") + e.what());
  }
}

RunConfig parse_config(const std::string& text)
{
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return parse_json(text);
  RunConfig cfg;
  bool saw_u = false, saw_cd = false;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    const std::string where = "line " + std::to_string(lineno);
    if (eq == std::string::npos) throw ConfigError(where + ": expected 'key = value'");
    const std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
    apply(cfg, key, value, where + ": " + key, saw_u, saw_cd);
  }
  finish(cfg, saw_u, saw_cd);
  return cfg;
}

}  // namespace abflux::cli
