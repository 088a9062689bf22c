#include "tavis/io.hpp"

#include <openssl/evp.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

#include "tavis/error.hpp"

namespace tavis {

using nlohmann::json;

namespace {

const std::set<std::string> kTopLevelKeys = {
    "name", "num_qubits", "nbar", "theta", "coupling", "frequency", "frame", "fock_dim",
    "max_dimension", "initial", "attractor_theta", "branch", "time", "observables"};

double get_number(const json& obj, const std::string& key, const std::string& field, double fallback) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_number()) throw ConfigError(field, "expected a number");
  return v.get<double>();
}

long long get_integer(const json& obj, const std::string& key, const std::string& field, long long fallback) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_number_integer()) throw ConfigError(field, "expected an integer");
  return v.get<long long>();
}

std::string get_string(const json& obj, const std::string& key, const std::string& field, const std::string& fallback) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_string()) throw ConfigError(field, "expected a string");
  return v.get<std::string>();
}

cplx get_complex(const json& v, const std::string& field) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
    return {v[0].get<double>(), v[1].get<double>()};
  }
  throw ConfigError(field, "expected a number or a [re, im] pair");
}

Branch parse_branch(const std::string& s, const std::string& field) {
  if (s == "+" || s == "plus") return Branch::plus;
  if (s == "-" || s == "minus") return Branch::minus;
  throw ConfigError(field, "expected '+' or '-'");
}

QubitSpecifier parse_initial(const json& v) {
  if (!v.is_object()) throw ConfigError("initial", "expected an object");
  const std::string kind = get_string(v, "kind", "initial.kind", "");
  if (kind == "configuration") {
    if (!v.contains("label")) throw ConfigError("initial.label", "required for kind 'configuration'");
    return ConfigurationSpec{get_string(v, "label", "initial.label", "")};
  }
  if (kind == "basin") {
    if (!v.contains("a")) throw ConfigError("initial.a", "required for kind 'basin'");
    return BasinSpec{get_complex(v.at("a"), "initial.a")};
  }
  if (kind == "attractor") return AttractorSpec{parse_branch(get_string(v, "branch", "initial.branch", "+"), "initial.branch")};
  if (kind == "dicke") {
    if (!v.contains("k")) throw ConfigError("initial.k", "required for kind 'dicke'");
    return DickeSpec{static_cast<int>(get_integer(v, "k", "initial.k", 0))};
  }
  if (kind == "amplitudes") {
    if (!v.contains("amplitudes") || !v.at("amplitudes").is_array()) {
      throw ConfigError("initial.amplitudes", "expected an array of amplitudes");
    }
    AmplitudesSpec spec;
    for (const auto& a : v.at("amplitudes")) spec.amplitudes.push_back(get_complex(a, "initial.amplitudes"));
    return spec;
  }
  throw ConfigError("initial.kind", "expected one of configuration, basin, attractor, dicke, amplitudes");
}

json complex_json(cplx z) { return json::array({z.real(), z.imag()}); }

}  // namespace

ScenarioConfig parse_config(const json& doc) {
  if (!doc.is_object()) throw ConfigError("<root>", "expected a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (!kTopLevelKeys.count(key)) throw ConfigError(key, "unknown field");
  }
  ScenarioConfig c;
  c.name = get_string(doc, "name", "name", c.name);
  if (c.name.empty() || c.name.find_first_of("/\\") != std::string::npos) {
    throw ConfigError("name", "must be a non-empty file stem");
  }
  if (!doc.contains("num_qubits")) throw ConfigError("num_qubits", "required");
  c.num_qubits = static_cast<int>(get_integer(doc, "num_qubits", "num_qubits", 1));
  if (!doc.contains("nbar")) throw ConfigError("nbar", "required");
  c.nbar = get_number(doc, "nbar", "nbar", c.nbar);
  c.theta = get_number(doc, "theta", "theta", c.theta);
  c.coupling = get_number(doc, "coupling", "coupling", c.coupling);
  c.frequency = get_number(doc, "frequency", "frequency", c.frequency);
  const std::string frame = get_string(doc, "frame", "frame", "interaction");
  if (frame == "interaction") {
    c.frame = Frame::interaction;
  } else if (frame == "lab") {
    c.frame = Frame::lab;
  } else {
    throw ConfigError("frame", "expected 'interaction' or 'lab'");
  }
  if (doc.contains("fock_dim") && !doc.at("fock_dim").is_null()) {
    c.fock_dim = static_cast<int>(get_integer(doc, "fock_dim", "fock_dim", 0));
  }
  const long long cap = get_integer(doc, "max_dimension", "max_dimension", static_cast<long long>(c.max_dimension));
  if (cap < 1) throw ConfigError("max_dimension", "must be positive");
  c.max_dimension = static_cast<std::size_t>(cap);
  if (!doc.contains("initial")) throw ConfigError("initial", "required");
  c.initial = parse_initial(doc.at("initial"));
  if (doc.contains("attractor_theta") && !doc.at("attractor_theta").is_null()) {
    c.attractor_theta = get_number(doc, "attractor_theta", "attractor_theta", 0.0);
  }
  c.branch = parse_branch(get_string(doc, "branch", "branch", "+"), "branch");
  if (doc.contains("time")) {
    const json& t = doc.at("time");
    if (!t.is_object()) throw ConfigError("time", "expected an object");
    for (const auto& [key, value] : t.items()) {
      if (key != "t_max_over_tr" && key != "samples") throw ConfigError("time." + key, "unknown field");
    }
    c.grid.t_max_over_tr = get_number(t, "t_max_over_tr", "time.t_max_over_tr", c.grid.t_max_over_tr);
    c.grid.samples = static_cast<int>(get_integer(t, "samples", "time.samples", c.grid.samples));
  }
  if (doc.contains("observables")) {
    const json& obs = doc.at("observables");
    if (!obs.is_array()) throw ConfigError("observables", "expected an array of names");
    c.observables.clear();
    for (const auto& o : obs) {
      if (!o.is_string()) throw ConfigError("observables", "expected an array of names");
      c.observables.push_back(o.get<std::string>());
    }
  }
  validate(c);
  return c;
}

ScenarioConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("<file>", "cannot open " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("<json>", e.what());
  }
  return parse_config(doc);
}

json to_json(const ScenarioConfig& c) {
  json doc;
  doc["name"] = c.name;
  doc["num_qubits"] = c.num_qubits;
  doc["nbar"] = c.nbar;
  doc["theta"] = c.theta;
  doc["coupling"] = c.coupling;
  doc["frequency"] = c.frequency;
  doc["frame"] = c.frame == Frame::interaction ? "interaction" : "lab";
  doc["fock_dim"] = c.resolved_fock_dim();
  doc["max_dimension"] = c.max_dimension;
  doc["initial"] = std::visit(
      [](const auto& spec) -> json {
        using T = std::decay_t<decltype(spec)>;
        if constexpr (std::is_same_v<T, ConfigurationSpec>) {
          return {{"kind", "configuration"}, {"label", spec.label}};
        } else if constexpr (std::is_same_v<T, BasinSpec>) {
          return {{"kind", "basin"}, {"a", complex_json(spec.a)}};
        } else if constexpr (std::is_same_v<T, AttractorSpec>) {
          return {{"kind", "attractor"}, {"branch", spec.branch == Branch::plus ? "+" : "-"}};
        } else if constexpr (std::is_same_v<T, DickeSpec>) {
          return {{"kind", "dicke"}, {"k", spec.k}};
        } else {
          json amps = json::array();
          for (auto z : spec.amplitudes) amps.push_back(complex_json(z));
          return {{"kind", "amplitudes"}, {"amplitudes", amps}};
        }
      },
      c.initial);
  if (c.attractor_theta) doc["attractor_theta"] = *c.attractor_theta;
  doc["branch"] = c.branch == Branch::plus ? "+" : "-";
  doc["time"] = {{"t_max_over_tr", c.grid.t_max_over_tr}, {"samples", c.grid.samples}};
  doc["observables"] = c.observables;
  return doc;
}

std::string format_number(double value) {
  std::array<char, 64> buf{};
  std::snprintf(buf.data(), buf.size(), "%.16e", value);
  return buf.data();
}

void write_csv(const std::filesystem::path& path, const CsvTable& table) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  for (std::size_t j = 0; j < table.header.size(); ++j) out << (j ? "," : "") << table.header[j];
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? "," : "") << format_number(row[j]);
    out << '\n';
  }
  if (!out) throw Error("failed writing " + path.string());
}

CsvTable read_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  CsvTable table;
  std::string line;
  if (!std::getline(in, line)) throw Error("empty CSV " + path.string());
  {
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) table.header.push_back(cell);
  }
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) row.push_back(std::strtod(cell.c_str(), nullptr));
    if (row.size() != table.header.size()) throw Error("ragged CSV row in " + path.string());
    table.rows.push_back(std::move(row));
  }
  return table;
}

CsvTable to_table(const TimeSeries& series) {
  CsvTable table;
  table.header = {"t", "t_over_tr"};
  table.header.insert(table.header.end(), series.columns.begin(), series.columns.end());
  table.rows.reserve(series.times.size());
  for (std::size_t i = 0; i < series.times.size(); ++i) {
    std::vector<double> row{series.times[i], series.times[i] / series.revival_time};
    row.insert(row.end(), series.rows[i].begin(), series.rows[i].end());
    table.rows.push_back(std::move(row));
  }
  return table;
}

std::string sha256_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr);
  std::array<char, 1 << 16> buf{};
  while (in) {
    in.read(buf.data(), buf.size());
    EVP_DigestUpdate(ctx, buf.data(), static_cast<std::size_t>(in.gcount()));
  }
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  EVP_DigestFinal_ex(ctx, digest.data(), &len);
  EVP_MD_CTX_free(ctx);
  std::ostringstream hex;
  for (unsigned int i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int{digest[i]};
  return hex.str();
}

void add_file(RunManifest& manifest, const std::filesystem::path& path) {
  manifest.files.push_back({path, sha256_file(path)});
}

void write_manifest(const std::filesystem::path& path, const RunManifest& manifest) {
  json doc;
  doc["config"] = manifest.config;
  doc["version"] = manifest.version;
  doc["wall_seconds"] = manifest.wall_seconds;
  doc["files"] = json::array();
  for (const auto& f : manifest.files) doc["files"].push_back({{"path", f.path.string()}, {"sha256", f.sha256}});
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << doc.dump(2) << '\n';
}

RunManifest read_manifest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path.string());
  const json doc = json::parse(in);
  RunManifest m;
  m.config = doc.at("config");
  m.version = doc.at("version").get<std::string>();
  m.wall_seconds = doc.at("wall_seconds").get<double>();
  for (const auto& f : doc.at("files")) m.files.push_back({f.at("path").get<std::string>(), f.at("sha256").get<std::string>()});
  return m;
}

}  // namespace tavis
