/**
 * entropy-lab
 *
 * This code is released under the
 * Apache License Version 2.0 http://www.apache.org/licenses/.
 */
#include "entlab/io.hpp"

#include <charconv>
#include <fstream>
#include <json.hpp>
#include <sstream>

namespace entlab {

using nlohmann::json;

std::string format_double(double v) {
  if (std::isinf(v)) return v > 0 ? "+inf" : "-inf";
  if (std::isnan(v)) return "nan";
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string format_extended(ExtendedValue v) { return format_double(v.value()); }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw parse_error("cannot open file for writing: " + path);
  out << content;
}

namespace {

json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw parse_error("malformed JSON");
  return j;
}

std::vector<double> json_vector(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array()) throw parse_error(std::string("missing array: ") + key);
  std::vector<double> v;
  for (const auto& x : j[key]) {
    if (!x.is_number()) throw parse_error(std::string("non-numeric entry in ") + key);
    v.push_back(x.get<double>());
  }
  return v;
}

std::vector<std::vector<double>> json_matrix(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array()) throw parse_error(std::string("missing matrix: ") + key);
  std::vector<std::vector<double>> m;
  for (const auto& row : j[key]) {
    std::vector<double> r;
    for (const auto& x : row) {
      if (!x.is_number()) throw parse_error(std::string("non-numeric entry in ") + key);
      r.push_back(x.get<double>());
    }
    m.push_back(std::move(r));
  }
  return m;
}

std::vector<double> split_csv_row(const std::string& line) {
  std::vector<double> v;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    const char* b = cell.c_str();
    char* e = nullptr;
    const double x = std::strtod(b, &e);
    while (e && *e == ' ') ++e;
    if (e == b || (e && *e != '\0')) throw parse_error("malformed CSV number: '" + cell + "'");
    v.push_back(x);
  }
  if (v.empty()) throw parse_error("empty CSV row");
  return v;
}

std::vector<std::string> nonempty_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    size_t b = line.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    if (line[b] == '#') continue;
    lines.push_back(line.substr(b));
  }
  return lines;
}

template <typename Fn>
auto rethrow_as_parse(Fn&& fn) {
  try {
    return fn();
  } catch (const std::domain_error& e) {
    throw parse_error(std::string("invalid payload: ") + e.what());
  } catch (const shape_error& e) {
    throw parse_error(std::string("invalid payload: ") + e.what());
  }
}

}  // namespace

Distribution parse_distribution(const std::string& text) {
  const size_t b = text.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) throw parse_error("empty input");
  if (text[b] == '{') {
    const json j = parse_json(text);
    const auto probs = json_vector(j, "probs");
    if (j.contains("alphabet") && j["alphabet"].get<size_t>() != probs.size())
      throw parse_error("alphabet size does not match the probs array");
    return rethrow_as_parse([&] { return Distribution(probs); });
  }
  const auto lines = nonempty_lines(text);
  if (lines.size() != 1) throw parse_error("expected a single CSV row for a distribution");
  return rethrow_as_parse([&] { return Distribution(split_csv_row(lines[0])); });
}

JointDistribution parse_joint(const std::string& text) {
  const size_t b = text.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) throw parse_error("empty input");
  if (text[b] == '{') {
    const json j = parse_json(text);
    const auto cells = json_matrix(j, "joint");
    if (j.contains("alphabet") && j["alphabet"].get<size_t>() != cells.size())
      throw parse_error("alphabet size does not match the joint matrix");
    return rethrow_as_parse([&] { return JointDistribution(cells); });
  }
  std::vector<std::vector<double>> cells;
  for (const auto& line : nonempty_lines(text)) cells.push_back(split_csv_row(line));
  return rethrow_as_parse([&] { return JointDistribution(cells); });
}

HermitianOperator parse_operator(const std::string& text) {
  const json j = parse_json(text);
  if (!j.contains("dim")) throw parse_error("operator JSON requires a dim field");
  const int d = j["dim"].get<int>();
  const auto re = json_matrix(j, "re");
  std::vector<std::vector<double>> im;
  if (j.contains("im"))
    im = json_matrix(j, "im");
  else
    im.assign(static_cast<size_t>(d), std::vector<double>(static_cast<size_t>(d), 0.0));
  if (static_cast<int>(re.size()) != d || static_cast<int>(im.size()) != d)
    throw parse_error("operator matrices do not match dim");
  Matrix m(d, d);
  for (int r = 0; r < d; ++r) {
    if (static_cast<int>(re[static_cast<size_t>(r)].size()) != d ||
        static_cast<int>(im[static_cast<size_t>(r)].size()) != d)
      throw parse_error("operator matrices must be square");
    for (int c = 0; c < d; ++c)
      m(r, c) = Complex(re[static_cast<size_t>(r)][static_cast<size_t>(c)],
                        im[static_cast<size_t>(r)][static_cast<size_t>(c)]);
  }
  return rethrow_as_parse([&] { return HermitianOperator(std::move(m)); });
}

LoadedInput parse_input(const std::string& text) {
  const size_t b = text.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) throw parse_error("empty input");
  if (text[b] == '{') {
    const json j = parse_json(text);
    if (j.contains("re") || j.contains("dim")) return parse_operator(text);
    if (j.contains("joint")) return parse_joint(text);
    if (j.contains("probs")) return parse_distribution(text);
    throw parse_error("JSON object carries none of probs/joint/re");
  }
  const auto lines = nonempty_lines(text);
  if (lines.size() > 1) return parse_joint(text);
  return parse_distribution(text);
}

LoadedInput load_input(const std::string& path) { return parse_input(read_file(path)); }

std::string distribution_to_json(const Distribution& p) {
  json j;
  j["alphabet"] = p.size();
  json arr = json::array();
  for (double x : p.probs()) arr.push_back(x);
  j["probs"] = std::move(arr);
  return j.dump();
}

std::string distribution_to_csv(const Distribution& p) {
  std::string s;
  for (int i = 0; i < p.size(); ++i) {
    if (i) s += ',';
    s += format_double(p[i]);
  }
  s += '\n';
  return s;
}

std::string joint_to_json(const JointDistribution& j) {
  json out;
  out["alphabet"] = j.size();
  json rows = json::array();
  for (const auto& row : j.cells()) {
    json r = json::array();
    for (double x : row) r.push_back(x);
    rows.push_back(std::move(r));
  }
  out["joint"] = std::move(rows);
  return out.dump();
}

std::string operator_to_json(const HermitianOperator& x) {
  json out;
  out["dim"] = x.dim();
  json re = json::array(), im = json::array();
  for (int r = 0; r < x.dim(); ++r) {
    json rr = json::array(), ri = json::array();
    for (int c = 0; c < x.dim(); ++c) {
      rr.push_back(x.matrix()(r, c).real());
      ri.push_back(x.matrix()(r, c).imag());
    }
    re.push_back(std::move(rr));
    im.push_back(std::move(ri));
  }
  out["re"] = std::move(re);
  out["im"] = std::move(im);
  return out.dump();
}

SamplerConfig parse_config(const std::string& text, bool* seed_present) {
  SamplerConfig cfg;
  if (seed_present) *seed_present = false;
  for (const auto& line : nonempty_lines(text)) {
    const size_t eq = line.find('=');
    if (eq == std::string::npos) throw parse_error("config line without '=': " + line);
    std::string key = line.substr(0, eq);
    std::string value = line.substr(eq + 1);
    const auto strip = [](std::string& s) {
      const size_t b = s.find_first_not_of(" \t");
      const size_t e = s.find_last_not_of(" \t");
      s = b == std::string::npos ? "" : s.substr(b, e - b + 1);
    };
    strip(key);
    strip(value);
    if (value.empty()) throw parse_error("config key without value: " + key);
    try {
      if (key == "seed") {
        cfg.seed = std::stoull(value);
        if (seed_present) *seed_present = true;
      } else if (key == "dims") {
        cfg.dims.clear();
        for (double x : split_csv_row(value)) cfg.dims.push_back(static_cast<int>(x));
      } else if (key == "alphas") {
        cfg.alphas = split_csv_row(value);
      } else if (key == "trials") {
        cfg.trials_per_cell = std::stoi(value);
      } else if (key == "tolerance") {
        cfg.tolerance = std::stod(value);
      } else {
        throw parse_error("unknown config key: " + key);
      }
    } catch (const std::invalid_argument&) {
      throw parse_error("malformed config value for " + key + ": " + value);
    } catch (const std::out_of_range&) {
      throw parse_error("config value out of range for " + key + ": " + value);
    }
  }
  try {
    cfg.validate();
  } catch (const std::domain_error& e) {
    throw parse_error(std::string("invalid config: ") + e.what());
  }
  return cfg;
}

SamplerConfig load_config(const std::string& path, bool* seed_present) {
  return parse_config(read_file(path), seed_present);
}

std::string scan_table_to_csv(const ScanTable& t) {
  std::string s;
  for (size_t i = 0; i < t.columns.size(); ++i) {
    if (i) s += ',';
    s += t.columns[i];
  }
  s += '\n';
  for (const auto& row : t.rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) s += ',';
      s += format_double(row[i]);
    }
    s += '\n';
  }
  return s;
}

std::string violations_to_csv(const std::vector<ViolationRecord>& v) {
  std::string s = "property,inputs,measured,bound,slack\n";
  for (const auto& r : v) {
    std::string inputs = r.inputs;
    for (char& c : inputs)
      if (c == ',') c = ';';
    s += r.property_id + "," + inputs + "," + format_double(r.measured) + "," +
         format_double(r.bound) + "," + format_double(r.slack) + "\n";
  }
  return s;
}

std::string summary_to_csv(const SuiteSummary& s) {
  std::string out = "property,checks,violations,min_slack\n";
  for (const auto& r : s.results)
    out += r.id + "," + std::to_string(r.checks) + "," + std::to_string(r.violations) + "," +
           format_double(r.min_slack) + "\n";
  return out;
}

std::string summary_to_json(const SuiteSummary& s) {
  json j;
  j["seed"] = s.config.seed;
  j["dims"] = s.config.dims;
  j["alphas"] = s.config.alphas;
  j["trials"] = s.config.trials_per_cell;
  j["tolerance"] = s.config.tolerance;
  j["mutation"] = mutation_name(s.mutation);
  json props = json::array();
  for (const auto& r : s.results) {
    json p;
    p["id"] = r.id;
    p["checks"] = r.checks;
    p["violations"] = r.violations;
    p["min_slack"] = r.min_slack;
    props.push_back(std::move(p));
  }
  j["properties"] = std::move(props);
  json viol = json::array();
  for (const auto& v : s.violations) {
    json x;
    x["property"] = v.property_id;
    x["inputs"] = v.inputs;
    x["measured"] = v.measured;
    x["bound"] = v.bound;
    x["slack"] = v.slack;
    viol.push_back(std::move(x));
  }
  j["violations"] = std::move(viol);
  return j.dump(2);
}

}  // namespace entlab
