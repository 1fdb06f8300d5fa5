#include "fockbound/state_file.hpp"

#include <fstream>
#include <sstream>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "fockbound/error.hpp"

namespace fockbound {
namespace {

std::string number(double x) {
  if (x == 0.0) x = 0.0;  // drop the sign of -0
  return fmt::format("{:.17g}", x);
}

std::string quoted(const std::string& s) { return nlohmann::json(s).dump(); }

double as_double(const nlohmann::json& j, const char* what) {
  if (!j.is_number()) throw ParseError(fmt::format("{} must be a number", what), 0);
  return j.get<double>();
}

}  // namespace

StateFile make_state_file(const FockState& state, std::optional<std::string> family,
                          std::vector<std::string> warnings) {
  StateFile f;
  f.amplitudes.assign(state.amplitudes().begin(), state.amplitudes().end());
  f.family = std::move(family);
  f.warnings = std::move(warnings);
  return f;
}

FockState to_state(const StateFile& file) { return make_state(file.amplitudes); }

std::string serialize(const StateFile& file) {
  std::string out = fmt::format("{{\n  \"version\": {},\n  \"dim\": {},\n  \"amplitudes\": [",
                                file.version, file.dim());
  for (std::size_t n = 0; n < file.amplitudes.size(); ++n) {
    out += fmt::format("{}\n    [{}, {}]", n == 0 ? "" : ",", number(file.amplitudes[n].real()),
                       number(file.amplitudes[n].imag()));
  }
  out += file.amplitudes.empty() ? "]" : "\n  ]";
  if (file.family || !file.warnings.empty()) {
    out += ",\n  \"metadata\": {";
    bool first = true;
    if (file.family) {
      out += fmt::format("\n    \"family\": {}", quoted(*file.family));
      first = false;
    }
    out += fmt::format("{}\n    \"warnings\": [", first ? "" : ",");
    for (std::size_t i = 0; i < file.warnings.size(); ++i) {
      out += fmt::format("{}{}", i == 0 ? "" : ", ", quoted(file.warnings[i]));
    }
    out += "]\n  }";
  }
  out += "\n}\n";
  return out;
}

StateFile parse_state_file(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(fmt::format("malformed state file: {}", e.what()), e.byte);
  }
  if (!j.is_object()) throw ParseError("state file must be a JSON object", 0);
  for (const char* key : {"version", "dim", "amplitudes"}) {
    if (!j.contains(key)) throw ParseError(fmt::format("state file lacks \"{}\"", key), 0);
  }
  StateFile f;
  if (!j["version"].is_number_integer() || j["version"].get<int>() != 1) {
    throw ParseError("unsupported state file version", 0);
  }
  if (!j["dim"].is_number_unsigned()) throw ParseError("\"dim\" must be a positive integer", 0);
  const auto dim = j["dim"].get<std::size_t>();
  const auto& amps = j["amplitudes"];
  if (!amps.is_array() || amps.size() != dim) {
    throw ParseError(fmt::format("\"amplitudes\" must hold dim = {} entries", dim), 0);
  }
  for (const auto& pair : amps) {
    if (!pair.is_array() || pair.size() != 2) throw ParseError("amplitude entries must be [re, im]", 0);
    f.amplitudes.emplace_back(as_double(pair[0], "re"), as_double(pair[1], "im"));
  }
  if (j.contains("metadata")) {
    const auto& meta = j["metadata"];
    if (!meta.is_object()) throw ParseError("\"metadata\" must be an object", 0);
    if (meta.contains("family")) {
      if (!meta["family"].is_string()) throw ParseError("\"family\" must be a string", 0);
      f.family = meta["family"].get<std::string>();
    }
    if (meta.contains("warnings")) {
      if (!meta["warnings"].is_array()) throw ParseError("\"warnings\" must be an array", 0);
      for (const auto& w : meta["warnings"]) {
        if (!w.is_string()) throw ParseError("warnings must be strings", 0);
        f.warnings.push_back(w.get<std::string>());
      }
    }
  }
  return f;
}

StateFile read_state_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidArgument, fmt::format("cannot open '{}'", path));
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_state_file(buf.str());
}

void write_state_file(const std::string& path, const StateFile& file) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidArgument, fmt::format("cannot write '{}'", path));
  out << serialize(file);
}

}  // namespace fockbound
