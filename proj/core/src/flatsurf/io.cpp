#include "rigidity/flatsurf/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "rigidity/format.hpp"

namespace rigidity::flatsurf {

Origami parse_origami(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("origami JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("h") || !doc.contains("v")) {
    throw ParseError("origami JSON needs keys \"n\", \"h\" and \"v\"");
  }
  try {
    const int n = doc.at("n").get<int>();
    const auto h = doc.at("h").get<std::vector<int>>();
    const auto v = doc.at("v").get<std::vector<int>>();
    return build_origami(n, h, v);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("origami JSON: ") + e.what());
  }
}

Origami read_origami(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open origami file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_origami(buffer.str());
}

std::string origami_to_json(const Origami& o) {
  nlohmann::json doc;
  doc["n"] = o.squares();
  std::vector<int> h(o.squares()), v(o.squares());
  for (int i = 0; i < o.squares(); ++i) {
    h[i] = o.right(i) + 1;
    v[i] = o.up(i) + 1;
  }
  doc["h"] = h;
  doc["v"] = v;
  return doc.dump();
}

std::string profile_csv(const std::vector<ProfileSample>& samples) {
  std::string out = "theta,value\n";
  for (const auto& s : samples) {
    out += format_real(s.theta);
    out += ',';
    out += format_real(s.value);
    out += '\n';
  }
  return out;
}

}  // namespace rigidity::flatsurf
