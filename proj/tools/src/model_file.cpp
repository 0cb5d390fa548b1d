#include "model_file.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "json_out.hpp"
#include "mrig/errors.hpp"

namespace mrig::cli {

namespace {

using nlohmann::json;

Vector read_vector(const json& doc, const char* key, std::size_t n) {
  if (!doc.contains(key)) throw ModelError(std::string("model is missing \"") + key + "\"");
  const json& v = doc.at(key);
  if (!v.is_array()) throw ModelError(std::string("\"") + key + "\" must be an array");
  if (v.size() != n)
    throw ModelError(std::string("\"") + key + "\" has " + std::to_string(v.size()) + " entries, expected " +
                     std::to_string(n));
  Vector out;
  out.reserve(n);
  for (const json& e : v) {
    if (!e.is_number()) throw ModelError(std::string("\"") + key + "\" entries must be numbers");
    out.push_back(e.get<double>());
  }
  return out;
}

std::size_t read_index(const json& e) {
  if (!e.is_number_integer() || e.get<long long>() < 0) throw ModelError("edge indices must be nonnegative integers");
  return static_cast<std::size_t>(e.get<long long>());
}

}  // namespace

GstzParams parse_model(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ModelError(std::string("model is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ModelError("model must be a JSON object");
  if (!doc.contains("n") || !doc.at("n").is_number_integer() || doc.at("n").get<long long>() < 1)
    throw ModelError("\"n\" must be a positive integer");
  const auto n = static_cast<std::size_t>(doc.at("n").get<long long>());

  std::vector<Edge> edges;
  if (doc.contains("w")) {
    const json& w = doc.at("w");
    if (!w.is_array()) throw ModelError("\"w\" must be an array of [i, j, w_ij] triples");
    for (const json& e : w) {
      if (!e.is_array() || e.size() != 3 || !e[2].is_number())
        throw ModelError("\"w\" entries must be [i, j, w_ij] triples");
      edges.push_back({read_index(e[0]), read_index(e[1]), e[2].get<double>()});
    }
  }

  Vector a = read_vector(doc, "a", n);
  Vector b = read_vector(doc, "b", n);
  try {
    return GstzParams(std::move(a), std::move(b), WeightMatrix::build(n, edges));
  } catch (const std::invalid_argument& e) {
    throw ModelError(e.what());
  }
}

GstzParams load_model(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ModelError("cannot open model file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_model(ss.str());
}

std::string model_json(const GstzParams& p) {
  std::string edges = "[";
  bool first = true;
  for (const Edge& e : p.weights().edges()) {
    if (!first) edges += ',';
    first = false;
    edges += '[' + std::to_string(e.i) + ',' + std::to_string(e.j) + ',' + json_number(e.w) + ']';
  }
  edges += ']';
  return JsonObject()
      .raw("n", std::to_string(p.dim()))
      .raw("w", edges)
      .array("a", p.a())
      .array("b", p.b())
      .str();
}

}  // namespace mrig::cli
