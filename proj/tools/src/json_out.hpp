#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mrig/matrix.hpp"

namespace mrig::cli {

// Numbers are written with 17 significant digits; non-finite values as null.
std::string json_number(double v);
std::string json_array(std::span<const double> v);
std::string json_matrix(const Matrix& m);
std::string json_string(std::string_view s);

// Insertion-ordered object of preformatted JSON values.
class JsonObject {
 public:
  JsonObject& raw(std::string_view key, std::string value);
  JsonObject& number(std::string_view key, double v) { return raw(key, json_number(v)); }
  JsonObject& boolean(std::string_view key, bool v) { return raw(key, v ? "true" : "false"); }
  JsonObject& array(std::string_view key, std::span<const double> v) { return raw(key, json_array(v)); }
  std::string str() const;

 private:
  std::vector<std::pair<std::string, std::string>> fields_;
};

}  // namespace mrig::cli
