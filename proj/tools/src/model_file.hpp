#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "mrig/gstz.hpp"

namespace mrig::cli {

// A model file is a JSON object
//
//   {"n": 3, "w": [[0, 1, 1.0], [1, 2, 0.5]], "a": [1, 1, 1], "b": [0, 0, 0]}
//
// with 0-based upper-triangle edges (i < j).  Other keys are ignored.
class ModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

GstzParams parse_model(std::string_view text);
GstzParams load_model(const std::filesystem::path& path);
std::string model_json(const GstzParams& p);

}  // namespace mrig::cli
