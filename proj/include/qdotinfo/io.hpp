#pragma once

#include <string>

#include "qdotinfo/params.hpp"

namespace qdotinfo {

// Strict JSON codec for SystemParams: a flat object with exactly the 13
// documented keys, all numbers. Unknown keys, missing keys and non-numeric
// values are std::invalid_argument errors.
SystemParams params_from_json(const std::string& text);
std::string params_to_json(const SystemParams& params);

// Reads and decodes a parameter file; throws std::runtime_error if the file
// cannot be read.
SystemParams load_params_file(const std::string& path);

}  // namespace qdotinfo
