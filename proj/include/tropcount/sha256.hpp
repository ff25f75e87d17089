#pragma once

#include <cstdint>
#include <string>

namespace tropcount {

// Hex digest of the input bytes.
std::string sha256_hex(const std::string& data);

}  // namespace tropcount
