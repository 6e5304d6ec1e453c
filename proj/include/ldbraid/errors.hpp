#pragma once

#include <stdexcept>
#include <string>

namespace ldbraid {

// Resource exhaustion: a free word outgrew the configured syllable cap, or a
// syllable exponent left the fixed-width range. Always distinct from a
// mathematical "false".
struct capacity_error : std::runtime_error {
  explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ldbraid
