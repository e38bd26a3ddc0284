#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>

#include "dfl/parser.hpp"
#include "dfl/theory.hpp"

namespace dfl::testing {

inline std::string fixturePath(std::string_view name) {
  return std::string(DFL_FIXTURE_DIR) + "/" + std::string(name);
}

inline std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline Theory loadFixture(std::string_view name) { return parseTheoryText(readFile(fixturePath(name))); }

/// A single ground literal written in theory syntax, e.g. "~p(a)".
inline Literal lit(std::string_view text) {
  return parseTheoryText(std::string(text) + ".").facts.at(0);
}

}  // namespace dfl::testing
