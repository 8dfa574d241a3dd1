#pragma once

// MGF, a line-oriented text format for mixed graphs:
//
//   mgf 1
//   n <N>
//   e <u> <v>      one per edge, u < v, sorted
//   a <u> <v>      one per arc, sorted
//
// Lines beginning with '#' are comments. Fields are separated by a single
// space and every line ends with '\n'. The writer emits comments directly
// after the `n` line.

#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include "mixedmoore/mixed_graph.hpp"

namespace mixedmoore {

class MgfFormatError : public std::runtime_error {
 public:
  MgfFormatError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

std::string to_mgf(const MixedGraph& g, std::span<const std::string> comments = {});

/// Throws MgfFormatError on syntax errors and GraphError when the parsed
/// graph violates a MixedGraph invariant.
MixedGraph parse_mgf(std::string_view text, Strictness strictness = Strictness::Strict);

MixedGraph read_mgf(const std::filesystem::path& path,
                    Strictness strictness = Strictness::Strict);
void write_mgf(const std::filesystem::path& path, const MixedGraph& g,
               std::span<const std::string> comments = {});

}  // namespace mixedmoore
