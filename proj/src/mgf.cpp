#include "mixedmoore/mgf.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace mixedmoore {

std::string to_mgf(const MixedGraph& g, std::span<const std::string> comments) {
  std::string out = "mgf 1\nn " + std::to_string(g.order()) + "\n";
  for (const auto& c : comments) {
    out += "# ";
    out += c;
    out += '\n';
  }
  for (const auto& [u, v] : g.edges()) {
    out += "e " + std::to_string(u) + " " + std::to_string(v) + "\n";
  }
  for (const auto& [u, v] : g.arcs()) {
    out += "a " + std::to_string(u) + " " + std::to_string(v) + "\n";
  }
  return out;
}

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t space = line.find(' ', start);
    fields.push_back(line.substr(start, space - start));
    if (space == std::string_view::npos) break;
    start = space + 1;
  }
  return fields;
}

int parse_int(std::string_view field, int line) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
    throw MgfFormatError(line, "expected an integer, got '" + std::string(field) + "'");
  }
  return value;
}

}  // namespace

MixedGraph parse_mgf(std::string_view text, Strictness strictness) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    const std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }

  if (lines.empty() || lines[0] != "mgf 1") throw MgfFormatError(1, "expected header 'mgf 1'");
  if (lines.size() < 2) throw MgfFormatError(2, "missing 'n <N>' line");
  const auto size_fields = split_fields(lines[1]);
  if (size_fields.size() != 2 || size_fields[0] != "n") {
    throw MgfFormatError(2, "expected 'n <N>'");
  }
  const int n = parse_int(size_fields[1], 2);
  if (n < 0) throw MgfFormatError(2, "negative vertex count");

  std::vector<VertexPair> edges;
  std::vector<VertexPair> arcs;
  for (std::size_t i = 2; i < lines.size(); ++i) {
    const int lineno = static_cast<int>(i) + 1;
    const std::string_view line = lines[i];
    if (!line.empty() && line.front() == '#') continue;
    const auto fields = split_fields(line);
    if (fields.size() != 3) throw MgfFormatError(lineno, "expected '<e|a> <u> <v>'");
    const VertexPair p{parse_int(fields[1], lineno), parse_int(fields[2], lineno)};
    if (fields[0] == "e") {
      edges.push_back(p);
    } else if (fields[0] == "a") {
      arcs.push_back(p);
    } else {
      throw MgfFormatError(lineno, "unknown record '" + std::string(fields[0]) + "'");
    }
  }
  return MixedGraph::build(n, std::move(edges), std::move(arcs), strictness);
}

MixedGraph read_mgf(const std::filesystem::path& path, Strictness strictness) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_mgf(buffer.str(), strictness);
}

void write_mgf(const std::filesystem::path& path, const MixedGraph& g,
               std::span<const std::string> comments) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << to_mgf(g, comments);
}

}  // namespace mixedmoore
