#include "augecc/graph_io.hpp"

#include <charconv>
#include <sstream>
#include <vector>

namespace augecc {
namespace {

std::string_view trim(std::string_view s) {
  const char *ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos)
    return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::vector<long> parse_ints(std::string_view line, std::size_t lineno) {
  std::vector<long> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t'))
      ++i;
    if (i == line.size())
      break;
    long v = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), v);
    if (ec != std::errc() || (ptr != line.data() + line.size() && *ptr != ' ' && *ptr != '\t'))
      throw GraphError("edge list line " + std::to_string(lineno) +
                       ": expected integers, got '" + std::string(line) + "'");
    out.push_back(v);
    i = static_cast<std::size_t>(ptr - line.data());
  }
  return out;
}

} // namespace

Graph parse_edge_list(std::string_view text) {
  std::optional<int> n;
  std::vector<Edge> edges;
  std::size_t lineno = 0;
  while (!text.empty()) {
    auto nl = text.find('\n');
    std::string_view line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++lineno;
    if (line.empty())
      continue;
    auto nums = parse_ints(line, lineno);
    if (!n) {
      if (nums.size() != 1 || nums[0] < 1 || nums[0] > 1'000'000)
        throw GraphError("edge list header must be a single positive vertex count");
      n = static_cast<int>(nums[0]);
      continue;
    }
    if (nums.size() != 2)
      throw GraphError("edge list line " + std::to_string(lineno) +
                       ": expected two vertex ids");
    for (long x : nums)
      if (x < 0 || x >= *n)
        throw GraphError("edge list line " + std::to_string(lineno) + ": vertex " +
                         std::to_string(x) + " out of range for n=" + std::to_string(*n));
    edges.emplace_back(static_cast<Vertex>(nums[0]), static_cast<Vertex>(nums[1]));
  }
  if (!n)
    throw GraphError("empty edge list");
  return build_graph(*n, edges);
}

std::string write_edge_list(const Graph &g) {
  std::ostringstream os;
  os << g.order() << '\n';
  for (auto [u, v] : g.edges())
    os << u << ' ' << v << '\n';
  return os.str();
}

Graph parse_graph6(std::string_view text) {
  text = trim(text);
  if (text.starts_with(">>graph6<<"))
    text.remove_prefix(10);
  if (text.empty())
    throw GraphError("empty graph6 string");
  for (char c : text)
    if (c < 63 || c > 126)
      throw GraphError("graph6 byte out of range 63..126");
  const int n = text[0] - 63;
  if (n > 62)
    throw GraphError("graph6 header for n > 62 is not supported");
  if (n < 1)
    throw GraphError("graph6 header encodes n=0");
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() != bytes + 1)
    throw GraphError("graph6 body has " + std::to_string(text.size() - 1) +
                     " bytes, expected " + std::to_string(bytes) + " for n=" +
                     std::to_string(n));
  std::vector<Edge> edges;
  std::size_t k = 0;
  auto bit = [&](std::size_t idx) {
    int byte = text[1 + idx / 6] - 63;
    return (byte >> (5 - idx % 6)) & 1;
  };
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i, ++k)
      if (bit(k))
        edges.emplace_back(i, j);
  for (; k < bytes * 6; ++k)
    if (bit(k))
      throw GraphError("graph6 padding bits must be zero");
  return build_graph(n, edges);
}

std::string write_graph6(const Graph &g) {
  const int n = g.order();
  if (n > 62)
    throw GraphError("graph6 writer supports n <= 62");
  std::string out(1, static_cast<char>(n + 63));
  int acc = 0, used = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++used == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = used = 0;
      }
    }
  if (used > 0)
    out.push_back(static_cast<char>((acc << (6 - used)) + 63));
  return out;
}

Graph parse_graph(std::string_view text, GraphFormat format) {
  return format == GraphFormat::EdgeList ? parse_edge_list(text) : parse_graph6(text);
}

std::string write_graph(const Graph &g, GraphFormat format) {
  return format == GraphFormat::EdgeList ? write_edge_list(g) : write_graph6(g) + "\n";
}

} // namespace augecc
