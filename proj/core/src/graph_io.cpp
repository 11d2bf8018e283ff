#include "pseudoloc/graph_io.hpp"

#include <charconv>
#include <sstream>
#include <vector>

namespace pseudoloc {
namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  return s;
}

[[noreturn]] void malformed(const std::string& why) { throw Error(ErrorKind::MalformedGraph6, why); }

}  // namespace

Graph parse_graph6(std::string_view text) {
  text = trim(text);
  if (text.starts_with(kGraph6Header)) text.remove_prefix(kGraph6Header.size());
  if (text.empty()) malformed("empty input");
  for (char c : text) {
    if (c < 63 || c > 126) malformed("byte outside 63..126");
  }

  std::size_t pos = 0;
  long n = 0;
  if (text[0] != 126) {
    n = text[0] - 63;
    pos = 1;
  } else {
    if (text.size() >= 2 && text[1] == 126) malformed("orders above 258047 are not supported");
    if (text.size() < 4) malformed("truncated order field");
    n = ((text[1] - 63L) << 12) | ((text[2] - 63L) << 6) | (text[3] - 63L);
    pos = 4;
  }
  if (n < 1) malformed("graph must have at least one vertex");
  if (n > kMaxOrder) throw Error(ErrorKind::SizeCapExceeded, "order " + std::to_string(n) + " exceeds cap");

  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - pos != bytes) {
    malformed("expected " + std::to_string(bytes) + " data bytes, got " + std::to_string(text.size() - pos));
  }

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      int byte = text[pos + k / 6] - 63;
      if (byte & (1 << (5 - static_cast<int>(k % 6)))) edges.push_back({i, j});
    }
  }
  for (; k < bytes * 6; ++k) {
    int byte = text[pos + k / 6] - 63;
    if (byte & (1 << (5 - static_cast<int>(k % 6)))) malformed("non-zero padding bits");
  }
  return Graph::from_edge_list(static_cast<int>(n), edges);
}

std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(126);
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  long n = -1;
  std::vector<Edge> edges;
  auto fail = [&](const std::string& why) {
    throw Error(ErrorKind::MalformedEdgeList, "line " + std::to_string(line_no) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string tok; fields >> tok;) tokens.push_back(tok);
    if (tokens.empty()) continue;
    std::vector<long> values;
    for (const auto& tok : tokens) {
      long value = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (ec != std::errc{} || ptr != tok.data() + tok.size()) fail("not an integer: '" + tok + "'");
      values.push_back(value);
    }
    if (n < 0) {
      if (values.size() != 1) fail("first line must hold the vertex count");
      n = values[0];
      if (n < 1) fail("vertex count must be positive");
      if (n > kMaxOrder) throw Error(ErrorKind::SizeCapExceeded, "order " + std::to_string(n) + " exceeds cap");
      continue;
    }
    if (values.size() != 2) fail("expected 'u v'");
    for (long x : values) {
      if (x < 0 || x >= n) {
        throw Error(ErrorKind::VertexOutOfRange, "line " + std::to_string(line_no) + ": vertex " + std::to_string(x));
      }
    }
    edges.push_back({static_cast<Vertex>(values[0]), static_cast<Vertex>(values[1])});
  }
  if (n < 0) throw Error(ErrorKind::MalformedEdgeList, "missing vertex count");
  return Graph::from_edge_list(static_cast<int>(n), edges);
}

std::string format_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + "\n";
  for (const Edge& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

}  // namespace pseudoloc
