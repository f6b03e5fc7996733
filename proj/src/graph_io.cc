#include "qwalk/graph_io.h"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace qwalk {
namespace {

constexpr int kBias = 63;
constexpr std::string_view kGraph6Header = ">>graph6<<";

std::string_view TrimLineEnd(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' ||
                        s.back() == '\n')) {
    s.remove_suffix(1);
  }
  return s;
}

bool IsSkippable(std::string_view line) {
  line = Trim(line);
  return line.empty() || line.front() == '#';
}

// Splits on whitespace and parses every token as a non-negative integer.
// Returns false if any token is not an integer.
bool ParseIntegers(std::string_view line, std::vector<long>& out) {
  out.clear();
  size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    if (pos >= line.size()) break;
    size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t') ++end;
    long value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + pos, line.data() + end, value);
    if (ec != std::errc() || ptr != line.data() + end) return false;
    out.push_back(value);
    pos = end;
  }
  return true;
}

void AppendSize(std::string& out, long n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }
  } else {
    out.append("~~");
    for (int shift = 30; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }
  }
}

// Collects edge-list lines for one graph and validates each as it arrives.
class EdgeListBuilder {
 public:
  explicit EdgeListBuilder(long n, long line) : n_(n) {
    if (n < 1) throw ParseError("vertex count must be at least 1", -1, line);
    if (n > (1L << 24)) throw ParseError("vertex count is too large", -1, line);
  }

  void Add(long i, long j, long line) {
    if (i >= n_ || j >= n_ || i < 0 || j < 0) {
      throw ParseError("vertex index out of range (n = " + std::to_string(n_) +
                           ")",
                       -1, line);
    }
    if (i == j) {
      throw ParseError("self-loop at vertex " + std::to_string(i), -1, line);
    }
    edges_.emplace_back(static_cast<int>(i), static_cast<int>(j));
  }

  Graph Build() const { return Graph(static_cast<int>(n_), edges_); }

 private:
  long n_;
  std::vector<Edge> edges_;
};

}  // namespace

ParseError::ParseError(const std::string& what, long offset, long line)
    : std::runtime_error(what), offset_(offset), line_(line) {}

Graph ParseGraph6(std::string_view record) {
  record = TrimLineEnd(record);
  size_t pos = 0;
  if (record.starts_with(kGraph6Header)) pos = kGraph6Header.size();
  if (pos >= record.size()) throw ParseError("empty graph6 record", pos);
  if (record[pos] == ':') {
    throw ParseError("sparse6 records are not supported; convert to graph6",
                     pos);
  }
  if (record[pos] == '&') {
    throw ParseError("digraph6 records are not supported", pos);
  }
  for (size_t k = pos; k < record.size(); ++k) {
    const auto c = static_cast<unsigned char>(record[k]);
    if (c < 63 || c > 126) {
      throw ParseError("byte value " + std::to_string(c) +
                           " outside the graph6 range 63..126",
                       static_cast<long>(k));
    }
  }

  // Length header.
  long n = 0;
  auto read_digits = [&](int count) {
    if (pos + count > record.size()) {
      throw ParseError("truncated length header", static_cast<long>(record.size()));
    }
    long v = 0;
    for (int k = 0; k < count; ++k) v = (v << 6) | (record[pos++] - kBias);
    return v;
  };
  if (record[pos] != '~') {
    n = record[pos++] - kBias;
  } else if (pos + 1 < record.size() && record[pos + 1] == '~') {
    pos += 2;
    n = read_digits(6);
  } else {
    pos += 1;
    n = read_digits(3);
    if (n <= 62) {
      throw ParseError("non-canonical length header", static_cast<long>(pos - 4));
    }
  }
  if (n < 1) throw ParseError("graph6 record encodes zero vertices", pos - 1);

  const unsigned long long bits =
      static_cast<unsigned long long>(n) * (n - 1) / 2;
  const unsigned long long need = (bits + 5) / 6;
  const size_t have = record.size() - pos;
  if (have < need) {
    throw ParseError("truncated bit payload: expected " + std::to_string(need) +
                         " bytes, found " + std::to_string(have),
                     static_cast<long>(record.size()));
  }
  if (have > need) {
    throw ParseError("unexpected trailing bytes after payload",
                     static_cast<long>(pos + need));
  }

  std::vector<Edge> edges;
  unsigned long long k = 0;
  for (long j = 1; j < n; ++j) {
    for (long i = 0; i < j; ++i, ++k) {
      const int byte = record[pos + k / 6] - kBias;
      if ((byte >> (5 - k % 6)) & 1) {
        edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  if (k % 6 != 0) {
    const int last = record[pos + need - 1] - kBias;
    if (last & ((1 << (6 - k % 6)) - 1)) {
      throw ParseError("non-zero padding bits",
                       static_cast<long>(pos + need - 1));
    }
  }
  return Graph(static_cast<int>(n), edges);
}

std::string EncodeGraph6(const Graph& g) {
  const long n = g.num_vertices();
  std::string out;
  AppendSize(out, n);
  int acc = 0;
  int filled = 0;
  for (long j = 1; j < n; ++j) {
    for (long i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(static_cast<int>(i), static_cast<int>(j)) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

Graph ParseEdgeList(std::string_view text) {
  std::vector<long> tokens;
  std::optional<EdgeListBuilder> builder;
  long line_no = 0;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    if (IsSkippable(line)) continue;
    if (!ParseIntegers(Trim(line), tokens)) {
      throw ParseError("expected integers", -1, line_no);
    }
    if (!builder) {
      if (tokens.size() != 1) {
        throw ParseError("first line must hold only the vertex count", -1, line_no);
      }
      builder.emplace(tokens[0], line_no);
    } else {
      if (tokens.size() != 2) {
        throw ParseError("edge lines must hold exactly two vertex indices", -1,
                         line_no);
      }
      builder->Add(tokens[0], tokens[1], line_no);
    }
    if (end == text.size()) break;
  }
  if (!builder) throw ParseError("missing vertex count", -1, line_no);
  return builder->Build();
}

std::string EncodeEdgeList(const Graph& g) {
  std::ostringstream os;
  os << g.num_vertices() << '\n';
  for (const auto& [i, j] : g.edges()) os << i << ' ' << j << '\n';
  return os.str();
}

GraphFamily LoadFamily(std::istream& in, GraphFormat format, std::string source) {
  GraphFamily family;
  family.source = std::move(source);
  std::string line;
  long line_no = 0;
  if (format == GraphFormat::kGraph6) {
    while (std::getline(in, line)) {
      ++line_no;
      if (Trim(line).empty()) continue;
      try {
        family.members.push_back(ParseGraph6(Trim(line)));
      } catch (const ParseError& e) {
        throw ParseError("line " + std::to_string(line_no) + ": " + e.what(),
                         e.offset(), line_no);
      }
    }
    return family;
  }

  std::vector<long> tokens;
  std::optional<EdgeListBuilder> builder;
  while (std::getline(in, line)) {
    ++line_no;
    if (IsSkippable(line)) continue;
    try {
      if (!ParseIntegers(Trim(line), tokens)) {
        throw ParseError("expected integers", -1, line_no);
      }
      if (tokens.size() == 1) {
        if (builder) family.members.push_back(builder->Build());
        builder.emplace(tokens[0], line_no);
      } else if (tokens.size() == 2 && builder) {
        builder->Add(tokens[0], tokens[1], line_no);
      } else {
        throw ParseError("expected a vertex count or an edge", -1, line_no);
      }
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what(), -1,
                       line_no);
    }
  }
  if (builder) family.members.push_back(builder->Build());
  return family;
}

GraphFamily LoadFamilyFile(const std::string& path, GraphFormat format) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return LoadFamily(in, format, path);
}

GraphFormat DetectFormat(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::string line;
  std::vector<long> tokens;
  while (std::getline(in, line)) {
    if (IsSkippable(line)) continue;
    if (ParseIntegers(Trim(line), tokens) && tokens.size() == 1) {
      return GraphFormat::kEdgeList;
    }
    return GraphFormat::kGraph6;
  }
  return GraphFormat::kGraph6;
}

}  // namespace qwalk
