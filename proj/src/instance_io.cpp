#include "cgwc/instance_io.hpp"

#include <sstream>
#include <vector>

namespace cgwc {

namespace {

struct Line {
  std::string text;
  int number;
};

std::vector<Line> significant_lines(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream probe(raw);
    std::string token;
    if (probe >> token) lines.push_back({raw, number});
  }
  return lines;
}

Weight parse_weight_token(const std::string& token, int line, bool allow_inf) {
  if (token == "inf") {
    if (!allow_inf) throw ParseError("'inf' not allowed here", line);
    return kInfWeight;
  }
  try {
    size_t pos = 0;
    long long value = std::stoll(token, &pos);
    if (pos != token.size()) throw ParseError("bad integer '" + token + "'", line);
    return value;
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError("bad integer '" + token + "'", line);
  }
}

}  // namespace

Instance parse_instance(const std::string& text) {
  auto lines = significant_lines(text);
  size_t cursor = 0;
  auto next_line = [&]() -> const Line& {
    if (cursor >= lines.size())
      throw ParseError("unexpected end of input", lines.empty() ? 1 : lines.back().number);
    return lines[cursor++];
  };

  const Line& header = next_line();
  std::istringstream head(header.text);
  long long n = -1, m = -1;
  if (!(head >> n >> m) || n < 0 || m < 0) throw ParseError("expected 'n m' header", header.number);
  std::string extra;
  if (head >> extra) throw ParseError("trailing tokens after header", header.number);

  Instance inst;
  inst.graph = WeightedGraph(static_cast<int>(n));
  for (long long i = 0; i < m; ++i) {
    const Line& line = next_line();
    std::istringstream es(line.text);
    long long u, v;
    std::string wtok;
    if (!(es >> u >> v >> wtok)) throw ParseError("expected 'u v w' edge line", line.number);
    if (es >> extra) throw ParseError("trailing tokens after edge", line.number);
    if (u < 0 || u >= n || v < 0 || v >= n) throw ParseError("vertex id out of range", line.number);
    Weight w = parse_weight_token(wtok, line.number, false);
    try {
      inst.graph.add_edge(static_cast<int>(u), static_cast<int>(v), w);
    } catch (const std::invalid_argument& err) {
      throw ParseError(err.what(), line.number);
    }
  }

  const Line& spec_line = next_line();
  std::istringstream ss(spec_line.text);
  std::string keyword;
  ss >> keyword;
  if (keyword != "spec") throw ParseError("expected 'spec' line", spec_line.number);
  std::vector<Weight> entries;
  std::string token;
  while (ss >> token) entries.push_back(parse_weight_token(token, spec_line.number, true));
  for (size_t i = 0; i + 1 < entries.size(); ++i)
    if (entries[i] > entries[i + 1]) throw ParseError("spec entries not sorted", spec_line.number);
  for (Weight e : entries)
    if (e < 1) throw ParseError("spec entries must be positive", spec_line.number);
  inst.spec = ConnSpec(std::move(entries));

  const Line& k_line = next_line();
  std::istringstream ks(k_line.text);
  ks >> keyword;
  if (keyword != "k") throw ParseError("expected 'k' line", k_line.number);
  std::string ktok;
  if (!(ks >> ktok)) throw ParseError("missing budget", k_line.number);
  if (ks >> extra) throw ParseError("trailing tokens after budget", k_line.number);
  inst.k = parse_weight_token(ktok, k_line.number, false);
  if (inst.k < 0) throw ParseError("budget must be nonnegative", k_line.number);

  if (cursor != lines.size())
    throw ParseError("trailing content after instance", lines[cursor].number);
  return inst;
}

std::string render_instance(const Instance& inst) {
  std::ostringstream out;
  out << inst.graph.vertex_count() << ' ' << inst.graph.edge_count() << '\n';
  for (const auto& [e, w] : inst.graph.edges()) out << e.u << ' ' << e.v << ' ' << w << '\n';
  out << "spec";
  for (Weight w : inst.spec.entries()) out << ' ' << weight_to_string(w);
  out << '\n';
  out << "k " << inst.k << '\n';
  return out.str();
}

}  // namespace cgwc
