#include "pminet/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace pminet {

namespace {

void ensure_parent(const std::string& path) {
  const auto parent = std::filesystem::path(path).parent_path();
  if (!parent.empty()) std::filesystem::create_directories(parent);
}

std::vector<std::string> split_line(const std::string& line, char delimiter = ',') {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream stream(line);
  while (std::getline(stream, cell, delimiter)) cells.push_back(cell);
  if (!line.empty() && line.back() == delimiter) cells.emplace_back();
  return cells;
}

std::vector<std::string> file_lines(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty() && line[0] == '#') continue;
    lines.push_back(line);
  }
  return lines;
}

std::string comment_line(const std::string& comment) {
  return comment.empty() ? std::string() : "# " + comment + "\n";
}

double parse_double(const std::string& cell, const std::string& where) {
  double value = 0.0;
  const char* first = cell.data();
  const char* last = cell.data() + cell.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw std::runtime_error("malformed number '" + cell + "' in " + where);
  }
  return value;
}

std::string xml_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

// Little-endian scalar plumbing for the binary caches.
template <typename T>
void put(std::string& buffer, T value) {
  char bytes[sizeof(T)];
  std::memcpy(bytes, &value, sizeof(T));
  buffer.append(bytes, sizeof(T));
}

template <typename T>
T take(const std::string& buffer, size_t& offset) {
  if (offset + sizeof(T) > buffer.size()) {
    throw std::runtime_error("cache file truncated");
  }
  T value;
  std::memcpy(&value, buffer.data() + offset, sizeof(T));
  offset += sizeof(T);
  return value;
}

void put_string(std::string& buffer, const std::string& s) {
  put<std::uint32_t>(buffer, static_cast<std::uint32_t>(s.size()));
  buffer += s;
}

std::string take_string(const std::string& buffer, size_t& offset) {
  const auto size = take<std::uint32_t>(buffer, offset);
  if (offset + size > buffer.size()) throw std::runtime_error("cache file truncated");
  std::string s = buffer.substr(offset, size);
  offset += size;
  return s;
}

void put_doubles(std::string& buffer, const double* data, size_t count) {
  buffer.append(reinterpret_cast<const char*>(data), count * sizeof(double));
}

void take_doubles(const std::string& buffer, size_t& offset, double* data, size_t count) {
  if (offset + count * sizeof(double) > buffer.size()) {
    throw std::runtime_error("cache file truncated");
  }
  std::memcpy(data, buffer.data() + offset, count * sizeof(double));
  offset += count * sizeof(double);
}

}  // namespace

std::string format_double(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t hash = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 1099511628211ULL;
  }
  return hash;
}

std::string digest_hex(const std::string& bytes) {
  char buffer[17];
  std::snprintf(buffer, sizeof(buffer), "%016llx",
                static_cast<unsigned long long>(fnv1a(bytes)));
  return buffer;
}

std::string file_digest(const std::string& path) { return digest_hex(read_file(path)); }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  ensure_parent(path);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << content;
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

namespace {

template <typename Series, typename Cell>
void write_wide_csv(const std::string& path, const std::vector<std::string>& dates,
                    const std::vector<Series>& series, const std::string& comment,
                    Cell cell) {
  std::string out = comment_line(comment);
  out += "date";
  for (const auto& s : series) out += "," + s.ticker;
  out += "\n";
  for (size_t r = 0; r < dates.size(); ++r) {
    out += dates[r];
    for (const auto& s : series) out += "," + cell(s, r);
    out += "\n";
  }
  write_file(path, out);
}

}  // namespace

void write_returns_csv(const std::string& path, const std::vector<std::string>& dates,
                       const std::vector<ReturnSeries>& series,
                       const std::string& comment) {
  for (const auto& s : series) {
    if (static_cast<size_t>(s.returns.size()) != dates.size()) {
      throw std::invalid_argument("write_returns_csv: '" + s.ticker +
                                  "' is misaligned with the date list");
    }
  }
  write_wide_csv(path, dates, series, comment, [](const ReturnSeries& s, size_t r) {
    return format_double(s.returns(static_cast<Eigen::Index>(r)));
  });
}

void write_states_csv(const std::string& path, const std::vector<std::string>& dates,
                      const std::vector<DiscreteSeries>& series,
                      const std::string& comment) {
  for (const auto& s : series) {
    if (static_cast<size_t>(s.states.size()) != dates.size()) {
      throw std::invalid_argument("write_states_csv: '" + s.ticker +
                                  "' is misaligned with the date list");
    }
  }
  write_wide_csv(path, dates, series, comment, [](const DiscreteSeries& s, size_t r) {
    return std::to_string(s.states(static_cast<Eigen::Index>(r)));
  });
}

void write_prices_csv(const std::string& path, const std::vector<std::string>& dates,
                      const std::vector<PriceSeries>& series,
                      const std::string& comment) {
  for (const auto& s : series) {
    if (static_cast<size_t>(s.prices.size()) != dates.size()) {
      throw std::invalid_argument("write_prices_csv: '" + s.ticker +
                                  "' is misaligned with the date list");
    }
  }
  write_wide_csv(path, dates, series, comment, [](const PriceSeries& s, size_t r) {
    return format_double(s.prices(static_cast<Eigen::Index>(r)));
  });
}

void write_sectors_csv(const std::string& path, const SectorMap& sectors,
                       const std::string& comment) {
  std::string out = comment_line(comment);
  out += "ticker,sector\n";
  for (const auto& [ticker, sector] : sectors) {
    out += ticker + "," + sector + "\n";
  }
  write_file(path, out);
}

void write_matrix_csv(const std::string& path, const std::vector<std::string>& tickers,
                      const Eigen::MatrixXd& values, const std::string& comment) {
  const auto n = static_cast<Eigen::Index>(tickers.size());
  if (values.rows() != n || values.cols() != n) {
    throw std::invalid_argument("write_matrix_csv: matrix shape does not match tickers");
  }
  std::string out = comment_line(comment);
  for (size_t i = 0; i < tickers.size(); ++i) {
    if (i) out += ",";
    out += tickers[i];
  }
  out += "\n";
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (j) out += ",";
      out += format_double(values(i, j));
    }
    out += "\n";
  }
  write_file(path, out);
}

Eigen::MatrixXd read_matrix_csv(const std::string& path,
                                std::vector<std::string>* tickers) {
  const auto lines = file_lines(path);
  if (lines.empty()) throw std::runtime_error("'" + path + "' is empty");
  const auto header = split_line(lines[0]);
  const auto n = static_cast<Eigen::Index>(header.size());
  if (static_cast<Eigen::Index>(lines.size()) < n + 1) {
    throw std::runtime_error("'" + path + "': expected " + std::to_string(n) +
                             " matrix rows");
  }
  Eigen::MatrixXd values(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto cells = split_line(lines[static_cast<size_t>(i) + 1]);
    if (static_cast<Eigen::Index>(cells.size()) != n) {
      throw std::runtime_error("'" + path + "': row " + std::to_string(i + 2) +
                               " has " + std::to_string(cells.size()) +
                               " cells, expected " + std::to_string(n));
    }
    for (Eigen::Index j = 0; j < n; ++j) {
      values(i, j) = parse_double(cells[static_cast<size_t>(j)],
                                  "'" + path + "' row " + std::to_string(i + 2));
    }
  }
  if (tickers) *tickers = header;
  return values;
}

void write_mask_csv(const std::string& path, const std::vector<std::string>& tickers,
                    const Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic>& mask,
                    const std::string& comment) {
  const auto n = static_cast<Eigen::Index>(tickers.size());
  if (mask.rows() != n || mask.cols() != n) {
    throw std::invalid_argument("write_mask_csv: mask shape does not match tickers");
  }
  std::string out = comment_line(comment);
  for (size_t i = 0; i < tickers.size(); ++i) {
    if (i) out += ",";
    out += tickers[i];
  }
  out += "\n";
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (j) out += ",";
      out += mask(i, j) ? "1" : "0";
    }
    out += "\n";
  }
  write_file(path, out);
}

void write_edge_list(const std::string& path, const Network& network,
                     const std::string& comment) {
  std::string out = comment_line(comment);
  out += "source,target,weight,directed\n";
  const char* flag = network.directed ? "1" : "0";
  for (const auto& edge : network.edges) {
    out += network.nodes[edge.source].ticker + "," +
           network.nodes[edge.target].ticker + "," + format_double(edge.weight) + "," +
           flag + "\n";
  }
  write_file(path, out);
}

Network read_edge_list(const std::string& path) {
  const auto lines = file_lines(path);
  if (lines.empty()) throw std::runtime_error("'" + path + "' is empty");
  if (split_line(lines[0]) !=
      std::vector<std::string>{"source", "target", "weight", "directed"}) {
    throw std::runtime_error("'" + path + "': expected header "
                             "source,target,weight,directed");
  }
  Network net;
  std::map<std::string, int> index;
  auto node_index = [&](const std::string& ticker) {
    const auto it = index.find(ticker);
    if (it != index.end()) return it->second;
    const int id = net.node_count();
    index.emplace(ticker, id);
    net.nodes.push_back({ticker, ""});
    return id;
  };
  bool directed_seen = false;
  for (size_t r = 1; r < lines.size(); ++r) {
    if (lines[r].empty()) continue;
    const auto cells = split_line(lines[r]);
    if (cells.size() != 4) {
      throw std::runtime_error("'" + path + "': row " + std::to_string(r + 1) +
                               " must be source,target,weight,directed");
    }
    const std::string where = "'" + path + "' row " + std::to_string(r + 1);
    if (cells[3] != "0" && cells[3] != "1") {
      throw std::runtime_error(where + ": directed flag must be 0 or 1");
    }
    const bool directed = cells[3] == "1";
    if (!directed_seen) {
      net.directed = directed;
      directed_seen = true;
    } else if (net.directed != directed) {
      throw std::runtime_error(where + ": directed flag differs between rows");
    }
    NetworkEdge edge;
    edge.source = node_index(cells[0]);
    edge.target = node_index(cells[1]);
    edge.weight = parse_double(cells[2], where);
    net.edges.push_back(edge);
  }
  if (net.edges.empty()) throw std::runtime_error("'" + path + "' holds no edges");
  net.topology = Topology::Unrestricted;
  return net;
}

std::string to_graphml(const Network& network, const CentralityVector* centrality,
                       const std::string& comment) {
  if (centrality) {
    if (centrality->tickers.size() != network.nodes.size()) {
      throw std::invalid_argument("to_graphml: centrality does not match nodes");
    }
    for (size_t i = 0; i < network.nodes.size(); ++i) {
      if (centrality->tickers[i] != network.nodes[i].ticker) {
        throw std::invalid_argument("to_graphml: centrality ticker order differs");
      }
    }
  }
  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n";
  if (!comment.empty()) out += "  <!-- " + comment + " -->\n";
  out += "  <key id=\"sector\" for=\"node\" attr.name=\"sector\" "
         "attr.type=\"string\"/>\n";
  if (centrality) {
    out += "  <key id=\"centrality\" for=\"node\" attr.name=\"centrality\" "
           "attr.type=\"double\"/>\n";
  }
  out += "  <key id=\"weight\" for=\"edge\" attr.name=\"weight\" "
         "attr.type=\"double\"/>\n";
  out += std::string("  <graph id=\"G\" edgedefault=\"") +
         (network.directed ? "directed" : "undirected") + "\">\n";
  for (size_t i = 0; i < network.nodes.size(); ++i) {
    const auto& node = network.nodes[i];
    out += "    <node id=\"" + xml_escape(node.ticker) + "\">\n";
    out += "      <data key=\"sector\">" + xml_escape(node.sector) + "</data>\n";
    if (centrality) {
      out += "      <data key=\"centrality\">" +
             format_double(centrality->values(static_cast<Eigen::Index>(i))) +
             "</data>\n";
    }
    out += "    </node>\n";
  }
  for (const auto& edge : network.edges) {
    out += "    <edge source=\"" + xml_escape(network.nodes[edge.source].ticker) +
           "\" target=\"" + xml_escape(network.nodes[edge.target].ticker) + "\">\n";
    out += "      <data key=\"weight\">" + format_double(edge.weight) + "</data>\n";
    out += "    </edge>\n";
  }
  out += "  </graph>\n</graphml>\n";
  return out;
}

std::string to_dot(const Network& network, const std::string& comment) {
  std::string out;
  if (!comment.empty()) out += "// " + comment + "\n";
  out += network.directed ? "digraph G {\n" : "graph G {\n";
  for (const auto& node : network.nodes) {
    out += "  \"" + dot_escape(node.ticker) + "\"";
    if (!node.sector.empty()) {
      out += " [sector=\"" + dot_escape(node.sector) + "\"]";
    }
    out += ";\n";
  }
  const char* arrow = network.directed ? " -> " : " -- ";
  for (const auto& edge : network.edges) {
    out += "  \"" + dot_escape(network.nodes[edge.source].ticker) + "\"" + arrow +
           "\"" + dot_escape(network.nodes[edge.target].ticker) + "\" [weight=\"" +
           format_double(edge.weight) + "\"];\n";
  }
  out += "}\n";
  return out;
}

void write_centrality_csv(const std::string& path, const CentralityVector& centrality,
                          const std::string& comment) {
  std::string out = comment_line(comment);
  out += "ticker,centrality\n";
  for (size_t i = 0; i < centrality.tickers.size(); ++i) {
    out += centrality.tickers[i] + "," +
           format_double(centrality.values(static_cast<Eigen::Index>(i))) + "\n";
  }
  write_file(path, out);
}

namespace {

constexpr char kMatrixMagic[] = "PMNETMX1";
constexpr char kBlockMagic[] = "PMNETPB1";

std::optional<std::string> cache_payload(const std::string& path, const char* magic,
                                         const std::string& key) {
  if (!std::filesystem::exists(path)) return std::nullopt;
  std::string raw;
  try {
    raw = read_file(path);
  } catch (const std::exception&) {
    return std::nullopt;
  }
  if (raw.size() < 8 || raw.compare(0, 8, magic) != 0) return std::nullopt;
  size_t offset = 8;
  try {
    if (take_string(raw, offset) != key) return std::nullopt;
    return raw.substr(offset);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace

void save_matrix_cache(const std::string& path, const std::string& key,
                       const std::vector<std::string>& tickers,
                       const Eigen::MatrixXd& values) {
  const auto n = static_cast<Eigen::Index>(tickers.size());
  if (values.rows() != n || values.cols() != n) {
    throw std::invalid_argument("save_matrix_cache: matrix shape mismatch");
  }
  std::string out(kMatrixMagic, 8);
  put_string(out, key);
  put<std::uint32_t>(out, static_cast<std::uint32_t>(n));
  for (const auto& t : tickers) put_string(out, t);
  put_doubles(out, values.data(), static_cast<size_t>(n) * n);
  write_file(path, out);
}

std::optional<Eigen::MatrixXd> load_matrix_cache(const std::string& path,
                                                 const std::string& key,
                                                 std::vector<std::string>* tickers) {
  const auto payload = cache_payload(path, kMatrixMagic, key);
  if (!payload) return std::nullopt;
  try {
    size_t offset = 0;
    const auto n = take<std::uint32_t>(*payload, offset);
    std::vector<std::string> names;
    for (std::uint32_t i = 0; i < n; ++i) names.push_back(take_string(*payload, offset));
    Eigen::MatrixXd values(n, n);
    take_doubles(*payload, offset, values.data(), static_cast<size_t>(n) * n);
    if (tickers) *tickers = std::move(names);
    return values;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void save_pmi_block(const std::string& path, const std::string& key,
                    const PmiBlock& block) {
  const auto n = static_cast<size_t>(block.size());
  std::string out(kBlockMagic, 8);
  put_string(out, key);
  put<std::uint32_t>(out, static_cast<std::uint32_t>(n));
  put<std::uint32_t>(out, static_cast<std::uint32_t>(block.bins));
  put<std::uint32_t>(out, static_cast<std::uint32_t>(block.sample_size));
  put<std::uint8_t>(out, block.estimator == Estimator::Sg ? 1 : 0);
  put<std::uint8_t>(out, block.prior == SgPrior::PerAxis ? 1 : 0);
  for (const auto& t : block.tickers) put_string(out, t);
  put_doubles(out, block.entropy1.data(), n);
  put_doubles(out, block.entropy2.data(), n * n);
  put_doubles(out, block.mi.data(), n * n);
  put_doubles(out, block.pmi.data(), n * n * n);
  write_file(path, out);
}

std::optional<PmiBlock> load_pmi_block(const std::string& path, const std::string& key) {
  const auto payload = cache_payload(path, kBlockMagic, key);
  if (!payload) return std::nullopt;
  try {
    size_t offset = 0;
    PmiBlock block;
    const auto n = take<std::uint32_t>(*payload, offset);
    block.bins = static_cast<int>(take<std::uint32_t>(*payload, offset));
    block.sample_size = static_cast<int>(take<std::uint32_t>(*payload, offset));
    block.estimator = take<std::uint8_t>(*payload, offset) ? Estimator::Sg
                                                           : Estimator::Ml;
    block.prior = take<std::uint8_t>(*payload, offset) ? SgPrior::PerAxis
                                                       : SgPrior::JointAlphabet;
    for (std::uint32_t i = 0; i < n; ++i) {
      block.tickers.push_back(take_string(*payload, offset));
    }
    block.entropy1.resize(n);
    take_doubles(*payload, offset, block.entropy1.data(), n);
    block.entropy2.resize(n, n);
    take_doubles(*payload, offset, block.entropy2.data(), static_cast<size_t>(n) * n);
    block.mi.resize(n, n);
    take_doubles(*payload, offset, block.mi.data(), static_cast<size_t>(n) * n);
    block.pmi.resize(static_cast<size_t>(n) * n * n);
    take_doubles(*payload, offset, block.pmi.data(), block.pmi.size());
    return block;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace pminet
