#include "pminet/io.hpp"

#include "pminet/ingest.hpp"
#include "pminet/similarity.hpp"

#include "testutil.hpp"

#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <limits>
#include <random>
#include <string>
#include <vector>

using namespace pminet;

namespace {

ReturnSeries rs(std::string ticker, std::vector<double> values) {
  ReturnSeries s;
  s.ticker = std::move(ticker);
  s.returns = Eigen::Map<Eigen::VectorXd>(values.data(),
                                          static_cast<Eigen::Index>(values.size()));
  return s;
}

Network sample_network(bool directed) {
  Network net;
  net.nodes = {{"AAA", "S1"}, {"BBB", "S1"}, {"CCC", "S2"}};
  net.edges = {{0, 1, 0.125}, {1, 2, 2.5}};
  net.directed = directed;
  net.topology = Topology::Tree;
  return net;
}

bool same_bits(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return std::memcmp(a.data(), b.data(),
                     sizeof(double) * static_cast<size_t>(a.size())) == 0;
}

}  // namespace

TEST_CASE("format_double round trips the exact bit pattern") {
  for (double v : {0.1, 1.0 / 3.0, -2.718281828459045, 1e300, 5e-324, -0.0, 42.0,
                   123456789.123456789}) {
    const std::string text = format_double(v);
    const double back = std::strtod(text.c_str(), nullptr);
    CHECK(back == v);
    CHECK(std::signbit(back) == std::signbit(v));
  }
  CHECK(format_double(2.0) == "2");
  CHECK(format_double(-0.5) == "-0.5");
}

TEST_CASE("fnv1a matches the published vectors") {
  CHECK(fnv1a("") == 0xcbf29ce484222325ULL);
  CHECK(fnv1a("a") == 0xaf63dc4c8601ec8cULL);
  CHECK(fnv1a("foobar") == 0x85944171f73967e8ULL);
  CHECK(digest_hex("") == "cbf29ce484222325");
  CHECK(digest_hex("foobar") == "85944171f73967e8");
}

TEST_CASE("file helpers round trip and create parents") {
  testutil::TempDir dir;
  const auto path = dir.file("a/b/payload.bin");
  const std::string content = "line one\nline two\n\x01\x02 binary tail";
  write_file(path, content);
  CHECK(read_file(path) == content);
  CHECK(file_digest(path) == digest_hex(content));
  CHECK_THROWS_AS(read_file(dir.file("missing.txt")), std::runtime_error);
}

TEST_CASE("wide tables carry a header, one row per date, and the comment") {
  testutil::TempDir dir;
  const std::vector<std::string> dates = {"2020-01-02", "2020-01-03"};
  const auto path = dir.file("returns.csv");
  write_returns_csv(path, dates, {rs("AAA", {0.5, -0.25}), rs("BBB", {0.0, 1.0})},
                    "unit test");
  const auto text = read_file(path);
  CHECK(text ==
        "# unit test\n"
        "date,AAA,BBB\n"
        "2020-01-02,0.5,0\n"
        "2020-01-03,-0.25,1\n");

  CHECK_THROWS_AS(write_returns_csv(path, dates, {rs("AAA", {0.5})}, ""),
                  std::invalid_argument);

  DiscreteSeries d;
  d.ticker = "AAA";
  d.states = Eigen::VectorXi{{3, 0}};
  d.bins = 4;
  write_states_csv(dir.file("states.csv"), dates, {d});
  CHECK(read_file(dir.file("states.csv")) ==
        "date,AAA\n"
        "2020-01-02,3\n"
        "2020-01-03,0\n");
}

TEST_CASE("prices survive a write/load round trip bit for bit") {
  testutil::TempDir dir;
  const std::vector<std::string> dates = {"2021-03-01", "2021-03-02", "2021-03-03"};
  PriceSeries a;
  a.ticker = "AAA";
  a.timestamps = dates;
  a.prices = Eigen::VectorXd{{100.0, 100.0 * std::exp(0.01), 99.875}};
  PriceSeries b;
  b.ticker = "BBB";
  b.timestamps = dates;
  b.prices = Eigen::VectorXd{{3.14159, 2.71828, 3.0}};

  const auto path = dir.file("prices.csv");
  write_prices_csv(path, dates, {a, b}, "snapshot");
  const auto report = load_prices(path);
  REQUIRE(report.series.size() == 2);
  CHECK(report.excluded.empty());
  CHECK(report.dates == dates);
  CHECK(report.series[0].ticker == "AAA");
  CHECK((report.series[0].prices.array() == a.prices.array()).all());
  CHECK((report.series[1].prices.array() == b.prices.array()).all());
  CHECK(report.series[0].timestamps == dates);
}

TEST_CASE("sector map survives a write/load round trip") {
  testutil::TempDir dir;
  const SectorMap sectors = {{"AAA", "Energy"}, {"BBB", "Tech"}, {"CCC", "Energy"}};
  const auto path = dir.file("sectors.csv");
  write_sectors_csv(path, sectors, "labels");
  CHECK(load_sectors(path) == sectors);
  const auto text = read_file(path);
  CHECK(text.rfind("# labels\nticker,sector\n", 0) == 0);
}

TEST_CASE("matrix csv round trips exactly and validates its shape") {
  testutil::TempDir dir;
  const std::vector<std::string> tickers = {"AAA", "BBB", "CCC"};
  Eigen::MatrixXd m(3, 3);
  m << 0.0, 0.1, 1.0 / 7.0,
       0.1, 0.0, -2.25,
       1.0 / 7.0, -2.25, 0.0;
  const auto path = dir.file("matrix.csv");
  write_matrix_csv(path, tickers, m, "distances");

  std::vector<std::string> names;
  const auto back = read_matrix_csv(path, &names);
  CHECK(names == tickers);
  CHECK((back.array() == m.array()).all());

  CHECK_THROWS_AS(write_matrix_csv(path, tickers, Eigen::MatrixXd::Zero(2, 2), ""),
                  std::invalid_argument);
  testutil::write_text(dir.file("short.csv"), "AAA,BBB\n0,1\n");
  CHECK_THROWS_AS(read_matrix_csv(dir.file("short.csv"), nullptr), std::runtime_error);
  testutil::write_text(dir.file("bad.csv"), "AAA,BBB\n0,oops\n1,0\n");
  CHECK_THROWS_AS(read_matrix_csv(dir.file("bad.csv"), nullptr), std::runtime_error);
}

TEST_CASE("mask csv renders 0/1 cells") {
  testutil::TempDir dir;
  Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic> mask(2, 2);
  mask << false, true, true, false;
  const auto path = dir.file("mask.csv");
  write_mask_csv(path, {"AAA", "BBB"}, mask);
  CHECK(read_file(path) == "AAA,BBB\n0,1\n1,0\n");
  CHECK_THROWS_AS(write_mask_csv(path, {"AAA"}, mask), std::invalid_argument);
}

TEST_CASE("edge lists round trip and load as unrestricted topology") {
  testutil::TempDir dir;
  for (bool directed : {false, true}) {
    const auto net = sample_network(directed);
    const auto path = dir.file(directed ? "dir.csv" : "undir.csv");
    write_edge_list(path, net, "filtered network");
    const auto back = read_edge_list(path);
    CHECK(back.directed == directed);
    CHECK(back.topology == Topology::Unrestricted);
    REQUIRE(back.node_count() == 3);
    CHECK(back.nodes[0].ticker == "AAA");
    CHECK(back.nodes[1].ticker == "BBB");
    CHECK(back.nodes[2].ticker == "CCC");
    REQUIRE(back.edge_count() == 2);
    CHECK(back.edges[0].source == 0);
    CHECK(back.edges[0].target == 1);
    CHECK(back.edges[0].weight == 0.125);
    CHECK(back.edges[1].weight == 2.5);
  }
}

TEST_CASE("edge list reader rejects malformed input") {
  testutil::TempDir dir;
  testutil::write_text(dir.file("header.csv"), "a,b,c\n");
  CHECK_THROWS_AS(read_edge_list(dir.file("header.csv")), std::runtime_error);
  testutil::write_text(dir.file("flag.csv"),
                       "source,target,weight,directed\nAAA,BBB,1,2\n");
  CHECK_THROWS_AS(read_edge_list(dir.file("flag.csv")), std::runtime_error);
  testutil::write_text(dir.file("mixed.csv"),
                       "source,target,weight,directed\nAAA,BBB,1,0\nBBB,CCC,1,1\n");
  CHECK_THROWS_WITH_AS(read_edge_list(dir.file("mixed.csv")),
                       doctest::Contains("differs"), std::runtime_error);
  testutil::write_text(dir.file("empty.csv"), "source,target,weight,directed\n");
  CHECK_THROWS_WITH_AS(read_edge_list(dir.file("empty.csv")),
                       doctest::Contains("no edges"), std::runtime_error);
}

TEST_CASE("graphml carries sectors, weights, and optional centrality") {
  auto net = sample_network(false);
  net.nodes[2].ticker = "C&C<>\"'";
  const auto plain = to_graphml(net, nullptr, "note & <tag>");
  CHECK(plain.find("edgedefault=\"undirected\"") != std::string::npos);
  CHECK(plain.find("<!-- note & <tag> -->") != std::string::npos);
  CHECK(plain.find("<node id=\"C&amp;C&lt;&gt;&quot;&apos;\">") != std::string::npos);
  CHECK(plain.find("<data key=\"sector\">S1</data>") != std::string::npos);
  CHECK(plain.find("<data key=\"weight\">0.125</data>") != std::string::npos);
  CHECK(plain.find("key id=\"centrality\"") == std::string::npos);

  CentralityVector c;
  c.tickers = {"AAA", "BBB", "C&C<>\"'"};
  c.values = Eigen::VectorXd{{0.5, 0.25, 0.75}};
  const auto rich = to_graphml(net, &c);
  CHECK(rich.find("key id=\"centrality\"") != std::string::npos);
  CHECK(rich.find("<data key=\"centrality\">0.25</data>") != std::string::npos);

  CentralityVector wrong = c;
  wrong.tickers[1] = "XXX";
  CHECK_THROWS_AS(to_graphml(net, &wrong), std::invalid_argument);
  wrong.tickers.pop_back();
  CHECK_THROWS_AS(to_graphml(net, &wrong), std::invalid_argument);

  const auto directed = to_graphml(sample_network(true));
  CHECK(directed.find("edgedefault=\"directed\"") != std::string::npos);
}

TEST_CASE("dot output distinguishes directed and undirected graphs") {
  const auto undirected = to_dot(sample_network(false), "note");
  CHECK(undirected.rfind("// note\ngraph G {", 0) == 0);
  CHECK(undirected.find("\"AAA\" -- \"BBB\" [weight=\"0.125\"];") != std::string::npos);
  CHECK(undirected.find("\"AAA\" [sector=\"S1\"];") != std::string::npos);

  auto net = sample_network(true);
  net.nodes[0].ticker = "A\"B\\C";
  const auto directed = to_dot(net);
  CHECK(directed.rfind("digraph G {", 0) == 0);
  CHECK(directed.find("\"A\\\"B\\\\C\"") != std::string::npos);
  CHECK(directed.find(" -> ") != std::string::npos);
}

TEST_CASE("centrality csv lists ticker,value rows") {
  testutil::TempDir dir;
  CentralityVector c;
  c.tickers = {"AAA", "BBB"};
  c.values = Eigen::VectorXd{{1.25, 0.1875}};
  const auto path = dir.file("centrality.csv");
  write_centrality_csv(path, c, "markov");
  CHECK(read_file(path) == "# markov\nticker,centrality\nAAA,1.25\nBBB,0.1875\n");
}

TEST_CASE("readers skip comment lines wherever they appear") {
  testutil::TempDir dir;
  testutil::write_text(dir.file("m.csv"), "# one\nAAA,BBB\n# two\n0,1\n2,3\n");
  std::vector<std::string> names;
  const auto m = read_matrix_csv(dir.file("m.csv"), &names);
  CHECK(names == std::vector<std::string>{"AAA", "BBB"});
  CHECK(m(1, 0) == 2.0);
  testutil::write_text(dir.file("e.csv"),
                       "# note\nsource,target,weight,directed\n# more\nAAA,BBB,1,0\n");
  CHECK(read_edge_list(dir.file("e.csv")).edge_count() == 1);
}

TEST_CASE("matrix cache honours its key and survives corruption") {
  testutil::TempDir dir;
  const std::vector<std::string> tickers = {"AAA", "BBB"};
  Eigen::MatrixXd m(2, 2);
  m << 0.0, std::numeric_limits<double>::quiet_NaN(), 0.3, -1.0;
  const auto path = dir.file("cache.bin");
  save_matrix_cache(path, "key-1", tickers, m);

  std::vector<std::string> names;
  const auto hit = load_matrix_cache(path, "key-1", &names);
  REQUIRE(hit.has_value());
  CHECK(names == tickers);
  CHECK(same_bits(*hit, m));

  CHECK(!load_matrix_cache(path, "key-2", nullptr).has_value());
  CHECK(!load_matrix_cache(dir.file("absent.bin"), "key-1", nullptr).has_value());

  const auto raw = read_file(path);
  testutil::write_text(dir.file("trunc.bin"), raw.substr(0, raw.size() - 9));
  CHECK(!load_matrix_cache(dir.file("trunc.bin"), "key-1", nullptr).has_value());
  testutil::write_text(dir.file("magic.bin"), "NOTMAGIC" + raw.substr(8));
  CHECK(!load_matrix_cache(dir.file("magic.bin"), "key-1", nullptr).has_value());

  CHECK_THROWS_AS(save_matrix_cache(path, "k", tickers, Eigen::MatrixXd::Zero(3, 3)),
                  std::invalid_argument);
}

TEST_CASE("pmi block cache round trips every field") {
  std::vector<DiscreteSeries> states;
  std::mt19937_64 rng(99);
  for (int i = 0; i < 4; ++i) {
    DiscreteSeries s;
    s.ticker = "T" + std::to_string(i);
    s.bins = 3;
    s.states.resize(60);
    for (int t = 0; t < 60; ++t) {
      s.states(t) = static_cast<int>(rng() % 3);
    }
    states.push_back(std::move(s));
  }
  const auto block = compute_pmi_block(states, Estimator::Sg, SgPrior::JointAlphabet);

  testutil::TempDir dir;
  const auto path = dir.file("block.bin");
  save_pmi_block(path, "block-key", block);
  const auto back = load_pmi_block(path, "block-key");
  REQUIRE(back.has_value());
  CHECK(back->tickers == block.tickers);
  CHECK(back->bins == block.bins);
  CHECK(back->sample_size == block.sample_size);
  CHECK(back->estimator == block.estimator);
  CHECK(back->prior == block.prior);
  CHECK((back->entropy1.array() == block.entropy1.array()).all());
  CHECK(same_bits(back->entropy2, block.entropy2));
  CHECK(same_bits(back->mi, block.mi));
  REQUIRE(back->pmi.size() == block.pmi.size());
  CHECK(std::memcmp(back->pmi.data(), block.pmi.data(),
                    sizeof(double) * block.pmi.size()) == 0);
  CHECK(std::isnan(back->pmi_at(0, 0, 1)));
  CHECK(back->pmi_at(0, 1, 2) == block.pmi_at(0, 1, 2));

  CHECK(!load_pmi_block(path, "other-key").has_value());
}
