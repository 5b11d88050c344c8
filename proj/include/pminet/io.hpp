#pragma once

#include "pminet/netmetrics.hpp"
#include "pminet/network.hpp"
#include "pminet/series.hpp"
#include "pminet/similarity.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pminet {

/// Doubles are serialized with "%.17g" so that reading them back restores
/// the exact bit pattern; all text artifacts are byte-stable across runs.
std::string format_double(double value);

/// FNV-1a 64-bit digest, rendered as 16 hex digits.
std::uint64_t fnv1a(const std::string& bytes);
std::string digest_hex(const std::string& bytes);
std::string file_digest(const std::string& path);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

/// Wide tables with header `date,<TICKER>,...`, one row per date.  A
/// non-empty comment becomes a leading `# ...` line; every reader in this
/// module (and the price/sector loaders) skips such lines.
void write_returns_csv(const std::string& path, const std::vector<std::string>& dates,
                       const std::vector<ReturnSeries>& series,
                       const std::string& comment = "");
void write_states_csv(const std::string& path, const std::vector<std::string>& dates,
                      const std::vector<DiscreteSeries>& series,
                      const std::string& comment = "");
void write_prices_csv(const std::string& path, const std::vector<std::string>& dates,
                      const std::vector<PriceSeries>& series,
                      const std::string& comment = "");
void write_sectors_csv(const std::string& path, const SectorMap& sectors,
                       const std::string& comment = "");

/// Square matrix with the ticker list as header row, values row-major.
void write_matrix_csv(const std::string& path, const std::vector<std::string>& tickers,
                      const Eigen::MatrixXd& values, const std::string& comment = "");
Eigen::MatrixXd read_matrix_csv(const std::string& path, std::vector<std::string>* tickers);

void write_mask_csv(const std::string& path, const std::vector<std::string>& tickers,
                    const Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic>& mask,
                    const std::string& comment = "");

/// Edge list `source,target,weight,directed` with one row per edge.
void write_edge_list(const std::string& path, const Network& network,
                     const std::string& comment = "");
Network read_edge_list(const std::string& path);

/// GraphML with a string `sector` attribute per node and a double `weight`
/// per edge; centrality is attached when provided.  A non-empty comment is
/// embedded as an XML comment before the graph element.
std::string to_graphml(const Network& network,
                       const CentralityVector* centrality = nullptr,
                       const std::string& comment = "");

std::string to_dot(const Network& network, const std::string& comment = "");

void write_centrality_csv(const std::string& path, const CentralityVector& centrality,
                          const std::string& comment = "");

/// Binary matrix cache.  `key` describes the inputs that determine the
/// matrix (input digest, measure, estimator, bins); load returns nothing
/// on a missing or mismatched entry.
void save_matrix_cache(const std::string& path, const std::string& key,
                       const std::vector<std::string>& tickers,
                       const Eigen::MatrixXd& values);
std::optional<Eigen::MatrixXd> load_matrix_cache(const std::string& path,
                                                 const std::string& key,
                                                 std::vector<std::string>* tickers);

void save_pmi_block(const std::string& path, const std::string& key, const PmiBlock& block);
std::optional<PmiBlock> load_pmi_block(const std::string& path, const std::string& key);

}  // namespace pminet
