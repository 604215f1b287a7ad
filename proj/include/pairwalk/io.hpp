#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "pairwalk/graph.hpp"
#include "pairwalk/transfer.hpp"

namespace pairwalk::io {

using Json = nlohmann::ordered_json;

/// Nearest double to x printed with 15 significant digits.
double round_significant(double x);

/// 15 significant digits, '.' separator, no locale involvement.
std::string format_number(double x);

/// {"n": N, "edges": [[u, v, w], ...]} with u < v, sorted. Weights rounded
/// to 15 significant digits.
Json graph_to_json(const Graph& g);

/// Accepts edges as [u, v] (weight 1) or [u, v, w]. Throws InvalidArgument.
Graph graph_from_json(const Json& j);
Graph parse_graph(std::string_view text);

/// Canonical one-line serialization (no trailing newline).
std::string dump_graph(const Graph& g);

Json certificate_to_json(const TransferCertificate& cert);
TransferCertificate certificate_from_json(const Json& j);

/// Decimal number or a multiple of pi: "pi", "pi/2", "3*pi/4", "-pi", "2pi".
double parse_time(std::string_view text);

/// "a,b"
PairState parse_pair(std::string_view text);

/// "a,b;c,d;..."
std::vector<PairState> parse_pair_list(std::string_view text);

/// "1,3,4"
std::vector<long long> parse_int_list(std::string_view text);

}  // namespace pairwalk::io
