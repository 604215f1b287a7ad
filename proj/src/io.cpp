#include "pairwalk/io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <numbers>
#include <string>
#include <system_error>

namespace pairwalk::io {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

template <typename T>
T parse_exact(std::string_view text, std::string_view what) {
  text = trim(text);
  T value{};
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  if (!text.empty() && text.front() == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || text.empty()) {
    throw InvalidArgument("cannot parse " + std::string(what) + " from '" + std::string(text) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

Vertex vertex_from_json(const Json& j) {
  if (!j.is_number_integer() || j.get<long long>() < 0) {
    throw InvalidArgument("vertex index must be a non-negative integer, got " + j.dump());
  }
  return j.get<Vertex>();
}

Json pair_json(const PairState& p) { return Json::array({p.a(), p.b()}); }

PairState pair_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw InvalidArgument("pair must be a two-element array, got " + j.dump());
  return {vertex_from_json(j[0]), vertex_from_json(j[1])};
}

}  // namespace

double round_significant(double x) {
  if (!std::isfinite(x)) return x;
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x, std::chars_format::general, 15);
  double back = 0.0;
  std::from_chars(buf.data(), res.ptr, back);
  return back;
}

std::string format_number(double x) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x, std::chars_format::general, 15);
  return std::string(buf.data(), res.ptr);
}

Json graph_to_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back(Json::array({e.u, e.v, round_significant(e.weight)}));
  Json j;
  j["n"] = g.order();
  j["edges"] = std::move(edges);
  return j;
}

Graph graph_from_json(const Json& j) {
  if (!j.is_object()) throw InvalidArgument("graph JSON must be an object");
  if (!j.contains("n") || !j["n"].is_number_integer() || j["n"].get<long long>() < 0) {
    throw InvalidArgument("graph JSON needs a non-negative integer field \"n\"");
  }
  const auto n = j["n"].get<std::size_t>();
  std::vector<Edge> edges;
  if (j.contains("edges")) {
    if (!j["edges"].is_array()) throw InvalidArgument("graph JSON field \"edges\" must be an array");
    for (const auto& e : j["edges"]) {
      if (!e.is_array() || (e.size() != 2 && e.size() != 3)) {
        throw InvalidArgument("edge must be [u, v] or [u, v, w], got " + e.dump());
      }
      double w = 1.0;
      if (e.size() == 3) {
        if (!e[2].is_number()) throw InvalidArgument("edge weight must be a number, got " + e[2].dump());
        w = e[2].get<double>();
        if (!std::isfinite(w)) throw InvalidArgument("edge weight must be finite");
      }
      edges.push_back({vertex_from_json(e[0]), vertex_from_json(e[1]), w});
    }
  }
  return Graph(n, edges);
}

Graph parse_graph(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidArgument(std::string("malformed graph JSON: ") + e.what());
  }
  return graph_from_json(j);
}

std::string dump_graph(const Graph& g) { return graph_to_json(g).dump(); }

Json certificate_to_json(const TransferCertificate& cert) {
  Json j;
  j["src"] = pair_json(cert.src);
  j["dst"] = pair_json(cert.dst);
  j["time"] = round_significant(cert.time);
  j["fidelity"] = round_significant(cert.fidelity);
  if (cert.phase) {
    j["phase"] = Json::array({round_significant(cert.phase->real()), round_significant(cert.phase->imag())});
  } else {
    j["phase"] = nullptr;
  }
  j["method"] = std::string(method_tag(cert.method));
  j["tolerance"] = round_significant(cert.tolerance);
  j["verdict"] = cert.verdict;
  if (cert.search) {
    j["config"] = {{"horizon", round_significant(cert.search->horizon)},
                   {"grid_points", cert.search->grid_points},
                   {"refine_iterations", cert.search->refine_iterations},
                   {"epsilon", round_significant(cert.search->epsilon)}};
  }
  return j;
}

TransferCertificate certificate_from_json(const Json& j) {
  try {
    TransferCertificate cert{pair_from_json(j.at("src")), pair_from_json(j.at("dst"))};
    cert.time = j.at("time").get<double>();
    cert.fidelity = j.at("fidelity").get<double>();
    if (const auto& ph = j.at("phase"); !ph.is_null()) cert.phase = Complex(ph.at(0).get<double>(), ph.at(1).get<double>());
    cert.method = method_from_tag(j.at("method").get<std::string>());
    cert.tolerance = j.at("tolerance").get<double>();
    cert.verdict = j.at("verdict").get<bool>();
    if (j.contains("config")) {
      const auto& c = j["config"];
      cert.search = SearchConfig{c.at("horizon").get<double>(), c.at("grid_points").get<int>(),
                                 c.at("refine_iterations").get<int>(), c.at("epsilon").get<double>()};
    }
    return cert;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed certificate JSON: ") + e.what());
  }
}

double parse_time(std::string_view text) {
  text = trim(text);
  const auto pi_pos = text.find("pi");
  if (pi_pos == std::string_view::npos) {
    const double t = parse_exact<double>(text, "time");
    if (!std::isfinite(t)) throw InvalidArgument("time must be finite");
    return t;
  }
  // [sign][k][*]pi[/m]
  auto head = trim(text.substr(0, pi_pos));
  const auto tail = trim(text.substr(pi_pos + 2));
  double sign = 1.0;
  if (!head.empty() && (head.front() == '-' || head.front() == '+')) {
    sign = head.front() == '-' ? -1.0 : 1.0;
    head = trim(head.substr(1));
  }
  if (!head.empty() && head.back() == '*') head = trim(head.substr(0, head.size() - 1));
  const double k = head.empty() ? 1.0 : static_cast<double>(parse_exact<long long>(head, "multiple of pi"));
  double m = 1.0;
  if (!tail.empty()) {
    if (tail.front() != '/') throw InvalidArgument("cannot parse time from '" + std::string(text) + "'");
    m = static_cast<double>(parse_exact<long long>(tail.substr(1), "divisor of pi"));
    if (m == 0.0) throw InvalidArgument("division by zero in time '" + std::string(text) + "'");
  }
  return sign * k * std::numbers::pi / m;
}

PairState parse_pair(std::string_view text) {
  const auto parts = split(trim(text), ',');
  if (parts.size() != 2) throw InvalidArgument("pair must look like 'a,b', got '" + std::string(text) + "'");
  const auto a = parse_exact<long long>(parts[0], "vertex");
  const auto b = parse_exact<long long>(parts[1], "vertex");
  if (a < 0 || b < 0) throw InvalidArgument("vertex indices must be non-negative");
  return {static_cast<Vertex>(a), static_cast<Vertex>(b)};
}

std::vector<PairState> parse_pair_list(std::string_view text) {
  std::vector<PairState> out;
  for (auto part : split(trim(text), ';')) {
    if (!trim(part).empty()) out.push_back(parse_pair(part));
  }
  return out;
}

std::vector<long long> parse_int_list(std::string_view text) {
  std::vector<long long> out;
  for (auto part : split(trim(text), ',')) {
    if (!trim(part).empty()) out.push_back(parse_exact<long long>(part, "integer"));
  }
  return out;
}

}  // namespace pairwalk::io
