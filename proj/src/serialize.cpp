#include "trifree/serialize.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace trifree {
namespace {

constexpr int kFormatVersion = 1;

Json conventions() {
  return {{"logarithm", "natural"},
          {"N", "max(round(n / ln^2 n), ceil(sqrt n))"},
          {"k", "ceil(kappa * sqrt(n ln n))"},
          {"eps_hierarchy", "eps1 = eps^3, eps2 = eps^6 (fixed convention)"},
          {"size_classes", "H: x > t1, L: t2 < x <= t1, M: t3 < x <= t2, S: x <= t3"}};
}

Json finite_or_null(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

double number_or_inf(const Json& j) {
  return j.is_null() ? std::numeric_limits<double>::infinity() : j.get<double>();
}

template <typename T>
T field(const Json& j, const char* key) {
  if (!j.contains(key)) throw FormatError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception& e) {
    throw FormatError(std::string("bad field '") + key + "': " + e.what());
  }
}

Json base_to_json(const BaseGraph& g) {
  Json edges = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u + 1, v + 1});
  return {{"order", g.order()}, {"edges", std::move(edges)}};
}

BaseGraph base_from_json(const Json& j, Side side) {
  BaseGraph g(side, field<int>(j, "order"));
  for (const auto& e : field<Json>(j, "edges")) g.add_edge(e.at(0).get<int>() - 1, e.at(1).get<int>() - 1);
  return g;
}

Json placement_to_json(const Placement& p) {
  Json out = Json::array();
  for (const Cell& c : p) out.push_back({c.row + 1, c.col + 1});
  return out;
}

Placement placement_from_json(const Json& j) {
  Placement p;
  for (const auto& c : j) p.push_back({c.at(0).get<int>() - 1, c.at(1).get<int>() - 1});
  return p;
}

Json stats_to_json(const BuildStats& s) {
  return {{"red_base_edges", s.red_base_edges},
          {"blue_base_edges", s.blue_base_edges},
          {"g1_edges", s.g1_edges},
          {"g1_red_flags", s.g1_red_flags},
          {"g1_blue_flags", s.g1_blue_flags},
          {"g2_edges", s.g2_edges},
          {"g2_red_flags", s.g2_red_flags},
          {"g2_blue_flags", s.g2_blue_flags},
          {"red_flags_deleted", s.red_flags_deleted},
          {"blue_flags_deleted", s.blue_flags_deleted},
          {"edges_deleted", s.edges_deleted},
          {"final_edges", s.final_edges},
          {"dense_product", s.dense_product}};
}

BuildStats stats_from_json(const Json& j) {
  BuildStats s;
  s.red_base_edges = field<std::size_t>(j, "red_base_edges");
  s.blue_base_edges = field<std::size_t>(j, "blue_base_edges");
  s.g1_edges = field<std::size_t>(j, "g1_edges");
  s.g1_red_flags = field<std::size_t>(j, "g1_red_flags");
  s.g1_blue_flags = field<std::size_t>(j, "g1_blue_flags");
  s.g2_edges = field<std::size_t>(j, "g2_edges");
  s.g2_red_flags = field<std::size_t>(j, "g2_red_flags");
  s.g2_blue_flags = field<std::size_t>(j, "g2_blue_flags");
  s.red_flags_deleted = field<std::size_t>(j, "red_flags_deleted");
  s.blue_flags_deleted = field<std::size_t>(j, "blue_flags_deleted");
  s.edges_deleted = field<std::size_t>(j, "edges_deleted");
  s.final_edges = field<std::size_t>(j, "final_edges");
  s.dense_product = field<bool>(j, "dense_product");
  return s;
}

std::string color_code(ColorFlags c) {
  switch (c) {
    case kRed:
      return "r";
    case kBlue:
      return "b";
    case kBothColors:
      return "rb";
    default:
      throw FormatError("edge without colour");
  }
}

ColorFlags color_from_code(const std::string& s) {
  if (s == "r") return kRed;
  if (s == "b") return kBlue;
  if (s == "rb") return kBothColors;
  throw FormatError("unknown colour code '" + s + "'");
}

Json triples_to_json(const TripleSystem& h) {
  Json out = Json::array();
  for (const auto& [t, c] : h.edges()) out.push_back({t[0] + 1, t[1] + 1, t[2] + 1});
  return out;
}

Json header(const char* kind) {
  return {{"format", "trifree"},
          {"format_version", kFormatVersion},
          {"code_version", kCodeVersion},
          {"kind", kind}};
}

void check_header(const Json& j, const std::string& kind) {
  if (field<std::string>(j, "format") != "trifree") throw FormatError("not a trifree file");
  if (field<int>(j, "format_version") != kFormatVersion)
    throw FormatError("unsupported format_version");
  if (field<std::string>(j, "kind") != kind)
    throw FormatError("expected kind '" + kind + "', found '" + j.at("kind").get<std::string>() +
                      "'");
}

}  // namespace

Json to_json(const Params& p) {
  return {{"mode", to_string(p.mode)}, {"n", p.n},
          {"epsilon", p.epsilon},      {"beta", p.beta},
          {"kappa", p.kappa},          {"N", p.N},
          {"p", p.p},                  {"k", p.k},
          {"eps1", p.eps1},            {"eps2", p.eps2},
          {"C", p.C},                  {"t1", finite_or_null(p.t1)},
          {"t2", p.t2},                {"t3", p.t3},
          {"N_clamped", p.N_clamped},  {"conventions", conventions()}};
}

Params params_from_json(const Json& j) {
  Params p;
  const auto mode = field<std::string>(j, "mode");
  if (mode != "derived" && mode != "explicit") throw FormatError("bad params mode '" + mode + "'");
  p.mode = mode == "derived" ? ParamMode::kDerived : ParamMode::kExplicit;
  p.n = field<std::int64_t>(j, "n");
  p.epsilon = field<double>(j, "epsilon");
  p.beta = field<double>(j, "beta");
  p.kappa = field<double>(j, "kappa");
  p.N = field<std::int64_t>(j, "N");
  p.p = field<double>(j, "p");
  p.k = field<std::int64_t>(j, "k");
  p.eps1 = field<double>(j, "eps1");
  p.eps2 = field<double>(j, "eps2");
  p.C = field<double>(j, "C");
  p.t1 = number_or_inf(j.at("t1"));
  p.t2 = field<double>(j, "t2");
  p.t3 = field<double>(j, "t3");
  p.N_clamped = field<bool>(j, "N_clamped");
  return p;
}

std::string edge_list_text(const SimpleGraph& g, std::uint64_t seed) {
  std::ostringstream os;
  os << g.order() << ' ' << g.edge_count() << ' ' << seed << '\n';
  for (auto [u, v] : g.edges()) os << u + 1 << ' ' << v + 1 << '\n';
  return os.str();
}

SimpleGraph parse_edge_list(std::istream& in, std::uint64_t* seed) {
  long long n = -1, m = -1;
  std::uint64_t s = 0;
  if (!(in >> n >> m >> s) || n < 0 || m < 0) throw FormatError("edge list: bad header");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    long long u = 0, v = 0;
    if (!(in >> u >> v)) throw FormatError("edge list: truncated at edge " + std::to_string(i + 1));
    if (u < 1 || v < 1 || u > n || v > n || u == v)
      throw FormatError("edge list: bad edge on line " + std::to_string(i + 2));
    edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
  }
  SimpleGraph g(static_cast<int>(n), edges);
  if (g.edge_count() != static_cast<std::size_t>(m)) throw FormatError("edge list: duplicate edges");
  if (seed) *seed = s;
  return g;
}

Json to_json(const PlacedGraph& g, bool include_edges) {
  Json j = header("graph");
  j["seed"] = g.provenance.seed;
  j["params"] = to_json(g.provenance.params);
  j["n"] = g.graph.order();
  j["m"] = g.graph.edge_count();
  j["placement"] = placement_to_json(g.placement);
  j["red_base"] = base_to_json(g.red_base);
  j["blue_base"] = base_to_json(g.blue_base);
  j["stats"] = stats_to_json(g.provenance.stats);
  if (include_edges) {
    Json edges = Json::array();
    for (auto [u, v] : g.graph.edges()) edges.push_back({u + 1, v + 1});
    j["edges"] = std::move(edges);
  }
  return j;
}

PlacedGraph placed_graph_from_json(const Json& j, const SimpleGraph& graph) {
  check_header(j, "graph");
  PlacedGraph g;
  g.provenance.seed = field<std::uint64_t>(j, "seed");
  g.provenance.params = params_from_json(field<Json>(j, "params"));
  g.provenance.stats = stats_from_json(field<Json>(j, "stats"));
  g.placement = placement_from_json(field<Json>(j, "placement"));
  g.red_base = base_from_json(field<Json>(j, "red_base"), Side::kRed);
  g.blue_base = base_from_json(field<Json>(j, "blue_base"), Side::kBlue);
  g.graph = graph;
  if (graph.order() != field<int>(j, "n") || graph.edge_count() != field<std::size_t>(j, "m"))
    throw FormatError("sidecar n/m disagree with the edge list");
  if (static_cast<int>(g.placement.size()) != graph.order())
    throw FormatError("placement size differs from n");
  return g;
}

PlacedGraph placed_graph_from_json(const Json& j) {
  std::vector<Edge> edges;
  for (const auto& e : field<Json>(j, "edges"))
    edges.emplace_back(e.at(0).get<int>() - 1, e.at(1).get<int>() - 1);
  return placed_graph_from_json(j, SimpleGraph(field<int>(j, "n"), edges));
}

std::string triple_list_text(const TripleSystem& h, std::uint64_t seed) {
  std::ostringstream os;
  os << h.order() << ' ' << h.edge_count() << ' ' << seed << '\n';
  for (const auto& [t, c] : h.edges()) os << t[0] + 1 << ' ' << t[1] + 1 << ' ' << t[2] + 1 << '\n';
  return os.str();
}

Json to_json(const HyperInstance& h, bool include_triples) {
  Json j = header("hypergraph");
  j["seed"] = h.seed;
  j["params"] = to_json(h.params);
  j["n"] = h.reduced.order();
  j["m"] = h.reduced.edge_count();
  j["placement"] = placement_to_json(h.placement);
  Json flags = Json::array();
  for (const auto& [t, c] : h.reduced.edges()) flags.push_back(color_code(c));
  j["flags"] = std::move(flags);
  j["red_base"] = {{"order", h.red_base.order()}, {"triples", triples_to_json(h.red_base)}};
  j["blue_base"] = {{"order", h.blue_base.order()}, {"triples", triples_to_json(h.blue_base)}};
  j["h2_edges"] = h.h2_edges;
  j["reduction"] = {{"red_rejected", h.reduction.red_rejected},
                    {"blue_rejected", h.reduction.blue_rejected},
                    {"red_removed", h.reduction.red_removed},
                    {"blue_removed", h.reduction.blue_removed}};
  if (include_triples) j["triples"] = triples_to_json(h.reduced);
  return j;
}

HyperInstance hyper_instance_from_json(const Json& j, std::istream* triples) {
  check_header(j, "hypergraph");
  HyperInstance h;
  h.seed = field<std::uint64_t>(j, "seed");
  h.params = params_from_json(field<Json>(j, "params"));
  h.placement = placement_from_json(field<Json>(j, "placement"));
  h.h2_edges = field<std::size_t>(j, "h2_edges");
  const Json& r = field<Json>(j, "reduction");
  h.reduction.red_rejected = field<std::size_t>(r, "red_rejected");
  h.reduction.blue_rejected = field<std::size_t>(r, "blue_rejected");
  h.reduction.red_removed = field<std::size_t>(r, "red_removed");
  h.reduction.blue_removed = field<std::size_t>(r, "blue_removed");

  auto load_base = [](const Json& b, ColorFlags color) {
    TripleSystem t(field<int>(b, "order"));
    for (const auto& e : field<Json>(b, "triples"))
      t.add(make_triple(e.at(0).get<int>() - 1, e.at(1).get<int>() - 1, e.at(2).get<int>() - 1),
            color);
    return t;
  };
  h.red_base = load_base(field<Json>(j, "red_base"), kRed);
  h.blue_base = load_base(field<Json>(j, "blue_base"), kBlue);

  const int n = field<int>(j, "n");
  const auto m = field<std::size_t>(j, "m");
  std::vector<Triple> list;
  if (triples) {
    long long hn = -1, hm = -1;
    std::uint64_t seed = 0;
    if (!(*triples >> hn >> hm >> seed) || hn != n || hm < 0 || static_cast<std::size_t>(hm) != m)
      throw FormatError("triple list header disagrees with sidecar");
    for (std::size_t i = 0; i < m; ++i) {
      int a = 0, b = 0, c = 0;
      if (!(*triples >> a >> b >> c)) throw FormatError("triple list truncated");
      list.push_back(make_triple(a - 1, b - 1, c - 1));
    }
  } else {
    for (const auto& e : field<Json>(j, "triples"))
      list.push_back(make_triple(e.at(0).get<int>() - 1, e.at(1).get<int>() - 1,
                                 e.at(2).get<int>() - 1));
  }
  const Json& flags = field<Json>(j, "flags");
  if (flags.size() != list.size()) throw FormatError("flag count differs from triple count");
  h.reduced = TripleSystem(n);
  for (std::size_t i = 0; i < list.size(); ++i)
    h.reduced.add(list[i], color_from_code(flags[i].get<std::string>()));
  if (h.reduced.edge_count() != m) throw FormatError("duplicate triples");
  h.reduced.set_cells(h.placement);
  return h;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
  if (!out) throw IoError("write failed: " + path.string());
}

namespace {

void require_dir(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir))
    throw IoError("output directory does not exist: " + dir.string());
}

}  // namespace

WrittenFiles write_instance(const PlacedGraph& g, const std::filesystem::path& dir,
                            const std::string& stem, FileFormat format) {
  require_dir(dir);
  WrittenFiles out;
  out.sidecar = dir / (stem + ".json");
  if (format == FileFormat::kEdgeList) {
    out.data = dir / (stem + ".edges");
    write_text_file(out.data, edge_list_text(g.graph, g.provenance.seed));
    write_text_file(out.sidecar, to_json(g, false).dump(1) + "\n");
  } else {
    write_text_file(out.sidecar, to_json(g, true).dump(1) + "\n");
  }
  return out;
}

WrittenFiles write_instance(const HyperInstance& h, const std::filesystem::path& dir,
                            const std::string& stem, FileFormat format) {
  require_dir(dir);
  WrittenFiles out;
  out.sidecar = dir / (stem + ".json");
  if (format == FileFormat::kEdgeList) {
    out.data = dir / (stem + ".triples");
    write_text_file(out.data, triple_list_text(h.reduced, h.seed));
    write_text_file(out.sidecar, to_json(h, false).dump(1) + "\n");
  } else {
    write_text_file(out.sidecar, to_json(h, true).dump(1) + "\n");
  }
  return out;
}

LoadedInstance read_instance(const std::filesystem::path& path) {
  if (!std::filesystem::exists(path)) throw IoError("no such file: " + path.string());
  auto parse_json = [](const std::filesystem::path& p) {
    try {
      return Json::parse(read_text_file(p));
    } catch (const Json::parse_error& e) {
      throw FormatError(p.string() + ": " + e.what());
    }
  };

  if (path.extension() == ".json") {
    const Json j = parse_json(path);
    const auto kind = field<std::string>(j, "kind");
    if (kind != "graph" && kind != "hypergraph") throw FormatError("unknown kind '" + kind + "'");
    check_header(j, kind);
    if (kind == "graph") {
      if (j.contains("edges")) return placed_graph_from_json(j);
      std::filesystem::path data = path;
      data.replace_extension(".edges");
      std::istringstream in(read_text_file(data));
      return placed_graph_from_json(j, parse_edge_list(in));
    }
    if (j.contains("triples")) return hyper_instance_from_json(j, nullptr);
    std::filesystem::path data = path;
    data.replace_extension(".triples");
    std::istringstream in(read_text_file(data));
    return hyper_instance_from_json(j, &in);
  }

  std::filesystem::path sidecar = path;
  sidecar.replace_extension(".json");
  std::istringstream in(read_text_file(path));
  if (path.extension() == ".triples") {
    if (!std::filesystem::exists(sidecar))
      throw IoError("triple list needs its sidecar: " + sidecar.string());
    return hyper_instance_from_json(parse_json(sidecar), &in);
  }
  if (!std::filesystem::exists(sidecar)) return parse_edge_list(in);
  return placed_graph_from_json(parse_json(sidecar), parse_edge_list(in));
}

}  // namespace trifree
