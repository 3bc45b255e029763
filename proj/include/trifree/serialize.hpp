#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <variant>

#include "json.hpp"
#include "trifree/construction.hpp"
#include "trifree/hypergraph.hpp"
#include "trifree/params.hpp"

namespace trifree {

using Json = nlohmann::json;

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class FileFormat { kEdgeList, kJson };

Json to_json(const Params& params);
Params params_from_json(const Json& j);

// Edge list text: header "n m seed", then m lines "u v" (1-based, u < v) in
// lexicographic order.
std::string edge_list_text(const SimpleGraph& g, std::uint64_t seed);
SimpleGraph parse_edge_list(std::istream& in, std::uint64_t* seed = nullptr);

// Sidecar with params, seed, placement, base graphs and build statistics.
// With include_edges the object is self-contained (the json file format).
Json to_json(const PlacedGraph& g, bool include_edges = false);
PlacedGraph placed_graph_from_json(const Json& sidecar, const SimpleGraph& graph);
PlacedGraph placed_graph_from_json(const Json& self_contained);

// Triple list text: header "n m seed", then m lines "u v w" (1-based,
// sorted) in lexicographic order. Colours live in the sidecar.
std::string triple_list_text(const TripleSystem& h, std::uint64_t seed);
Json to_json(const HyperInstance& h, bool include_triples = false);
HyperInstance hyper_instance_from_json(const Json& sidecar, std::istream* triples);

using LoadedInstance = std::variant<SimpleGraph, PlacedGraph, HyperInstance>;

struct WrittenFiles {
  std::filesystem::path data;     // edge / triple list (empty for json)
  std::filesystem::path sidecar;  // json
};

// Writes <dir>/<stem>.edges + <dir>/<stem>.json (edge list format) or only
// <dir>/<stem>.json (json format). The directory must exist.
WrittenFiles write_instance(const PlacedGraph& g, const std::filesystem::path& dir,
                            const std::string& stem, FileFormat format);
WrittenFiles write_instance(const HyperInstance& h, const std::filesystem::path& dir,
                            const std::string& stem, FileFormat format);

// Accepts an edge / triple list (sidecar found by swapping the extension for
// .json; a list without sidecar loads as a plain SimpleGraph) or a json file.
LoadedInstance read_instance(const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace trifree
