#ifndef SURFCYC_SURF_IO_HPP
#define SURFCYC_SURF_IO_HPP

#include <optional>
#include <string>
#include <vector>

#include "surfcyc/embedded_graph.hpp"

namespace surfcyc {

/// SURF v1 text format.
///
///   line 1:            n m b
///   next n lines:      darts at vertex v in counterclockwise rotation order
///   next 2m lines:     id origin head weight twin      (weight may be "inf")
///   next b lines:      boundary <representative dart>
///   optional lines:    pi <vertex> <base-vertex> <level>   (covering map)
///
/// Serialization is canonical: boundary lines are sorted by the smallest
/// dart of the face, so parse → serialize → parse is the identity.
struct PiEntry {
    int vertex;
    int base;
    int level;
    bool operator==(const PiEntry&) const = default;
};

struct SurfFile {
    GraphSpec spec;
    std::vector<PiEntry> pi;  // empty unless the file carries a cover map
};

SurfFile parse_surf(const std::string& text);
std::string serialize_surf(const EmbeddedGraph& g,
                           const std::vector<PiEntry>& pi = {});

SurfFile read_surf_file(const std::string& path);
void write_surf_file(const std::string& path, const EmbeddedGraph& g,
                     const std::vector<PiEntry>& pi = {});

} // namespace surfcyc

#endif
