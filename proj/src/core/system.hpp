#pragma once

// A color system: m signed k-graphs on one shared vertex set. Color i is
// the i-th graph; a rainbow structure uses each of its colors exactly once.
//
// Text format (whitespace separated, '#' starts a comment):
//   n k m [partite C]
//   [classes c_0 c_1 ... c_{n-1}]     (required iff partite)
//   color 0
//   v_1 ... v_k s                      (s is '+' or '-')
//   ...
//   color 1
//   ...
// Color sections appear in ascending order, one per color.

#include <string>
#include <vector>

#include "core/dkgraph.hpp"

namespace rf {

struct System {
    int n = 0;
    int k = 2;
    int m = 0;
    std::vector<DKGraph> graphs;
    std::vector<int> klass;   // class per vertex; empty unless partite
    int num_classes = 0;      // 0 unless partite

    bool partite() const { return num_classes > 0; }
    bool directed() const;
    void validate() const;

    static System parse(const std::string& text);
    static System read_file(const std::string& path);
    std::string serialize() const;

    // Subsystem on the given colors, same vertex set; preserves order.
    System slice(const std::vector<Color>& colors) const;

    // Induced subsystem on the given (ascending) vertices and colors.
    // Vertices are re-indexed by rank; classes carry over.
    System induced(const std::vector<Vertex>& verts, const std::vector<Color>& colors) const;
};

}  // namespace rf
