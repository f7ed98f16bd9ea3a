#pragma once

// Minimum degree notions. A rule names a family of edge stars around each
// d-set of vertices; min_star_degree takes, for each d-set, the smallest
// family count, then minimizes over all d-sets.
//
//   standard:d  edges containing a given d-set, both signs pooled
//   out / in    k = 2 only: arcs leaving / entering a vertex (d = 1)
//   semi        k = 2 only: min(out, in) per vertex
//   partite     k = 2 partite: per vertex, edges into each other class;
//               the star families are the classes

#include <string>
#include <vector>

#include "core/system.hpp"

namespace rf {

enum class RuleKind { Standard, Out, In, Semi, Partite };

struct DegreeRule {
    RuleKind kind = RuleKind::Standard;
    int d = 1;

    static DegreeRule parse(const std::string& s);
    std::string name() const;
};

// Minimum star degree of a single graph.
long long min_star_degree(const DKGraph& g, const DegreeRule& rule, const std::vector<int>& klass, int num_classes);

// System-wide value: min over colors of the per-color value.
long long min_star_degree(const System& sys, const DegreeRule& rule);

}  // namespace rf
