#pragma once

// Target patterns. Each pattern is a small template graph on vertices
// {0,...,b-1}; a factor tiles the host with vertex-disjoint rainbow copies.
//
// Spec strings accepted by parse():
//   edge:k      one k-uniform edge (b = k, f = 1)
//   clique:t    complete graph K_t (b = t, f = t(t-1)/2)
//   ttour:k     transitive tournament on k vertices
//   tour:k:S    tournament on k vertices, S gives one '+'/'-' per vertex
//               pair in lexicographic order ('+' = low -> high arc)
//   pclique:k   complete partite K_k, one vertex per class

#include <string>

#include "core/dkgraph.hpp"

namespace rf {

enum class PatternKind { SingleEdge, Clique, TransitiveTournament, Tournament, PartiteClique };

struct Pattern {
    PatternKind kind = PatternKind::Clique;
    int b = 0;          // vertices per copy
    int f = 0;          // edges per copy
    int k = 2;          // edge uniformity
    bool directed = false;
    bool partite = false;
    DKGraph tmpl;       // template on {0,...,b-1}; edges in lexicographic order
    std::string spec;   // canonical spec string

    static Pattern parse(const std::string& spec);
};

}  // namespace rf
