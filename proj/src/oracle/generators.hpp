#pragma once

// Seeded instance generators: complete hosts, extremal barriers sitting just
// under the factor threshold, their randomized completions sitting just
// above it, and random hosts trimmed down to a prescribed minimum degree.
// Every generator is a pure function of its arguments.

#include <cstdint>

#include "core/degree.hpp"
#include "core/pattern.hpp"
#include "core/system.hpp"

namespace rf {

// All k-sets in every color; directed adds both orientation classes.
System gen_complete(int n, int k, int m, bool directed);

// Complete multipartite host in every color; classes are contiguous and as
// balanced as possible.
System gen_complete_partite(int n, int classes, int m);

// One oversized independent set W (|W| = n/t + 1), every other pair present,
// all m = (n/t) t(t-1)/2 colors identical. Min degree lands at n - n/t - 1
// and no t-clique factor exists.
System gen_extremal(int t, int n);

// The extremal host plus seeded random edges inside W until every W vertex
// gains one, lifting the min degree to n - n/t.
System gen_extremal_completion(int t, int n, uint64_t seed);

// k-uniform space barrier: only k-sets meeting a fixed (n/k - 1)-set W
// survive, all n/k colors identical. Every cover of V needs n/k disjoint
// edges but W can only supply n/k - 1.
System gen_extremal_space(int k, int n);

// Start from the complete (partite / directed) host with m colors, walk the
// edges of every color once in seeded random order, and delete each with
// probability delete_prob whenever the color keeps min star degree of at
// least delta_target under `rule`.
System gen_random_min_degree(int n, int k, int m, const DegreeRule& rule, long long delta_target,
                             double delete_prob, uint64_t seed, bool directed = false,
                             int partite_classes = 0);

}  // namespace rf
