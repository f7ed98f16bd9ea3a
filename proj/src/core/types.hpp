#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace rf {

using Vertex = int;
using Color = int;

enum class ErrKind { Invalid, Io, Internal };

struct Error : std::runtime_error {
    ErrKind kind;
    Error(ErrKind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

[[noreturn]] inline void fail_invalid(const std::string& msg) { throw Error(ErrKind::Invalid, msg); }
[[noreturn]] inline void fail_io(const std::string& msg) { throw Error(ErrKind::Io, msg); }
[[noreturn]] inline void fail_internal(const std::string& msg) { throw Error(ErrKind::Internal, msg); }

// A signed k-set: vertices strictly ascending, sign +1 or -1. The sign
// records the edge's orientation class relative to the ascending vertex
// order. For k = 2, sign +1 is the arc low -> high and -1 is high -> low.
// Undirected graphs use sign +1 everywhere.
struct DEdge {
    std::vector<Vertex> verts;
    int sign = +1;

    bool operator==(const DEdge& o) const { return sign == o.sign && verts == o.verts; }
    bool operator<(const DEdge& o) const {
        if (verts != o.verts) return verts < o.verts;
        return sign > o.sign;  // '+' sorts before '-'
    }
};

inline std::string join_ints(const std::vector<int>& v, char sep = ' ') {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(v[i]);
    }
    return s;
}

}  // namespace rf
