#ifndef MLOB_IO_HPP
#define MLOB_IO_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include "mlob/digraph.hpp"
#include "mlob/outtree.hpp"

namespace mlob {

struct ParseError : std::runtime_error {
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}
    int line;
};

/// Edge-list format: first line "n m", then m lines "u v" (0-indexed).
/// '#' starts a comment; blank lines are ignored. Duplicate arcs and
/// self-loops are rejected with their line number.
Digraph parse_instance(const std::string& text);

std::string serialize(const Digraph& g);

/// Parent-array witness format: line "root r", then size-1 lines
/// "v parent(v)" in ascending v.
std::string serialize_witness(const OutTree& t);

struct InstanceSpec {
    enum class Kind { Gnp, RandomSingleSourceDag, Path, Cycle, OutStar };
    Kind kind = Kind::Gnp;
    int n = 0;
    double p = 0.0;
    std::uint64_t seed = 0;
};

/// Deterministic under (kind, n, p, seed). RandomSingleSourceDag output is
/// acyclic with a unique in-degree-0 vertex. Throws std::invalid_argument
/// on n = 0 or p outside [0,1].
Digraph generate(const InstanceSpec& spec);

}  // namespace mlob

#endif
