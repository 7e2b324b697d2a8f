#include "mlob/io.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

namespace mlob {

namespace {

// Strip a trailing '#' comment and surrounding whitespace.
std::string clean_line(const std::string& raw) {
    std::string line = raw.substr(0, raw.find('#'));
    auto begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    auto end = line.find_last_not_of(" \t\r");
    return line.substr(begin, end - begin + 1);
}

bool parse_two_ints(const std::string& line, long long& a, long long& b) {
    std::istringstream stream(line);
    std::string tail;
    if (!(stream >> a >> b)) return false;
    if (stream >> tail) return false;
    return true;
}

}  // namespace

Digraph parse_instance(const std::string& text) {
    std::istringstream stream(text);
    std::string raw;
    int line_no = 0;
    long long n = -1, m = -1;
    while (n < 0 && std::getline(stream, raw)) {
        ++line_no;
        std::string line = clean_line(raw);
        if (line.empty()) continue;
        if (!parse_two_ints(line, n, m) || n < 1 || m < 0)
            throw ParseError(line_no, "malformed header, expected 'n m'");
    }
    if (n < 0) throw ParseError(line_no, "missing header");

    Digraph g(static_cast<int>(n));
    long long read = 0;
    while (std::getline(stream, raw)) {
        ++line_no;
        std::string line = clean_line(raw);
        if (line.empty()) continue;
        long long u, v;
        if (!parse_two_ints(line, u, v)) throw ParseError(line_no, "malformed arc line");
        if (read >= m) throw ParseError(line_no, "more arcs than declared");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError(line_no, "vertex index out of range");
        if (u == v) throw ParseError(line_no, "self-loop rejected");
        if (!g.add_arc(static_cast<int>(u), static_cast<int>(v)))
            throw ParseError(line_no, "duplicate arc");
        ++read;
    }
    if (read != m) throw ParseError(line_no, "fewer arcs than declared");
    return g;
}

std::string serialize(const Digraph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.arc_count() << '\n';
    for (auto [u, v] : g.arcs()) out << u << ' ' << v << '\n';
    return out.str();
}

std::string serialize_witness(const OutTree& t) {
    std::ostringstream out;
    out << "root " << t.root() << '\n';
    for (int v = 0; v < t.host_size(); ++v)
        if (t.contains(v) && v != t.root()) out << v << ' ' << t.parent(v) << '\n';
    return out.str();
}

Digraph generate(const InstanceSpec& spec) {
    using Kind = InstanceSpec::Kind;
    if (spec.n < 1) throw std::invalid_argument("generate: n must be at least 1");
    if (spec.kind == Kind::Gnp || spec.kind == Kind::RandomSingleSourceDag)
        if (!(spec.p >= 0.0 && spec.p <= 1.0))
            throw std::invalid_argument("generate: p must be in [0,1]");

    Digraph g(spec.n);
    std::mt19937_64 rng(spec.seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);

    switch (spec.kind) {
        case Kind::Gnp:
            for (int u = 0; u < spec.n; ++u)
                for (int v = 0; v < spec.n; ++v)
                    if (u != v && coin(rng) < spec.p) g.add_arc(u, v);
            break;
        case Kind::RandomSingleSourceDag: {
            std::vector<int> perm(spec.n);
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            std::vector<int> indeg(spec.n, 0);
            for (int i = 0; i < spec.n; ++i)
                for (int j = i + 1; j < spec.n; ++j)
                    if (coin(rng) < spec.p) {
                        g.add_arc(perm[i], perm[j]);
                        ++indeg[j];
                    }
            // Every non-first vertex gets an in-arc so the source is unique.
            for (int j = 1; j < spec.n; ++j) {
                if (indeg[j] > 0) continue;
                std::uniform_int_distribution<int> pick(0, j - 1);
                g.add_arc(perm[pick(rng)], perm[j]);
            }
            break;
        }
        case Kind::Path:
            for (int v = 0; v + 1 < spec.n; ++v) g.add_arc(v, v + 1);
            break;
        case Kind::Cycle:
            if (spec.n < 2) throw std::invalid_argument("generate: cycle needs n >= 2");
            for (int v = 0; v < spec.n; ++v) g.add_arc(v, (v + 1) % spec.n);
            break;
        case Kind::OutStar:
            for (int v = 1; v < spec.n; ++v) g.add_arc(0, v);
            break;
    }
    return g;
}

}  // namespace mlob
