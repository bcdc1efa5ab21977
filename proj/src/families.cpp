#include "ohmnet/families.hpp"

#include "ohmnet/errors.hpp"

namespace ohmnet {

Family family_from_name(const std::string& name) {
    if (name == "path") return Family::path;
    if (name == "linear2tree") return Family::linear2tree;
    if (name == "linear3tree") return Family::linear3tree;
    if (name == "ladder") return Family::ladder;
    if (name == "fan") return Family::fan;
    if (name == "wheel") return Family::wheel;
    throw DomainError("unknown family '" + name + "'");
}

std::string family_name(Family f) {
    switch (f) {
        case Family::path: return "path";
        case Family::linear2tree: return "linear2tree";
        case Family::linear3tree: return "linear3tree";
        case Family::ladder: return "ladder";
        case Family::fan: return "fan";
        case Family::wheel: return "wheel";
    }
    throw DomainError("bad family tag");
}

int min_size(Family f) {
    switch (f) {
        case Family::path: return 2;
        case Family::linear2tree: return 2;
        // K4 is the smallest graph matching the banded pattern.
        case Family::linear3tree: return 4;
        case Family::ladder: return 1;
        case Family::fan: return 2;
        case Family::wheel: return 4;
    }
    throw DomainError("bad family tag");
}

int family_vertex_count(const FamilySpec& spec) {
    return spec.family == Family::ladder ? 2 * spec.size : spec.size;
}

namespace {

// Banded adjacency: each vertex joined to the next `band` vertices.
Graph banded(int n, int band) {
    Graph g(n);
    for (int i = 1; i <= n; ++i) {
        for (int d = 1; d <= band && i + d <= n; ++d) {
            g.add_resistor(i, i + d, Rational(1));
        }
    }
    return g;
}

} // namespace

Graph generate(const FamilySpec& spec) {
    if (spec.size < min_size(spec.family)) {
        throw DomainError(family_name(spec.family) + " requires size >= " +
                          std::to_string(min_size(spec.family)));
    }
    switch (spec.family) {
        case Family::path:
            return banded(spec.size, 1);
        case Family::linear2tree:
            return banded(spec.size, 2);
        case Family::linear3tree:
            return banded(spec.size, 3);
        case Family::ladder: {
            int m = spec.size;
            Graph g(2 * m);
            for (int j = 1; j <= m; ++j) g.add_resistor(2 * j - 1, 2 * j, Rational(1));
            for (int j = 1; j < m; ++j) {
                g.add_resistor(2 * j - 1, 2 * j + 1, Rational(1));
                g.add_resistor(2 * j, 2 * j + 2, Rational(1));
            }
            return g;
        }
        case Family::fan: {
            int k = spec.size;
            Graph g(k);
            for (int i = 1; i + 1 <= k - 1; ++i) g.add_resistor(i, i + 1, Rational(1));
            for (int i = 1; i <= k - 1; ++i) g.add_resistor(i, k, Rational(1));
            return g;
        }
        case Family::wheel: {
            int k = spec.size;
            Graph g(k);
            for (int i = 1; i + 1 <= k - 1; ++i) g.add_resistor(i, i + 1, Rational(1));
            g.add_resistor(k - 1, 1, Rational(1));
            for (int i = 1; i <= k - 1; ++i) g.add_resistor(i, k, Rational(1));
            return g;
        }
    }
    throw DomainError("bad family tag");
}

} // namespace ohmnet
