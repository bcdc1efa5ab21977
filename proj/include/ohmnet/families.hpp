#pragma once

#include "ohmnet/graph.hpp"

#include <string>

namespace ohmnet {

enum class Family { path, linear2tree, linear3tree, ladder, fan, wheel };

/// Size parameter follows the usual convention per family: vertex count
/// for path / linear 2-tree / linear 3-tree, rung count m for the ladder
/// (2m vertices), total vertex count k including the hub for fan / wheel.
struct FamilySpec {
    Family family;
    int size;
};

Family family_from_name(const std::string& name);
std::string family_name(Family f);
int min_size(Family f);
// Vertex count of the generated graph.
int family_vertex_count(const FamilySpec& spec);

// Unit-resistance instance of the family. Numbering conventions:
// path and k-trees left to right; ladder column-major with {1,2} the left
// rung; fan/wheel hub is vertex k with the rim path/cycle on 1..k-1.
Graph generate(const FamilySpec& spec);

} // namespace ohmnet
