#pragma once

#include <string>
#include <utility>
#include <vector>

#include "adt/network.hpp"

namespace adt {

/// Elementary sub-model with multiplicity.
struct SubModel {
    int m_sub = 0;
    int n_sub = 0;
    int multiplicity = 0;
    bool operator==(const SubModel&) const = default;
};

/// Level coloring realizing a decomposition.  Node order: transmitters
/// 1..L then receivers 1..L; the constructors always emit the same rule at
/// every node.
struct ColoringMap {
    int num_colors = 0;
    std::vector<std::vector<int>> color;     // [node][level-1], 0-based colors
    std::vector<std::vector<int>> sublevel;  // [node][level-1], 1-based within color
};

struct Decomposition {
    int m = 0, n = 0, L = 2;
    std::vector<SubModel> parts;
    std::vector<std::pair<int, int>> color_shape;  // (m_sub, n_sub) per color
    ColoringMap coloring;

    /// e.g. "(0,1)^3 x (1,2)^2"
    std::string format() const;
};

/// (km, kn) = (m,n)^k via the mod-k level coloring.
Decomposition decompose_scale(int m, int n, int k, int L = 2);

/// (2m+1, 2n+1) = (m,n) x (m+1, n+1) via the parity coloring.  Arguments are
/// the parent parameters; both must be odd.
Decomposition decompose_odd(int m_parent, int n_parent, int L = 2);

/// Gap-1 decomposition of an arbitrary (m,n) model with m != n.
Decomposition full_decompose(int m, int n, int L = 2);

/// Structural soundness: colors partition levels at every node, every channel
/// edge stays within its color, and each color class induces exactly its
/// declared sub-model.
bool validate_coloring(const Decomposition& dec);

}  // namespace adt
