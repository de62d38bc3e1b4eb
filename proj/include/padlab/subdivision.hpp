// Barycentric subdivision of Delta-complexes.
//
// Dimensions 0..2 are subdivided geometrically (edges split in two, polygon
// 2-cells fanned into 2L triangles around a center); 3-cells are kept as
// single cells with their boundary chains rewritten through the subdivision
// operator, which leaves the underlying space and homology untouched.
// 2-cells with empty attaching words (sphere cells) are likewise kept.

#ifndef PADLAB_SUBDIVISION_HPP
#define PADLAB_SUBDIVISION_HPP

#include "padlab/cellmap.hpp"

namespace padlab {

struct SubdivisionResult {
    ComplexPtr complex;        // sd X
    CellularMap carrier_map;   // sd X -> X, combinatorial chain equivalence
    std::array<SpMat, 4> sd_op;  // subdivision operator C_k(X) -> C_k(sd X)
};

SubdivisionResult barycentric_subdivision(const ComplexPtr& x, int times = 1);

/// Append x's cells (those selected by keep, or all when keep is null) to a
/// growing spec; returns new indices per dimension, -1 where dropped.
struct SpecAppendResult {
    std::array<std::vector<int>, 4> new_index;
};
SpecAppendResult append_to_spec(ComplexSpec& spec, const DComplex& x,
                                const std::array<const std::vector<char>*, 4>& keep,
                                const std::string& label_prefix = {});

}  // namespace padlab

#endif
