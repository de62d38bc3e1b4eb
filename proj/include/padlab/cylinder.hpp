// Mapping cylinders of cellular maps, built as prism complexes at the
// Delta-complex level: the target sits as the top, the source as the bottom,
// and every source cell contributes one prism cell of the next dimension.
// No subdivision is performed; identifications are left to the cell words.

#ifndef PADLAB_CYLINDER_HPP
#define PADLAB_CYLINDER_HPP

#include "padlab/cellmap.hpp"

namespace padlab {

struct MappingCylinder {
    ComplexPtr complex;        // M_f
    Subcomplex bottom;         // copy of the source A
    Subcomplex top;            // copy of the target B
    CellularMap proj;          // M_f -> B, collapses the cylinder direction
    CellularMap bottom_incl;   // A -> M_f
    CellularMap top_incl;      // B -> M_f

    std::array<std::vector<int>, 4> a_cell;  // A index -> cylinder index
    std::array<std::vector<int>, 4> b_cell;  // B index -> cylinder index
    std::array<std::vector<int>, 3> prism;   // A k-cell -> its (k+1)-prism
};

/// Mapping cylinder of f : A -> B. Requires dim A <= 2 and vertex/routing
/// data on f (chain data suffices for 2-cells).
MappingCylinder mapping_cylinder(const CellularMap& f);

}  // namespace padlab

#endif
