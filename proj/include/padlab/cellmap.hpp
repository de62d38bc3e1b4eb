// Cellular maps between DComplexes.
//
// A map carries an integer chain map in every dimension (the homological
// content) and, where available, combinatorial data: the vertex images, an
// oriented edge path for every 1-cell, and a carrier cell for every cell.
// The carrier of a cell is the smallest cell of the target whose closure
// contains the image; a map with a full monotone carrier assignment has the
// property that preimages of subcomplexes are subcomplexes, which is what
// `combinatorial` means here.

#ifndef PADLAB_CELLMAP_HPP
#define PADLAB_CELLMAP_HPP

#include "padlab/dcomplex.hpp"
#include "padlab/snf.hpp"

#include <optional>

namespace padlab {

class CellularMap {
public:
    CellularMap() = default;

    struct Data {
        ComplexPtr source, target;
        std::array<SpMat, 4> chain;
        std::vector<int> vertex_map;             // may be empty
        std::vector<Word> edge_routing;          // may be empty
        std::array<std::vector<Cell>, 4> carrier;  // any may be empty
        std::string name;
    };

    /// Validates chain-map and consistency conditions; throws on violation.
    explicit CellularMap(Data data);

    const ComplexPtr& source() const { return d_.source; }
    const ComplexPtr& target() const { return d_.target; }
    const SpMat& chain(int k) const { return d_.chain[k]; }
    const std::string& name() const { return d_.name; }

    bool has_vertex_map() const { return !d_.vertex_map.empty(); }
    int vertex_image(int v) const { return d_.vertex_map[v]; }
    const std::vector<int>& vertex_map() const { return d_.vertex_map; }

    bool has_routing() const { return !d_.edge_routing.empty(); }
    const Word& routing(int e) const { return d_.edge_routing[e]; }

    bool has_carriers() const;
    Cell carrier(Cell c) const { return d_.carrier[c.dim][c.idx]; }

    /// True when preimages of subcomplexes are subcomplexes.
    bool combinatorial() const { return combinatorial_; }

    /// Image of a word under the routing data.
    Word route_word(const Word& w) const;

    /// Push a k-chain through the map.
    IVector push(int k, const IVector& chain) const;

private:
    Data d_;
    bool combinatorial_ = false;
    void verify() const;
};

CellularMap identity_map(const ComplexPtr& x);

/// g after f; chain matrices multiply, routings substitute, carriers chain.
CellularMap compose(const CellularMap& g, const CellularMap& f);

/// Inclusion of a subcomplex, re-indexed as its own complex.
CellularMap inclusion_map(const InducedComplex& ind, const ComplexPtr& parent);

/// f restricted to a subcomplex A of its source.
CellularMap restrict(const CellularMap& f, const Subcomplex& a);

/// f restricted to A, with the target replaced by a subcomplex B containing
/// the image of A.
CellularMap restrict_into(const CellularMap& f, const InducedComplex& a, const InducedComplex& b);

/// {c : carrier(c) in B'}; requires f combinatorial.
Subcomplex preimage_subcomplex(const CellularMap& f, const Subcomplex& bprime);

/// Signed winding of f_* gamma against the fundamental cycle of the target,
/// which must be a circle. gamma must be a cycle.
Integer loop_degree(const CellularMap& f, const IVector& gamma);

/// Build the chain matrices of a map in dimensions 2..3 from carrier data by
/// exact solves in carrier closures (dimensions 0..1 come from the vertex map
/// and routings). Throws if some cell admits no chain image in its carrier's
/// closure.
CellularMap chain_map_from_carriers(ComplexPtr source, ComplexPtr target,
                                    std::vector<int> vertex_map,
                                    std::vector<Word> edge_routing,
                                    std::array<std::vector<Cell>, 4> carrier,
                                    std::string name = {});

}  // namespace padlab

#endif
