// Finite Delta-complexes of dimension <= 3.
//
// Cells are indexed per dimension in creation order; 1-cells carry ordered
// endpoints, 2-cells carry a cyclic word in oriented 1-cells (so polygon
// cells and identifications are allowed, not just simplices), and 3-cells
// carry a signed 2-cell boundary chain. Complexes are immutable once built
// and are shared by const pointer.

#ifndef PADLAB_DCOMPLEX_HPP
#define PADLAB_DCOMPLEX_HPP

#include "padlab/integer.hpp"

#include <array>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace padlab {

struct Cell {
    int dim = -1;
    int idx = -1;
    bool valid() const { return dim >= 0; }
    friend bool operator==(const Cell& a, const Cell& b) { return a.dim == b.dim && a.idx == b.idx; }
    friend bool operator!=(const Cell& a, const Cell& b) { return !(a == b); }
    friend bool operator<(const Cell& a, const Cell& b) {
        return a.dim != b.dim ? a.dim < b.dim : a.idx < b.idx;
    }
};

/// One oriented step along a 1-cell: sign +1 traverses tail->head.
struct EdgeStep {
    int edge = -1;
    int sign = 1;
    EdgeStep reversed() const { return {edge, -sign}; }
};
using Word = std::vector<EdgeStep>;

Word reversed(const Word& w);
/// Free reduction: cancel adjacent inverse pairs (including cyclically if
/// `cyclic`). Empty result means the word is null-homotopic in a graph.
Word free_reduce(Word w, bool cyclic = false);

struct ChainEntry {
    int cell = -1;
    Integer coeff;
};
using CellChain = std::vector<ChainEntry>;

class BuildError : public std::runtime_error {
public:
    BuildError(const std::string& what, Cell offending)
        : std::runtime_error(what), cell(offending) {}
    Cell cell;
};

struct ComplexSpec {
    std::vector<std::string> vertices;
    struct EdgeSpec {
        int tail = -1, head = -1;
        std::string label;
    };
    std::vector<EdgeSpec> edges;
    struct FaceSpec {
        Word word;
        std::string label;
        std::optional<std::vector<Integer>> incidence;  // checked against the word
    };
    std::vector<FaceSpec> faces;
    struct SolidSpec {
        CellChain boundary;
        std::string label;
    };
    std::vector<SolidSpec> solids;
    std::string name;
};

class DComplex;
using ComplexPtr = std::shared_ptr<const DComplex>;

class DComplex {
public:
    /// Validates the spec (dangling references, closed words, boundary of
    /// boundary zero) and freezes it. Prefer build_complex().
    explicit DComplex(ComplexSpec spec);

    int dim() const;
    Index count(int d) const { return static_cast<Index>(counts_[d]); }
    Index total_cells() const { return count(0) + count(1) + count(2) + count(3); }

    const std::string& label(Cell c) const { return labels_[c.dim][c.idx]; }
    const std::string& name() const { return name_; }

    int edge_tail(int e) const { return edges_[e].tail; }
    int edge_head(int e) const { return edges_[e].head; }
    /// Endpoint of an oriented step: source (at==0) or destination (at==1).
    int step_vertex(const EdgeStep& s, int at) const {
        bool head = (s.sign > 0) == (at == 1);
        return head ? edge_head(s.edge) : edge_tail(s.edge);
    }
    const Word& face_word(int f) const { return faces_[f].word; }
    const CellChain& solid_boundary(int s) const { return solids_[s].boundary; }

    /// Signed incidence matrix C_k -> C_{k-1}; k = 0 gives the 0 x |V| map.
    const SpMat& boundary_matrix(int k) const;

    Integer euler_characteristic() const;
    bool simplicial() const { return simplicial_; }
    bool is_connected() const;
    int vertex_component(int v) const { return vertex_component_[v]; }
    int component_count() const { return component_count_; }

    /// Cells of dimension d-1 referenced by cell (d, idx), with multiplicity.
    std::vector<int> facet_cells(int d, int idx) const;
    /// All cells in the closure of the given cell, grouped by dimension.
    std::array<std::vector<int>, 4> closure_of(Cell c) const;

    std::optional<Cell> find_label(const std::string& label) const;

    const ComplexSpec::EdgeSpec& edge(int e) const { return edges_[e]; }

    /// Abelianization of a word as a 1-chain.
    IVector word_chain(const Word& w) const;
    /// A 1-chain is exposed as a dense vector over the edge basis.
    bool is_cycle(const IVector& chain1) const;

private:
    std::string name_;
    std::array<std::vector<std::string>, 4> labels_;
    std::array<std::size_t, 4> counts_{0, 0, 0, 0};
    std::vector<ComplexSpec::EdgeSpec> edges_;
    struct Face {
        Word word;
    };
    std::vector<Face> faces_;
    struct Solid {
        CellChain boundary;
    };
    std::vector<Solid> solids_;
    bool simplicial_ = false;
    std::array<SpMat, 4> boundary_;
    std::vector<int> vertex_component_;
    int component_count_ = 0;

    void validate_and_build(const ComplexSpec& spec);
};

ComplexPtr build_complex(ComplexSpec spec);

class Subcomplex {
public:
    Subcomplex() = default;
    /// Downward closure of the given cells.
    Subcomplex(ComplexPtr parent, const std::vector<Cell>& generators);

    static Subcomplex full(ComplexPtr parent);
    static Subcomplex empty(ComplexPtr parent);

    const ComplexPtr& parent() const { return parent_; }
    bool contains(Cell c) const { return member_[c.dim].size() > std::size_t(c.idx) && member_[c.dim][c.idx]; }
    const std::vector<char>& mask(int d) const { return member_[d]; }
    std::vector<int> cells(int d) const;
    Index count(int d) const;
    int dim() const;
    bool is_connected() const;

    Subcomplex united(const Subcomplex& other) const;
    bool contains_subcomplex(const Subcomplex& other) const;

    /// Fundamental 1-chain when this subcomplex is a single circle
    /// (connected, every vertex of degree 2): the edges oriented coherently.
    std::optional<IVector> circle_cycle() const;

private:
    ComplexPtr parent_;
    std::array<std::vector<char>, 4> member_;
    friend Subcomplex skeleton(const ComplexPtr&, int);
};

/// All cells of dimension <= k.
Subcomplex skeleton(const ComplexPtr& x, int k);

/// A subcomplex re-indexed as a complex of its own, with cell maps back
/// and forth to the parent indexing.
struct InducedComplex {
    ComplexPtr complex;
    std::array<std::vector<int>, 4> to_parent;
    std::array<std::unordered_map<int, int>, 4> from_parent;
};
InducedComplex subcomplex_as_complex(const Subcomplex& sub, const std::string& name = {});

// Stock complexes used across the engine and its tests.

/// Cycle with m vertices and m edges; m = 1 is a single loop.
ComplexPtr circle(int m);
/// Solid triangle: one polygonal 2-cell on three boundary edges.
ComplexPtr disk_triangle();
/// Boundary of the 3-simplex (simplicial 2-sphere).
ComplexPtr sphere_simplicial();
/// Solid 3-simplex.
ComplexPtr ball3();
/// Torus as the standard one-vertex square identification.
ComplexPtr torus();
/// Projective plane: one vertex, one loop a, one 2-cell with word a^2.
ComplexPtr projective_plane();
/// One vertex, one loop a, one 2-cell with word a^m.
ComplexPtr moore_loop(int m);

}  // namespace padlab

#endif
