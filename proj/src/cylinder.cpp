#include "padlab/cylinder.hpp"

#include "padlab/subdivision.hpp"

namespace padlab {

MappingCylinder mapping_cylinder(const CellularMap& f) {
    const DComplex& A = *f.source();
    const DComplex& B = *f.target();
    if (A.dim() > 2)
        throw std::invalid_argument("mapping_cylinder: source of dimension 3 would overflow dim 3");
    if (!f.has_vertex_map() || !f.has_routing())
        throw std::invalid_argument("mapping_cylinder: need vertex and edge routing data");

    ComplexSpec spec;
    spec.name = "cyl(" + f.name() + ")";
    std::array<const std::vector<char>*, 4> all{nullptr, nullptr, nullptr, nullptr};
    SpecAppendResult b_app = append_to_spec(spec, B, all, "top:");
    SpecAppendResult a_app = append_to_spec(spec, A, all, "bot:");

    MappingCylinder cyl;
    for (int d = 0; d < 4; ++d) {
        cyl.a_cell[d] = a_app.new_index[d];
        cyl.b_cell[d] = b_app.new_index[d];
    }

    // Vertical edges P(v): bottom v -> top f(v).
    cyl.prism[0].assign(A.count(0), -1);
    for (Index v = 0; v < A.count(0); ++v) {
        cyl.prism[0][v] = (int)spec.edges.size();
        spec.edges.push_back({cyl.a_cell[0][v], cyl.b_cell[0][f.vertex_image((int)v)],
                              "P0:" + std::to_string(v)});
    }

    // Prism squares P(e): bottom e, climb, run back over the routing, drop.
    cyl.prism[1].assign(A.count(1), -1);
    for (Index e = 0; e < A.count(1); ++e) {
        cyl.prism[1][e] = (int)spec.faces.size();
        ComplexSpec::FaceSpec fs;
        fs.word.push_back({cyl.a_cell[1][e], 1});
        fs.word.push_back({cyl.prism[0][A.edge_head((int)e)], 1});
        for (const auto& s : reversed(f.routing((int)e)))
            fs.word.push_back({cyl.b_cell[1][s.edge], s.sign});
        fs.word.push_back({cyl.prism[0][A.edge_tail((int)e)], -1});
        fs.label = "P1:" + std::to_string(e);
        spec.faces.push_back(fs);
    }

    // Prism solids P(c): d P(c) = f(c) - c + P(dc).
    cyl.prism[2].assign(A.count(2), -1);
    for (Index c = 0; c < A.count(2); ++c) {
        cyl.prism[2][c] = (int)spec.solids.size();
        ComplexSpec::SolidSpec ss;
        std::map<int, Integer> acc;
        for (SpMat::InnerIterator it(f.chain(2), c); it; ++it)
            acc[cyl.b_cell[2][it.row()]] += it.value();
        acc[cyl.a_cell[2][c]] -= Integer(1);
        for (const auto& s : A.face_word((int)c))
            acc[cyl.prism[1][s.edge]] += Integer(s.sign);
        for (const auto& [cell, coeff] : acc)
            if (!coeff.is_zero()) ss.boundary.push_back({cell, coeff});
        ss.label = "P2:" + std::to_string(c);
        spec.solids.push_back(ss);
    }

    ComplexPtr M = build_complex(std::move(spec));
    cyl.complex = M;

    auto mask_from = [&](const std::array<std::vector<int>, 4>& idx) {
        Subcomplex s = Subcomplex::empty(M);
        std::vector<Cell> gens;
        for (int d = 0; d < 4; ++d)
            for (int i : idx[d])
                if (i >= 0) gens.push_back(Cell{d, i});
        return Subcomplex(M, gens);
    };
    cyl.bottom = mask_from(cyl.a_cell);
    cyl.top = mask_from(cyl.b_cell);

    // Inclusions.
    auto make_inclusion = [&](const DComplex& src, const std::array<std::vector<int>, 4>& idx,
                              const std::string& nm) {
        CellularMap::Data d;
        d.source = (&src == &A) ? f.source() : f.target();
        d.target = M;
        d.name = nm;
        for (int k = 0; k < 4; ++k) {
            std::vector<Eigen::Triplet<Integer>> t;
            for (Index i = 0; i < src.count(k); ++i) t.emplace_back(idx[k][i], i, Integer(1));
            d.chain[k] = SpMat(M->count(k), src.count(k));
            d.chain[k].setFromTriplets(t.begin(), t.end());
            d.carrier[k].resize(src.count(k));
            for (Index i = 0; i < src.count(k); ++i) d.carrier[k][i] = Cell{k, idx[k][i]};
        }
        d.vertex_map.resize(src.count(0));
        for (Index v = 0; v < src.count(0); ++v) d.vertex_map[v] = idx[0][v];
        d.edge_routing.resize(src.count(1));
        for (Index e = 0; e < src.count(1); ++e) d.edge_routing[e] = {EdgeStep{idx[1][e], 1}};
        return CellularMap(std::move(d));
    };
    cyl.bottom_incl = make_inclusion(A, cyl.a_cell, "bottom");
    cyl.top_incl = make_inclusion(B, cyl.b_cell, "top");

    // Projection M_f -> B.
    {
        CellularMap::Data d;
        d.source = M;
        d.target = f.target();
        d.name = "proj";
        d.vertex_map.resize(M->count(0));
        for (Index v = 0; v < B.count(0); ++v) d.vertex_map[cyl.b_cell[0][v]] = (int)v;
        for (Index v = 0; v < A.count(0); ++v)
            d.vertex_map[cyl.a_cell[0][v]] = f.vertex_image((int)v);
        d.edge_routing.resize(M->count(1));
        for (Index e = 0; e < B.count(1); ++e)
            d.edge_routing[cyl.b_cell[1][e]] = {EdgeStep{(int)e, 1}};
        for (Index e = 0; e < A.count(1); ++e)
            d.edge_routing[cyl.a_cell[1][e]] = f.routing((int)e);
        for (Index v = 0; v < A.count(0); ++v) d.edge_routing[cyl.prism[0][v]] = {};

        std::vector<Eigen::Triplet<Integer>> t0, t1, t2, t3;
        for (Index v = 0; v < M->count(0); ++v) t0.emplace_back(d.vertex_map[v], v, Integer(1));
        for (Index e = 0; e < M->count(1); ++e) {
            IVector ab = B.word_chain(d.edge_routing[e]);
            for (Index r = 0; r < ab.size(); ++r)
                if (!ab(r).is_zero()) t1.emplace_back(r, e, ab(r));
        }
        for (Index c = 0; c < B.count(2); ++c) t2.emplace_back(c, cyl.b_cell[2][c], Integer(1));
        for (Index c = 0; c < A.count(2); ++c)
            for (SpMat::InnerIterator it(f.chain(2), c); it; ++it)
                t2.emplace_back(it.row(), cyl.a_cell[2][c], it.value());
        for (Index s = 0; s < B.count(3); ++s) t3.emplace_back(s, cyl.b_cell[3][s], Integer(1));
        // Prism cells collapse: zero columns in their own dimension.
        d.chain[0] = SpMat(B.count(0), M->count(0));
        d.chain[0].setFromTriplets(t0.begin(), t0.end());
        d.chain[1] = SpMat(B.count(1), M->count(1));
        d.chain[1].setFromTriplets(t1.begin(), t1.end());
        d.chain[2] = SpMat(B.count(2), M->count(2));
        d.chain[2].setFromTriplets(t2.begin(), t2.end());
        d.chain[3] = SpMat(B.count(3), M->count(3));
        d.chain[3].setFromTriplets(t3.begin(), t3.end());

        if (f.has_carriers()) {
            for (int k = 0; k < 4; ++k) d.carrier[k].resize(M->count(k));
            for (int k = 0; k < 4; ++k) {
                for (Index i = 0; i < B.count(k); ++i)
                    d.carrier[k][cyl.b_cell[k][i]] = Cell{k, (int)i};
                for (Index i = 0; i < A.count(k); ++i)
                    d.carrier[k][cyl.a_cell[k][i]] = f.carrier(Cell{k, (int)i});
            }
            for (int k = 0; k < 3; ++k)
                for (Index i = 0; i < A.count(k); ++i)
                    d.carrier[k + 1][cyl.prism[k][i]] = f.carrier(Cell{k, (int)i});
        }
        cyl.proj = CellularMap(std::move(d));
    }
    return cyl;
}

}  // namespace padlab
