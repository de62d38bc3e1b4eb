#include "padlab/subdivision.hpp"

namespace padlab {

SpecAppendResult append_to_spec(ComplexSpec& spec, const DComplex& x,
                                const std::array<const std::vector<char>*, 4>& keep,
                                const std::string& label_prefix) {
    SpecAppendResult res;
    auto kept = [&](int d, int i) { return keep[d] == nullptr || (*keep[d])[i]; };
    for (int d = 0; d < 4; ++d) res.new_index[d].assign(x.count(d), -1);

    for (Index v = 0; v < x.count(0); ++v) {
        if (!kept(0, (int)v)) continue;
        res.new_index[0][v] = (int)spec.vertices.size();
        spec.vertices.push_back(label_prefix + x.label(Cell{0, (int)v}));
    }
    for (Index e = 0; e < x.count(1); ++e) {
        if (!kept(1, (int)e)) continue;
        ComplexSpec::EdgeSpec es;
        es.tail = res.new_index[0][x.edge_tail((int)e)];
        es.head = res.new_index[0][x.edge_head((int)e)];
        if (es.tail < 0 || es.head < 0)
            throw std::logic_error("append_to_spec: kept edge over dropped vertex");
        es.label = label_prefix + x.label(Cell{1, (int)e});
        res.new_index[1][e] = (int)spec.edges.size();
        spec.edges.push_back(es);
    }
    for (Index f = 0; f < x.count(2); ++f) {
        if (!kept(2, (int)f)) continue;
        ComplexSpec::FaceSpec fs;
        for (const auto& s : x.face_word((int)f)) {
            int ne = res.new_index[1][s.edge];
            if (ne < 0) throw std::logic_error("append_to_spec: kept face over dropped edge");
            fs.word.push_back({ne, s.sign});
        }
        fs.label = label_prefix + x.label(Cell{2, (int)f});
        res.new_index[2][f] = (int)spec.faces.size();
        spec.faces.push_back(fs);
    }
    for (Index s = 0; s < x.count(3); ++s) {
        if (!kept(3, (int)s)) continue;
        ComplexSpec::SolidSpec ss;
        for (const auto& ent : x.solid_boundary((int)s)) {
            int nf = res.new_index[2][ent.cell];
            if (nf < 0) throw std::logic_error("append_to_spec: kept solid over dropped face");
            ss.boundary.push_back({nf, ent.coeff});
        }
        ss.label = label_prefix + x.label(Cell{3, (int)s});
        res.new_index[3][s] = (int)spec.solids.size();
        spec.solids.push_back(ss);
    }
    return res;
}

namespace {

SubdivisionResult subdivide_once(const ComplexPtr& xp) {
    const DComplex& X = *xp;
    const Index V = X.count(0), E = X.count(1), F = X.count(2), S = X.count(3);

    ComplexSpec spec;
    spec.name = "sd(" + X.name() + ")";
    // Vertices: originals, then edge centers, then face centers for
    // subdivided (nonempty-word) faces.
    for (Index v = 0; v < V; ++v) spec.vertices.push_back(X.label(Cell{0, (int)v}));
    for (Index e = 0; e < E; ++e) spec.vertices.push_back("b1:" + std::to_string(e));
    std::vector<int> face_center(F, -1);
    for (Index f = 0; f < F; ++f)
        if (!X.face_word((int)f).empty()) {
            face_center[f] = (int)spec.vertices.size();
            spec.vertices.push_back("b2:" + std::to_string(f));
        }
    auto bvert = [&](int e) { return (int)V + e; };

    // Edges: two halves per original edge, oriented along it.
    for (Index e = 0; e < E; ++e) {
        spec.edges.push_back({X.edge_tail((int)e), bvert((int)e), "h0:" + std::to_string(e)});
        spec.edges.push_back({bvert((int)e), X.edge_head((int)e), "h1:" + std::to_string(e)});
    }
    auto half = [&](int e, int which) { return 2 * e + which; };

    // Spokes and triangles per face position.
    struct FanInfo {
        int first_spoke_m = -1;   // m_i: edge-center -> face-center, per position
        int first_spoke_n = -1;   // n_i: corner_i -> face-center, per position
        int first_tri = -1;       // 2 triangles per position
        int L = 0;
        int kept_face = -1;       // for empty-word faces carried over
    };
    std::vector<FanInfo> fan(F);
    for (Index f = 0; f < F; ++f) {
        const Word& w = X.face_word((int)f);
        FanInfo& fi = fan[f];
        fi.L = (int)w.size();
        if (w.empty()) continue;
        fi.first_spoke_m = (int)spec.edges.size();
        for (int i = 0; i < fi.L; ++i)
            spec.edges.push_back({bvert(w[i].edge), face_center[f],
                                  "m:" + std::to_string(f) + ":" + std::to_string(i)});
        fi.first_spoke_n = (int)spec.edges.size();
        for (int i = 0; i < fi.L; ++i) {
            int corner = X.step_vertex(w[i], 0);
            spec.edges.push_back({corner, face_center[f],
                                  "n:" + std::to_string(f) + ":" + std::to_string(i)});
        }
    }
    for (Index f = 0; f < F; ++f) {
        const Word& w = X.face_word((int)f);
        FanInfo& fi = fan[f];
        if (w.empty()) {
            fi.kept_face = (int)spec.faces.size();
            ComplexSpec::FaceSpec fs;
            fs.label = X.label(Cell{2, (int)f});
            spec.faces.push_back(fs);
            continue;
        }
        fi.first_tri = (int)spec.faces.size();
        for (int i = 0; i < fi.L; ++i) {
            const EdgeStep& st = w[i];
            int mi = fi.first_spoke_m + i;
            int ni = fi.first_spoke_n + i;
            int ni1 = fi.first_spoke_n + (i + 1) % fi.L;
            // corner_i -> b_e -> b_F -> corner_i
            ComplexSpec::FaceSpec plus;
            plus.word = {st.sign > 0 ? EdgeStep{half(st.edge, 0), 1}
                                     : EdgeStep{half(st.edge, 1), -1},
                         {mi, 1},
                         {ni, -1}};
            plus.label = "t+:" + std::to_string(f) + ":" + std::to_string(i);
            spec.faces.push_back(plus);
            // b_e -> corner_{i+1} -> b_F -> b_e
            ComplexSpec::FaceSpec minus;
            minus.word = {st.sign > 0 ? EdgeStep{half(st.edge, 1), 1}
                                      : EdgeStep{half(st.edge, 0), -1},
                          {ni1, 1},
                          {mi, -1}};
            minus.label = "t-:" + std::to_string(f) + ":" + std::to_string(i);
            spec.faces.push_back(minus);
        }
    }

    // The subdivision operator in dim 2, needed to rewrite solid boundaries.
    auto sd_face_chain = [&](int f) {
        std::vector<std::pair<int, Integer>> out;
        if (fan[f].kept_face >= 0) {
            out.emplace_back(fan[f].kept_face, Integer(1));
        } else {
            for (int i = 0; i < fan[f].L; ++i) {
                out.emplace_back(fan[f].first_tri + 2 * i, Integer(1));
                out.emplace_back(fan[f].first_tri + 2 * i + 1, Integer(1));
            }
        }
        return out;
    };

    for (Index s = 0; s < S; ++s) {
        ComplexSpec::SolidSpec ss;
        std::map<int, Integer> acc;
        for (const auto& ent : X.solid_boundary((int)s))
            for (const auto& [nf, c] : sd_face_chain(ent.cell)) acc[nf] += ent.coeff * c;
        for (const auto& [nf, c] : acc)
            if (!c.is_zero()) ss.boundary.push_back({nf, c});
        ss.label = X.label(Cell{3, (int)s});
        spec.solids.push_back(ss);
    }

    ComplexPtr sd = build_complex(std::move(spec));

    SubdivisionResult res;
    res.complex = sd;

    // Subdivision operator.
    {
        std::vector<Eigen::Triplet<Integer>> t0, t1, t2, t3;
        for (Index v = 0; v < V; ++v) t0.emplace_back(v, v, Integer(1));
        for (Index e = 0; e < E; ++e) {
            t1.emplace_back(half((int)e, 0), e, Integer(1));
            t1.emplace_back(half((int)e, 1), e, Integer(1));
        }
        for (Index f = 0; f < F; ++f)
            for (const auto& [nf, c] : sd_face_chain((int)f)) t2.emplace_back(nf, f, c);
        for (Index s = 0; s < S; ++s) t3.emplace_back(s, s, Integer(1));
        res.sd_op[0] = SpMat(sd->count(0), V);
        res.sd_op[0].setFromTriplets(t0.begin(), t0.end());
        res.sd_op[1] = SpMat(sd->count(1), E);
        res.sd_op[1].setFromTriplets(t1.begin(), t1.end());
        res.sd_op[2] = SpMat(sd->count(2), F);
        res.sd_op[2].setFromTriplets(t2.begin(), t2.end());
        res.sd_op[3] = SpMat(sd->count(3), S);
        res.sd_op[3].setFromTriplets(t3.begin(), t3.end());
    }

    // Carrier map sd X -> X.
    {
        std::vector<int> vmap(sd->count(0));
        std::array<std::vector<Cell>, 4> car;
        for (int d = 0; d < 4; ++d) car[d].resize(sd->count(d));
        for (Index v = 0; v < V; ++v) {
            vmap[v] = (int)v;
            car[0][v] = Cell{0, (int)v};
        }
        for (Index e = 0; e < E; ++e) {
            vmap[bvert((int)e)] = X.edge_tail((int)e);
            car[0][bvert((int)e)] = Cell{1, (int)e};
        }
        for (Index f = 0; f < F; ++f)
            if (face_center[f] >= 0) {
                vmap[face_center[f]] = X.step_vertex(X.face_word((int)f)[0], 0);
                car[0][face_center[f]] = Cell{2, (int)f};
            }

        std::vector<Word> routing(sd->count(1));
        for (Index e = 0; e < E; ++e) {
            routing[half((int)e, 0)] = {};                      // tail -> tail
            routing[half((int)e, 1)] = {EdgeStep{(int)e, 1}};   // tail -> head
            car[1][half((int)e, 0)] = Cell{1, (int)e};
            car[1][half((int)e, 1)] = Cell{1, (int)e};
        }
        for (Index f = 0; f < F; ++f) {
            const Word& w = X.face_word((int)f);
            if (w.empty()) continue;
            // W_j: path along the word from corner_0 to corner_j.
            std::vector<Word> walk(w.size() + 1);
            for (std::size_t j = 0; j < w.size(); ++j) {
                walk[j + 1] = walk[j];
                walk[j + 1].push_back(w[j]);
            }
            for (int i = 0; i < fan[f].L; ++i) {
                // m_i: from b_{e_i}; its carrier vertex is tail(e_i), reached
                // at word position i (sign +) or i+1 (sign -).
                int at = w[i].sign > 0 ? i : i + 1;
                routing[fan[f].first_spoke_m + i] = reversed(walk[at]);
                car[1][fan[f].first_spoke_m + i] = Cell{2, (int)f};
                routing[fan[f].first_spoke_n + i] = reversed(walk[i]);
                car[1][fan[f].first_spoke_n + i] = Cell{2, (int)f};
            }
        }
        for (Index f = 0; f < F; ++f) {
            if (fan[f].kept_face >= 0) {
                car[2][fan[f].kept_face] = Cell{2, (int)f};
                continue;
            }
            for (int i = 0; i < 2 * fan[f].L; ++i)
                car[2][fan[f].first_tri + i] = Cell{2, (int)f};
        }
        for (Index s = 0; s < S; ++s) car[3][s] = Cell{3, (int)s};

        // Explicit chain matrices. In dim 2 the whole fan collapses except
        // the last triangle, which carries the face; this is forced by the
        // telescoping of the spoke paths and stays correct when the face has
        // zero boundary chain (where a naive solve could drop the class).
        CellularMap::Data data;
        data.source = sd;
        data.target = xp;
        data.name = "sd-carrier";
        data.chain[0] = SpMat(V, sd->count(0));
        {
            std::vector<Eigen::Triplet<Integer>> t;
            for (Index v = 0; v < sd->count(0); ++v) t.emplace_back(vmap[v], v, Integer(1));
            data.chain[0].setFromTriplets(t.begin(), t.end());
        }
        data.chain[1] = SpMat(E, sd->count(1));
        {
            std::vector<Eigen::Triplet<Integer>> t;
            for (Index e = 0; e < sd->count(1); ++e) {
                IVector ab = X.word_chain(routing[e]);
                for (Index r = 0; r < ab.size(); ++r)
                    if (!ab(r).is_zero()) t.emplace_back(r, e, ab(r));
            }
            data.chain[1].setFromTriplets(t.begin(), t.end());
        }
        data.chain[2] = SpMat(F, sd->count(2));
        {
            std::vector<Eigen::Triplet<Integer>> t;
            for (Index f = 0; f < F; ++f) {
                if (fan[f].kept_face >= 0)
                    t.emplace_back(f, fan[f].kept_face, Integer(1));
                else
                    t.emplace_back(f, fan[f].first_tri + 2 * (fan[f].L - 1) + 1, Integer(1));
            }
            data.chain[2].setFromTriplets(t.begin(), t.end());
        }
        data.chain[3] = SpMat(S, sd->count(3));
        {
            std::vector<Eigen::Triplet<Integer>> t;
            for (Index s = 0; s < S; ++s) t.emplace_back(s, s, Integer(1));
            data.chain[3].setFromTriplets(t.begin(), t.end());
        }
        data.vertex_map = std::move(vmap);
        data.edge_routing = std::move(routing);
        data.carrier = std::move(car);
        res.carrier_map = CellularMap(std::move(data));
    }
    return res;
}

}  // namespace

SubdivisionResult barycentric_subdivision(const ComplexPtr& x, int times) {
    if (times < 1) throw std::invalid_argument("barycentric_subdivision: times >= 1");
    SubdivisionResult acc = subdivide_once(x);
    for (int i = 1; i < times; ++i) {
        SubdivisionResult next = subdivide_once(acc.complex);
        next.carrier_map = compose(acc.carrier_map, next.carrier_map);
        for (int k = 0; k < 4; ++k) next.sd_op[k] = SpMat(next.sd_op[k] * acc.sd_op[k]);
        acc = std::move(next);
    }
    return acc;
}

}  // namespace padlab
