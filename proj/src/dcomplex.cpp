#include "padlab/dcomplex.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace padlab {

Word reversed(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->reversed());
    return out;
}

Word free_reduce(Word w, bool cyclic) {
    Word out;
    for (const auto& s : w) {
        if (!out.empty() && out.back().edge == s.edge && out.back().sign == -s.sign)
            out.pop_back();
        else
            out.push_back(s);
    }
    if (cyclic) {
        while (out.size() >= 2 && out.front().edge == out.back().edge &&
               out.front().sign == -out.back().sign) {
            out.erase(out.begin());
            out.pop_back();
        }
    }
    return out;
}

namespace {

struct UnionFind {
    std::vector<int> up;
    explicit UnionFind(int n) : up(n) { std::iota(up.begin(), up.end(), 0); }
    int find(int a) {
        while (up[a] != a) a = up[a] = up[up[a]];
        return a;
    }
    void unite(int a, int b) { up[find(a)] = find(b); }
};

}  // namespace

DComplex::DComplex(ComplexSpec spec) { validate_and_build(spec); }

void DComplex::validate_and_build(const ComplexSpec& spec) {
    name_ = spec.name;
    counts_[0] = spec.vertices.size();
    counts_[1] = spec.edges.size();
    counts_[2] = spec.faces.size();
    counts_[3] = spec.solids.size();
    labels_[0] = spec.vertices;
    labels_[1].reserve(spec.edges.size());
    labels_[2].reserve(spec.faces.size());
    labels_[3].reserve(spec.solids.size());

    const int nv = static_cast<int>(counts_[0]);
    for (std::size_t e = 0; e < spec.edges.size(); ++e) {
        const auto& es = spec.edges[e];
        if (es.tail < 0 || es.tail >= nv || es.head < 0 || es.head >= nv)
            throw BuildError("1-cell references a missing vertex", Cell{1, (int)e});
        edges_.push_back(es);
        labels_[1].push_back(es.label);
    }

    const int ne = static_cast<int>(counts_[1]);
    for (std::size_t f = 0; f < spec.faces.size(); ++f) {
        const auto& fs = spec.faces[f];
        for (const auto& s : fs.word) {
            if (s.edge < 0 || s.edge >= ne)
                throw BuildError("2-cell word references a missing 1-cell", Cell{2, (int)f});
            if (s.sign != 1 && s.sign != -1)
                throw BuildError("2-cell word carries a non-unit sign", Cell{2, (int)f});
        }
        // The word must trace a closed edge path.
        const Word& w = fs.word;
        for (std::size_t i = 0; i < w.size(); ++i) {
            const EdgeStep& cur = w[i];
            const EdgeStep& nxt = w[(i + 1) % w.size()];
            if (step_vertex(cur, 1) != step_vertex(nxt, 0))
                throw BuildError("2-cell word is not a closed edge path", Cell{2, (int)f});
        }
        faces_.push_back(Face{fs.word});
        labels_[2].push_back(fs.label);
    }

    const int nf = static_cast<int>(counts_[2]);
    for (std::size_t s = 0; s < spec.solids.size(); ++s) {
        for (const auto& ent : spec.solids[s].boundary)
            if (ent.cell < 0 || ent.cell >= nf)
                throw BuildError("3-cell boundary references a missing 2-cell", Cell{3, (int)s});
        solids_.push_back(Solid{spec.solids[s].boundary});
        labels_[3].push_back(spec.solids[s].label);
    }

    // Incidence matrices.
    boundary_[0] = SpMat(0, count(0));
    {
        std::vector<Eigen::Triplet<Integer>> t;
        for (int e = 0; e < ne; ++e) {
            if (edges_[e].head != edges_[e].tail) {
                t.emplace_back(edges_[e].head, e, Integer(1));
                t.emplace_back(edges_[e].tail, e, Integer(-1));
            }
        }
        boundary_[1] = SpMat(count(0), count(1));
        boundary_[1].setFromTriplets(t.begin(), t.end());
    }
    {
        std::vector<Eigen::Triplet<Integer>> t;
        for (int f = 0; f < nf; ++f)
            for (const auto& s : faces_[f].word)
                t.emplace_back(s.edge, f, Integer(s.sign));
        boundary_[2] = SpMat(count(1), count(2));
        boundary_[2].setFromTriplets(t.begin(), t.end());
    }
    {
        std::vector<Eigen::Triplet<Integer>> t;
        for (std::size_t s = 0; s < solids_.size(); ++s)
            for (const auto& ent : solids_[s].boundary)
                if (!ent.coeff.is_zero()) t.emplace_back(ent.cell, (Index)s, ent.coeff);
        boundary_[3] = SpMat(count(2), count(3));
        boundary_[3].setFromTriplets(t.begin(), t.end());
    }

    // Supplied incidence rows must agree with the word abelianization.
    for (std::size_t f = 0; f < spec.faces.size(); ++f) {
        if (!spec.faces[f].incidence) continue;
        const auto& inc = *spec.faces[f].incidence;
        if ((Index)inc.size() != count(1))
            throw BuildError("2-cell incidence row has the wrong length", Cell{2, (int)f});
        IVector w = word_chain(faces_[f].word);
        for (Index e = 0; e < count(1); ++e)
            if (w(e) != inc[e])
                throw BuildError("2-cell word/incidence mismatch", Cell{2, (int)f});
    }

    // boundary of boundary vanishes.
    {
        SpMat dd = boundary_[1] * boundary_[2];
        for (Index k = 0; k < dd.outerSize(); ++k)
            for (SpMat::InnerIterator it(dd, k); it; ++it)
                if (!it.value().is_zero())
                    throw BuildError("boundary of boundary nonzero at a 2-cell", Cell{2, (int)it.col()});
        SpMat dd3 = boundary_[2] * boundary_[3];
        for (Index k = 0; k < dd3.outerSize(); ++k)
            for (SpMat::InnerIterator it(dd3, k); it; ++it)
                if (!it.value().is_zero())
                    throw BuildError("boundary of boundary nonzero at a 3-cell", Cell{3, (int)it.col()});
    }

    // Simplicial flag: cells are simplices determined by distinct vertex sets.
    simplicial_ = true;
    std::set<std::vector<int>> seen;
    for (int e = 0; e < ne && simplicial_; ++e) {
        std::vector<int> vs{edges_[e].tail, edges_[e].head};
        std::sort(vs.begin(), vs.end());
        if (vs[0] == vs[1] || !seen.insert(vs).second) simplicial_ = false;
    }
    seen.clear();
    for (int f = 0; f < nf && simplicial_; ++f) {
        const Word& w = faces_[f].word;
        if (w.size() != 3) { simplicial_ = false; break; }
        std::vector<int> vs;
        for (const auto& s : w) vs.push_back(step_vertex(s, 0));
        std::sort(vs.begin(), vs.end());
        if (vs[0] == vs[1] || vs[1] == vs[2] || !seen.insert(vs).second) simplicial_ = false;
    }
    seen.clear();
    for (std::size_t s = 0; s < solids_.size() && simplicial_; ++s) {
        if (solids_[s].boundary.size() != 4) { simplicial_ = false; break; }
        std::set<int> vset;
        std::vector<int> fs;
        for (const auto& ent : solids_[s].boundary) {
            if (abs(ent.coeff) != Integer(1)) { simplicial_ = false; break; }
            fs.push_back(ent.cell);
            for (const auto& st : faces_[ent.cell].word) vset.insert(step_vertex(st, 0));
        }
        std::sort(fs.begin(), fs.end());
        if (!simplicial_ || vset.size() != 4 ||
            std::adjacent_find(fs.begin(), fs.end()) != fs.end() || !seen.insert(fs).second)
            simplicial_ = false;
    }

    // Vertex components.
    UnionFind uf(nv);
    for (const auto& e : edges_) uf.unite(e.tail, e.head);
    vertex_component_.assign(nv, -1);
    component_count_ = 0;
    std::unordered_map<int, int> root_to_id;
    for (int v = 0; v < nv; ++v) {
        int r = uf.find(v);
        auto it = root_to_id.find(r);
        if (it == root_to_id.end()) it = root_to_id.emplace(r, component_count_++).first;
        vertex_component_[v] = it->second;
    }
}

int DComplex::dim() const {
    for (int d = 3; d >= 0; --d)
        if (counts_[d] > 0) return d;
    return -1;
}

const SpMat& DComplex::boundary_matrix(int k) const {
    if (k < 0 || k > 3) throw std::out_of_range("boundary_matrix: dimension out of range");
    return boundary_[k];
}

Integer DComplex::euler_characteristic() const {
    return Integer((long long)counts_[0]) - Integer((long long)counts_[1]) +
           Integer((long long)counts_[2]) - Integer((long long)counts_[3]);
}

bool DComplex::is_connected() const { return component_count_ <= 1; }

std::vector<int> DComplex::facet_cells(int d, int idx) const {
    std::vector<int> out;
    if (d == 1) {
        out.push_back(edges_[idx].tail);
        out.push_back(edges_[idx].head);
    } else if (d == 2) {
        for (const auto& s : faces_[idx].word) out.push_back(s.edge);
    } else if (d == 3) {
        for (const auto& ent : solids_[idx].boundary) out.push_back(ent.cell);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::array<std::vector<int>, 4> DComplex::closure_of(Cell c) const {
    std::array<std::set<int>, 4> acc;
    acc[c.dim].insert(c.idx);
    for (int d = c.dim; d >= 1; --d)
        for (int idx : acc[d])
            for (int f : facet_cells(d, idx)) acc[d - 1].insert(f);
    std::array<std::vector<int>, 4> out;
    for (int d = 0; d < 4; ++d) out[d].assign(acc[d].begin(), acc[d].end());
    return out;
}

std::optional<Cell> DComplex::find_label(const std::string& label) const {
    for (int d = 0; d < 4; ++d)
        for (std::size_t i = 0; i < labels_[d].size(); ++i)
            if (labels_[d][i] == label) return Cell{d, (int)i};
    return std::nullopt;
}

IVector DComplex::word_chain(const Word& w) const {
    IVector v = IVector::Zero(count(1));
    for (const auto& s : w) v(s.edge) += Integer(s.sign);
    return v;
}

bool DComplex::is_cycle(const IVector& chain1) const {
    IVector b = boundary_[1] * chain1;
    for (Index i = 0; i < b.size(); ++i)
        if (!b(i).is_zero()) return false;
    return true;
}

ComplexPtr build_complex(ComplexSpec spec) {
    return std::make_shared<DComplex>(std::move(spec));
}

// ---------------------------------------------------------------------------
// Subcomplex

Subcomplex::Subcomplex(ComplexPtr parent, const std::vector<Cell>& generators)
    : parent_(std::move(parent)) {
    for (int d = 0; d < 4; ++d) member_[d].assign(parent_->count(d), 0);
    for (const Cell& c : generators) {
        auto cl = parent_->closure_of(c);
        for (int d = 0; d < 4; ++d)
            for (int idx : cl[d]) member_[d][idx] = 1;
    }
}

Subcomplex Subcomplex::full(ComplexPtr parent) {
    Subcomplex s;
    s.parent_ = std::move(parent);
    for (int d = 0; d < 4; ++d) s.member_[d].assign(s.parent_->count(d), 1);
    return s;
}

Subcomplex Subcomplex::empty(ComplexPtr parent) {
    Subcomplex s;
    s.parent_ = std::move(parent);
    for (int d = 0; d < 4; ++d) s.member_[d].assign(s.parent_->count(d), 0);
    return s;
}

std::vector<int> Subcomplex::cells(int d) const {
    std::vector<int> out;
    for (std::size_t i = 0; i < member_[d].size(); ++i)
        if (member_[d][i]) out.push_back((int)i);
    return out;
}

Index Subcomplex::count(int d) const {
    Index n = 0;
    for (char m : member_[d]) n += (m != 0);
    return n;
}

int Subcomplex::dim() const {
    for (int d = 3; d >= 0; --d)
        if (count(d) > 0) return d;
    return -1;
}

bool Subcomplex::is_connected() const {
    auto verts = cells(0);
    if (verts.empty()) return true;
    UnionFind uf(parent_->count(0));
    for (int e : cells(1)) uf.unite(parent_->edge_tail(e), parent_->edge_head(e));
    int root = uf.find(verts[0]);
    for (int v : verts)
        if (uf.find(v) != root) return false;
    return true;
}

Subcomplex Subcomplex::united(const Subcomplex& other) const {
    if (parent_ != other.parent_) throw std::invalid_argument("united: different parents");
    Subcomplex s = *this;
    for (int d = 0; d < 4; ++d)
        for (std::size_t i = 0; i < member_[d].size(); ++i)
            if (other.member_[d][i]) s.member_[d][i] = 1;
    return s;
}

bool Subcomplex::contains_subcomplex(const Subcomplex& other) const {
    if (parent_ != other.parent_) return false;
    for (int d = 0; d < 4; ++d)
        for (std::size_t i = 0; i < member_[d].size(); ++i)
            if (other.member_[d][i] && !member_[d][i]) return false;
    return true;
}

std::optional<IVector> Subcomplex::circle_cycle() const {
    if (count(2) > 0 || count(3) > 0) return std::nullopt;
    auto es = cells(1);
    if (es.empty() || !is_connected()) return std::nullopt;
    // Each member vertex must meet exactly two edge ends.
    std::unordered_map<int, int> degree;
    for (int e : es) {
        degree[parent_->edge_tail(e)]++;
        degree[parent_->edge_head(e)]++;
    }
    for (int v : cells(0)) {
        auto it = degree.find(v);
        if (it == degree.end() || it->second != 2) return std::nullopt;
    }
    // Walk the cycle and orient coherently.
    std::unordered_map<int, std::vector<int>> at;  // vertex -> incident member edges
    for (int e : es) {
        at[parent_->edge_tail(e)].push_back(e);
        at[parent_->edge_head(e)].push_back(e);
    }
    IVector z = IVector::Zero(parent_->count(1));
    int e0 = es[0];
    int cur_edge = e0;
    int cur_sign = 1;
    std::size_t steps = 0;
    do {
        z(cur_edge) += Integer(cur_sign);
        int dest = cur_sign > 0 ? parent_->edge_head(cur_edge) : parent_->edge_tail(cur_edge);
        if (++steps > es.size()) return std::nullopt;
        int next = -1;
        for (int cand : at[dest])
            if (cand != cur_edge) next = cand;
        if (next == -1) {
            // Loop edge at this vertex traversed twice, only possible when m=1.
            next = cur_edge;
        }
        cur_sign = (parent_->edge_tail(next) == dest) ? 1 : -1;
        cur_edge = next;
    } while (!(cur_edge == e0 && steps < es.size()) && steps < es.size());
    if (steps != es.size()) return std::nullopt;
    return z;
}

Subcomplex skeleton(const ComplexPtr& x, int k) {
    Subcomplex s = Subcomplex::empty(x);
    for (int d = 0; d <= std::min(k, 3); ++d)
        for (Index i = 0; i < x->count(d); ++i) s.member_[d][i] = 1;
    return s;
}

InducedComplex subcomplex_as_complex(const Subcomplex& sub, const std::string& name) {
    const DComplex& X = *sub.parent();
    InducedComplex out;
    for (int d = 0; d < 4; ++d) {
        out.to_parent[d] = sub.cells(d);
        for (std::size_t i = 0; i < out.to_parent[d].size(); ++i)
            out.from_parent[d][out.to_parent[d][i]] = (int)i;
    }
    ComplexSpec spec;
    spec.name = name.empty() ? X.name() + ":sub" : name;
    for (int v : out.to_parent[0]) spec.vertices.push_back(X.label(Cell{0, v}));
    for (int e : out.to_parent[1]) {
        ComplexSpec::EdgeSpec es;
        es.tail = out.from_parent[0].at(X.edge_tail(e));
        es.head = out.from_parent[0].at(X.edge_head(e));
        es.label = X.label(Cell{1, e});
        spec.edges.push_back(es);
    }
    for (int f : out.to_parent[2]) {
        ComplexSpec::FaceSpec fs;
        for (const auto& s : X.face_word(f))
            fs.word.push_back({out.from_parent[1].at(s.edge), s.sign});
        fs.label = X.label(Cell{2, f});
        spec.faces.push_back(fs);
    }
    for (int s : out.to_parent[3]) {
        ComplexSpec::SolidSpec ss;
        for (const auto& ent : X.solid_boundary(s))
            ss.boundary.push_back({out.from_parent[2].at(ent.cell), ent.coeff});
        ss.label = X.label(Cell{3, s});
        spec.solids.push_back(ss);
    }
    out.complex = build_complex(std::move(spec));
    return out;
}

// ---------------------------------------------------------------------------
// Stock complexes

ComplexPtr circle(int m) {
    if (m < 1) throw std::invalid_argument("circle: need at least one edge");
    ComplexSpec spec;
    spec.name = "circle(" + std::to_string(m) + ")";
    for (int i = 0; i < m; ++i) spec.vertices.push_back("v" + std::to_string(i));
    for (int i = 0; i < m; ++i)
        spec.edges.push_back({i, (i + 1) % m, "circle:edge:" + std::to_string(i)});
    return build_complex(std::move(spec));
}

ComplexPtr disk_triangle() {
    ComplexSpec spec;
    spec.name = "disk";
    spec.vertices = {"v0", "v1", "v2"};
    spec.edges.push_back({0, 1, "e01"});
    spec.edges.push_back({1, 2, "e12"});
    spec.edges.push_back({0, 2, "e02"});
    ComplexSpec::FaceSpec f;
    f.word = {{0, 1}, {1, 1}, {2, -1}};
    f.label = "F";
    spec.faces.push_back(f);
    return build_complex(std::move(spec));
}

ComplexPtr sphere_simplicial() {
    ComplexSpec spec;
    spec.name = "boundary-3-simplex";
    spec.vertices = {"v0", "v1", "v2", "v3"};
    // Edge (i,j), i<j, ordered lexicographically.
    std::vector<std::pair<int, int>> pairs = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    std::map<std::pair<int, int>, int> eidx;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        spec.edges.push_back({pairs[i].first, pairs[i].second,
                              "e" + std::to_string(pairs[i].first) + std::to_string(pairs[i].second)});
        eidx[pairs[i]] = (int)i;
    }
    // Face [a,b,c], a<b<c: word (ab)(bc)(ac)^-1.
    std::vector<std::array<int, 3>> tris = {{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}};
    for (const auto& t : tris) {
        ComplexSpec::FaceSpec f;
        f.word = {{eidx[{t[0], t[1]}], 1}, {eidx[{t[1], t[2]}], 1}, {eidx[{t[0], t[2]}], -1}};
        f.label = "f" + std::to_string(t[0]) + std::to_string(t[1]) + std::to_string(t[2]);
        spec.faces.push_back(f);
    }
    return build_complex(std::move(spec));
}

ComplexPtr ball3() {
    // Reuse the sphere spec and attach the solid with alternating signs.
    ComplexSpec spec;
    spec.name = "3-ball";
    ComplexPtr sphere = sphere_simplicial();
    for (Index v = 0; v < sphere->count(0); ++v) spec.vertices.push_back(sphere->label(Cell{0, (int)v}));
    for (Index e = 0; e < sphere->count(1); ++e)
        spec.edges.push_back({sphere->edge_tail((int)e), sphere->edge_head((int)e),
                              sphere->label(Cell{1, (int)e})});
    for (Index f = 0; f < sphere->count(2); ++f) {
        ComplexSpec::FaceSpec fs;
        fs.word = sphere->face_word((int)f);
        fs.label = sphere->label(Cell{2, (int)f});
        spec.faces.push_back(fs);
    }
    ComplexSpec::SolidSpec ss;
    // d[v0v1v2v3] = [v1v2v3] - [v0v2v3] + [v0v1v3] - [v0v1v2]; faces are in
    // that listing order above.
    ss.boundary = {{0, Integer(1)}, {1, Integer(-1)}, {2, Integer(1)}, {3, Integer(-1)}};
    ss.label = "T";
    spec.solids.push_back(ss);
    return build_complex(std::move(spec));
}

ComplexPtr torus() {
    ComplexSpec spec;
    spec.name = "torus";
    spec.vertices = {"v"};
    spec.edges.push_back({0, 0, "a"});
    spec.edges.push_back({0, 0, "b"});
    ComplexSpec::FaceSpec f;
    f.word = {{0, 1}, {1, 1}, {0, -1}, {1, -1}};
    f.label = "F";
    spec.faces.push_back(f);
    return build_complex(std::move(spec));
}

ComplexPtr projective_plane() {
    ComplexSpec spec;
    spec.name = "projective-plane";
    spec.vertices = {"v"};
    spec.edges.push_back({0, 0, "a"});
    ComplexSpec::FaceSpec f;
    f.word = {{0, 1}, {0, 1}};
    f.label = "F";
    spec.faces.push_back(f);
    return build_complex(std::move(spec));
}

ComplexPtr moore_loop(int m) {
    ComplexSpec spec;
    spec.name = "moore-loop(" + std::to_string(m) + ")";
    spec.vertices = {"v"};
    spec.edges.push_back({0, 0, "a"});
    ComplexSpec::FaceSpec f;
    for (int i = 0; i < m; ++i) f.word.push_back({0, 1});
    f.label = "F";
    spec.faces.push_back(f);
    return build_complex(std::move(spec));
}

}  // namespace padlab
