#include "padlab/cellmap.hpp"

#include <algorithm>
#include <map>

namespace padlab {

namespace {

bool in_closure(const DComplex& X, Cell inner, Cell outer) {
    if (inner.dim > outer.dim) return false;
    auto cl = X.closure_of(outer);
    const auto& v = cl[inner.dim];
    return std::binary_search(v.begin(), v.end(), inner.idx);
}

}  // namespace

CellularMap::CellularMap(Data data) : d_(std::move(data)) {
    for (int k = 0; k < 4; ++k) {
        if (d_.chain[k].rows() == 0 && d_.chain[k].cols() == 0)
            d_.chain[k] = SpMat(d_.target->count(k), d_.source->count(k));
        if (d_.chain[k].rows() != d_.target->count(k) || d_.chain[k].cols() != d_.source->count(k))
            throw std::invalid_argument("CellularMap: chain matrix shape mismatch in dim " +
                                        std::to_string(k));
    }
    combinatorial_ = has_carriers();
    verify();
}

bool CellularMap::has_carriers() const {
    for (int k = 0; k < 4; ++k) {
        if (d_.source->count(k) == 0) continue;
        if (d_.carrier[k].size() != std::size_t(d_.source->count(k))) return false;
        for (const Cell& c : d_.carrier[k])
            if (!c.valid()) return false;
    }
    return true;
}

void CellularMap::verify() const {
    const DComplex& S = *d_.source;
    const DComplex& T = *d_.target;

    for (int k = 1; k <= 3; ++k) {
        SpMat lhs = T.boundary_matrix(k) * d_.chain[k];
        SpMat rhs = d_.chain[k - 1] * S.boundary_matrix(k);
        if (!sparse_equal(lhs, rhs))
            throw std::logic_error("CellularMap(" + d_.name +
                                   "): chain matrices do not commute with the boundary in dim " +
                                   std::to_string(k));
    }

    if (!d_.vertex_map.empty()) {
        if (d_.vertex_map.size() != std::size_t(S.count(0)))
            throw std::invalid_argument("CellularMap: vertex map has wrong size");
        IMatrix c0 = to_dense(d_.chain[0]);
        for (Index v = 0; v < S.count(0); ++v) {
            int w = d_.vertex_map[v];
            if (w < 0 || w >= T.count(0))
                throw std::invalid_argument("CellularMap: vertex image out of range");
            for (Index r = 0; r < T.count(0); ++r)
                if (c0(r, v) != (r == w ? Integer(1) : Integer(0)))
                    throw std::logic_error("CellularMap(" + d_.name +
                                           "): chain_0 disagrees with the vertex map");
        }
    }

    if (!d_.edge_routing.empty()) {
        if (d_.edge_routing.size() != std::size_t(S.count(1)))
            throw std::invalid_argument("CellularMap: routing has wrong size");
        if (d_.vertex_map.empty())
            throw std::invalid_argument("CellularMap: routing requires a vertex map");
        for (Index e = 0; e < S.count(1); ++e) {
            const Word& w = d_.edge_routing[e];
            int from = d_.vertex_map[S.edge_tail((int)e)];
            int to = d_.vertex_map[S.edge_head((int)e)];
            int cur = from;
            for (const auto& s : w) {
                if (T.step_vertex(s, 0) != cur)
                    throw std::logic_error("CellularMap(" + d_.name + "): routing path broken");
                cur = T.step_vertex(s, 1);
            }
            if (cur != to)
                throw std::logic_error("CellularMap(" + d_.name + "): routing endpoint mismatch");
            IVector ab = T.word_chain(w);
            for (Index r = 0; r < T.count(1); ++r)
                if (ab(r) != d_.chain[1].coeff(r, e))
                    throw std::logic_error("CellularMap(" + d_.name +
                                           "): chain_1 disagrees with the routing");
        }
    }

    if (combinatorial_) {
        // Carriers must be monotone and contain the chain support.
        for (int k = 1; k <= 3; ++k)
            for (Index i = 0; i < S.count(k); ++i) {
                Cell car = d_.carrier[k][i];
                for (int fct : S.facet_cells(k, (int)i)) {
                    Cell fc = d_.carrier[k - 1][fct];
                    if (!in_closure(T, fc, car))
                        throw std::logic_error("CellularMap(" + d_.name +
                                               "): carrier assignment not monotone");
                }
            }
        for (int k = 0; k <= 3; ++k)
            for (Index i = 0; i < S.count(k); ++i) {
                Cell car = d_.carrier[k][i];
                for (Index r = 0; r < T.count(k); ++r)
                    if (!d_.chain[k].coeff(r, (Index)i).is_zero() &&
                        !in_closure(T, Cell{k, (int)r}, car))
                        throw std::logic_error("CellularMap(" + d_.name +
                                               "): chain image escapes the carrier closure");
            }
    }
}

Word CellularMap::route_word(const Word& w) const {
    Word out;
    for (const auto& s : w) {
        const Word& r = d_.edge_routing[s.edge];
        if (s.sign > 0)
            out.insert(out.end(), r.begin(), r.end());
        else {
            Word rr = reversed(r);
            out.insert(out.end(), rr.begin(), rr.end());
        }
    }
    return out;
}

IVector CellularMap::push(int k, const IVector& chain) const {
    return d_.chain[k] * chain;
}

CellularMap identity_map(const ComplexPtr& x) {
    CellularMap::Data d;
    d.source = d.target = x;
    d.name = "id";
    for (int k = 0; k < 4; ++k) {
        d.chain[k] = SpMat(x->count(k), x->count(k));
        d.chain[k].setIdentity();
        d.carrier[k].resize(x->count(k));
        for (Index i = 0; i < x->count(k); ++i) d.carrier[k][i] = Cell{k, (int)i};
    }
    d.vertex_map.resize(x->count(0));
    for (Index v = 0; v < x->count(0); ++v) d.vertex_map[v] = (int)v;
    d.edge_routing.resize(x->count(1));
    for (Index e = 0; e < x->count(1); ++e) d.edge_routing[e] = {EdgeStep{(int)e, 1}};
    return CellularMap(std::move(d));
}

CellularMap compose(const CellularMap& g, const CellularMap& f) {
    if (f.target() != g.source())
        throw std::invalid_argument("compose: mismatched complexes");
    CellularMap::Data d;
    d.source = f.source();
    d.target = g.target();
    d.name = g.name() + "*" + f.name();
    for (int k = 0; k < 4; ++k) d.chain[k] = g.chain(k) * f.chain(k);
    if (f.has_vertex_map() && g.has_vertex_map()) {
        d.vertex_map.resize(f.vertex_map().size());
        for (std::size_t v = 0; v < d.vertex_map.size(); ++v)
            d.vertex_map[v] = g.vertex_image(f.vertex_image((int)v));
    }
    if (f.has_routing() && g.has_routing()) {
        d.edge_routing.resize(f.source()->count(1));
        for (Index e = 0; e < f.source()->count(1); ++e)
            d.edge_routing[e] = g.route_word(f.routing((int)e));
    }
    if (f.has_carriers() && g.has_carriers()) {
        for (int k = 0; k < 4; ++k) {
            d.carrier[k].resize(f.source()->count(k));
            for (Index i = 0; i < f.source()->count(k); ++i)
                d.carrier[k][i] = g.carrier(f.carrier(Cell{k, (int)i}));
        }
    }
    return CellularMap(std::move(d));
}

CellularMap inclusion_map(const InducedComplex& ind, const ComplexPtr& parent) {
    CellularMap::Data d;
    d.source = ind.complex;
    d.target = parent;
    d.name = "incl";
    for (int k = 0; k < 4; ++k) {
        d.chain[k] = SpMat(parent->count(k), ind.complex->count(k));
        std::vector<Eigen::Triplet<Integer>> t;
        for (Index i = 0; i < ind.complex->count(k); ++i)
            t.emplace_back(ind.to_parent[k][i], i, Integer(1));
        d.chain[k].setFromTriplets(t.begin(), t.end());
        d.carrier[k].resize(ind.complex->count(k));
        for (Index i = 0; i < ind.complex->count(k); ++i)
            d.carrier[k][i] = Cell{k, ind.to_parent[k][i]};
    }
    d.vertex_map.assign(ind.to_parent[0].begin(), ind.to_parent[0].end());
    d.edge_routing.resize(ind.complex->count(1));
    for (Index e = 0; e < ind.complex->count(1); ++e)
        d.edge_routing[e] = {EdgeStep{ind.to_parent[1][e], 1}};
    return CellularMap(std::move(d));
}

CellularMap restrict(const CellularMap& f, const Subcomplex& a) {
    if (a.parent() != f.source())
        throw std::invalid_argument("restrict: subcomplex of a different complex");
    InducedComplex ind = subcomplex_as_complex(a);
    return compose(f, inclusion_map(ind, f.source()));
}

CellularMap restrict_into(const CellularMap& f, const InducedComplex& a, const InducedComplex& b) {
    CellularMap fa = compose(f, inclusion_map(a, f.source()));
    // Re-express the target chains in b's indexing; every image cell must lie in b.
    CellularMap::Data d;
    d.source = a.complex;
    d.target = b.complex;
    d.name = f.name() + "|";
    for (int k = 0; k < 4; ++k) {
        std::vector<Eigen::Triplet<Integer>> t;
        for (Index col = 0; col < fa.chain(k).cols(); ++col)
            for (SpMat::InnerIterator it(fa.chain(k), col); it; ++it) {
                auto at = b.from_parent[k].find((int)it.row());
                if (at == b.from_parent[k].end())
                    throw std::invalid_argument("restrict_into: image escapes the target subcomplex");
                t.emplace_back(at->second, col, it.value());
            }
        d.chain[k] = SpMat(b.complex->count(k), a.complex->count(k));
        d.chain[k].setFromTriplets(t.begin(), t.end());
    }
    if (fa.has_vertex_map()) {
        d.vertex_map.resize(a.complex->count(0));
        for (Index v = 0; v < a.complex->count(0); ++v) {
            auto at = b.from_parent[0].find(fa.vertex_image((int)v));
            if (at == b.from_parent[0].end())
                throw std::invalid_argument("restrict_into: vertex image escapes the target");
            d.vertex_map[v] = at->second;
        }
    }
    if (fa.has_routing()) {
        d.edge_routing.resize(a.complex->count(1));
        for (Index e = 0; e < a.complex->count(1); ++e) {
            Word w;
            for (const auto& s : fa.routing((int)e)) {
                auto at = b.from_parent[1].find(s.edge);
                if (at == b.from_parent[1].end())
                    throw std::invalid_argument("restrict_into: routing escapes the target");
                w.push_back({at->second, s.sign});
            }
            d.edge_routing[e] = std::move(w);
        }
    }
    if (fa.has_carriers()) {
        bool ok = true;
        std::array<std::vector<Cell>, 4> car;
        for (int k = 0; k < 4 && ok; ++k) {
            car[k].resize(a.complex->count(k));
            for (Index i = 0; i < a.complex->count(k); ++i) {
                Cell c = fa.carrier(Cell{k, (int)i});
                auto at = b.from_parent[c.dim].find(c.idx);
                if (at == b.from_parent[c.dim].end()) { ok = false; break; }
                car[k][i] = Cell{c.dim, at->second};
            }
        }
        if (ok) d.carrier = std::move(car);
    }
    return CellularMap(std::move(d));
}

Subcomplex preimage_subcomplex(const CellularMap& f, const Subcomplex& bprime) {
    if (!f.combinatorial())
        throw std::invalid_argument("preimage_subcomplex: map is not combinatorial");
    if (bprime.parent() != f.target())
        throw std::invalid_argument("preimage_subcomplex: subcomplex of a different complex");
    Subcomplex out = Subcomplex::empty(f.source());
    std::vector<Cell> gen;
    for (int k = 0; k <= 3; ++k)
        for (Index i = 0; i < f.source()->count(k); ++i)
            if (bprime.contains(f.carrier(Cell{k, (int)i}))) gen.push_back(Cell{k, (int)i});
    return Subcomplex(f.source(), gen);
}

Integer loop_degree(const CellularMap& f, const IVector& gamma) {
    if (!f.source()->is_cycle(gamma))
        throw std::invalid_argument("loop_degree: chain is not a cycle");
    auto fc = Subcomplex::full(f.target()).circle_cycle();
    if (!fc) throw std::invalid_argument("loop_degree: target is not a circle");
    IVector img = f.push(1, gamma);
    // img must be d * fundamental for an integer d.
    Integer d(0);
    for (Index e = 0; e < img.size(); ++e)
        if (!(*fc)(e).is_zero()) { d = img(e) / (*fc)(e); break; }
    for (Index e = 0; e < img.size(); ++e)
        if (img(e) != d * (*fc)(e))
            throw std::logic_error("loop_degree: image cycle is not a multiple of the fundamental cycle");
    return d;
}

CellularMap chain_map_from_carriers(ComplexPtr source, ComplexPtr target,
                                    std::vector<int> vertex_map,
                                    std::vector<Word> edge_routing,
                                    std::array<std::vector<Cell>, 4> carrier,
                                    std::string name) {
    const DComplex& S = *source;
    const DComplex& T = *target;
    CellularMap::Data d;
    d.source = source;
    d.target = target;
    d.name = std::move(name);

    d.chain[0] = SpMat(T.count(0), S.count(0));
    {
        std::vector<Eigen::Triplet<Integer>> t;
        for (Index v = 0; v < S.count(0); ++v) t.emplace_back(vertex_map[v], v, Integer(1));
        d.chain[0].setFromTriplets(t.begin(), t.end());
    }
    d.chain[1] = SpMat(T.count(1), S.count(1));
    {
        std::vector<Eigen::Triplet<Integer>> t;
        for (Index e = 0; e < S.count(1); ++e) {
            IVector ab = T.word_chain(edge_routing[e]);
            for (Index r = 0; r < ab.size(); ++r)
                if (!ab(r).is_zero()) t.emplace_back(r, e, ab(r));
        }
        d.chain[1].setFromTriplets(t.begin(), t.end());
    }

    // Higher dimensions: solve d(x) = chain_{k-1}(boundary c) inside the
    // carrier closure. Any solution is correct; acyclicity of the carriers
    // makes all choices chain homotopic.
    for (int k = 2; k <= 3; ++k) {
        std::vector<Eigen::Triplet<Integer>> trips;
        for (Index i = 0; i < S.count(k); ++i) {
            IVector rhs;
            if (k == 2)
                rhs = d.chain[1] * S.word_chain(S.face_word((int)i));
            else {
                IVector bd = IVector::Zero(S.count(2));
                for (const auto& ent : S.solid_boundary((int)i)) bd(ent.cell) += ent.coeff;
                rhs = d.chain[2] * bd;
            }
            Cell car = carrier[k][i];
            auto cl = T.closure_of(car);
            const std::vector<int>& support = cl[k];
            if (support.empty()) {
                for (Index r = 0; r < rhs.size(); ++r)
                    if (!rhs(r).is_zero())
                        throw std::logic_error(
                            "chain_map_from_carriers: boundary image nonzero but carrier has no " +
                            std::to_string(k) + "-cells");
                continue;
            }
            // Columns of the target boundary restricted to the support.
            IMatrix a(T.count(k - 1), (Index)support.size());
            for (std::size_t j = 0; j < support.size(); ++j) {
                IVector col = IVector::Zero(T.count(k - 1));
                for (SpMat::InnerIterator it(T.boundary_matrix(k), support[j]); it; ++it)
                    col(it.row()) = it.value();
                a.col((Index)j) = col;
            }
            auto sol = solve_linear(a, rhs);
            if (!sol)
                throw std::logic_error("chain_map_from_carriers: no chain image in carrier closure (dim " +
                                       std::to_string(k) + ", cell " + std::to_string(i) + ")");
            for (std::size_t j = 0; j < support.size(); ++j)
                if (!(*sol)((Index)j).is_zero())
                    trips.emplace_back(support[j], i, (*sol)((Index)j));
        }
        d.chain[k] = SpMat(T.count(k), S.count(k));
        d.chain[k].setFromTriplets(trips.begin(), trips.end());
    }

    d.vertex_map = std::move(vertex_map);
    d.edge_routing = std::move(edge_routing);
    d.carrier = std::move(carrier);
    return CellularMap(std::move(d));
}

}  // namespace padlab
