#include "padlab/homology.hpp"

#include <sstream>

namespace padlab {

std::string Coefficients::str() const {
    switch (kind) {
        case Kind::Z: return "Z";
        case Kind::Q: return "Q";
        case Kind::Zm: {
            std::ostringstream os;
            os << "Z_" << modulus();
            return os.str();
        }
    }
    return "?";
}

Integer AbelianPresentation::group_order() const {
    if (free_rank > 0) return Integer(0);
    Integer n(1);
    for (const Integer& d : torsion) n *= d;
    return n;
}

IVector AbelianPresentation::reduce(IVector coords) const {
    for (Index i = 0; i < coords.size(); ++i)
        if (!orders[i].is_zero()) coords(i) = mod_floor(coords(i), orders[i]);
    return coords;
}

bool AbelianPresentation::is_zero_class(const IVector& coords) const {
    IVector r = reduce(coords);
    for (Index i = 0; i < r.size(); ++i)
        if (!r(i).is_zero()) return false;
    return true;
}

Integer AbelianPresentation::element_order(const IVector& coords) const {
    Integer n(1);
    for (Index i = 0; i < coords.size(); ++i) {
        if (orders[i].is_zero()) {
            if (!coords(i).is_zero()) return Integer(0);
        } else {
            Integer c = mod_floor(coords(i), orders[i]);
            if (!c.is_zero()) n = lcm(n, orders[i] / gcd(orders[i], c));
        }
    }
    return n;
}

std::optional<IVector> AbelianPresentation::try_class_of(const IVector& chain) const {
    if (chain.size() != ambient) throw std::invalid_argument("class_of: chain has wrong length");
    const Index z = lattice.cols();
    if (z == 0) {
        for (Index i = 0; i < chain.size(); ++i)
            if (!chain(i).is_zero()) return std::nullopt;
        return IVector(IVector::Zero(0));
    }
    IVector top = sol_top * chain;
    IVector y(z);
    for (Index i = 0; i < z; ++i) {
        if (!(top(i) % sol_diag[i]).is_zero()) return std::nullopt;
        y(i) = top(i) / sol_diag[i];
    }
    IVector x = sol_v * y;
    IVector check = lattice * x;
    for (Index i = 0; i < chain.size(); ++i)
        if (check(i) != chain(i)) return std::nullopt;
    IVector diag_coords = rel_u * x;
    IVector out((Index)kept.size());
    for (std::size_t j = 0; j < kept.size(); ++j) out((Index)j) = diag_coords(kept[j]);
    return reduce(std::move(out));
}

IVector AbelianPresentation::class_of(const IVector& chain) const {
    auto c = try_class_of(chain);
    if (!c) throw std::invalid_argument("class_of: chain is not a cycle of this presentation");
    return *c;
}

std::string AbelianPresentation::str() const {
    std::ostringstream os;
    bool first = true;
    if (free_rank > 0) {
        os << (coeffs.kind == Coefficients::Kind::Q ? "Q" : "Z");
        if (free_rank > 1) os << "^" << free_rank;
        first = false;
    }
    for (const Integer& d : torsion) {
        if (!first) os << " + ";
        os << "Z_" << d;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

bool AbelianPresentation::same_group_type(Index want_free,
                                          const std::vector<Integer>& want_torsion) const {
    if (free_rank != want_free) return false;
    if (torsion.size() != want_torsion.size()) return false;
    for (std::size_t i = 0; i < torsion.size(); ++i)
        if (torsion[i] != want_torsion[i]) return false;
    return true;
}

bool compatible(const AbelianPresentation& a, const AbelianPresentation& b) {
    if (!(a.coeffs == b.coeffs) || a.ambient != b.ambient) return false;
    if (a.orders != b.orders) return false;
    return a.generators == b.generators;
}

AbelianPresentation presentation_from_pair(const SpMat& d_out, const SpMat& d_in,
                                           const Coefficients& coeffs) {
    AbelianPresentation pres;
    pres.coeffs = coeffs;
    pres.ambient = d_out.cols();
    const Index n = pres.ambient;
    const bool modular = coeffs.kind == Coefficients::Kind::Zm;
    const Integer m = modular ? coeffs.modulus() : Integer(0);

    // Cycle lattice: ker(d_out) over Z, or {x : d_out x == 0 mod m}.
    IMatrix lattice;
    {
        IMatrix a;
        if (!modular) {
            a = to_dense(d_out);
        } else {
            a = IMatrix::Zero(d_out.rows(), n + d_out.rows());
            a.leftCols(n) = to_dense(d_out);
            for (Index i = 0; i < d_out.rows(); ++i) a(i, n + i) = m;
        }
        SNFResult f = snf<Integer>(a);
        IMatrix ker = kernel_basis(f);
        lattice = ker.topRows(n);
    }
    const Index z = lattice.cols();
    pres.lattice = lattice;

    // Solver for lattice coordinates.
    if (z > 0) {
        SNFResult lf = snf<Integer>(lattice);
        if (lf.rank != z) throw std::logic_error("presentation: cycle lattice basis is degenerate");
        pres.sol_top = lf.U.topRows(z);
        pres.sol_v = lf.V;
        pres.sol_diag.resize(z);
        for (Index i = 0; i < z; ++i) pres.sol_diag[i] = lf.diag(i);
    }

    // Relations: boundaries (and m * lattice coordinates when modular),
    // expressed in lattice coordinates.
    IMatrix rel;
    {
        IMatrix din = to_dense(d_in);
        Index extra = modular ? n : 0;
        rel = IMatrix::Zero(z, din.cols() + extra);
        for (Index c = 0; c < din.cols() + extra; ++c) {
            IVector rhs = c < din.cols() ? IVector(din.col(c)) : IVector(IVector::Zero(n));
            if (c >= din.cols()) rhs(c - din.cols()) = m;
            // Solve lattice * x = rhs using the stored solver.
            if (z == 0) {
                for (Index i = 0; i < rhs.size(); ++i)
                    if (!rhs(i).is_zero())
                        throw std::logic_error("presentation: relation outside the cycle lattice");
                continue;
            }
            IVector top = pres.sol_top * rhs;
            IVector y(z);
            for (Index i = 0; i < z; ++i) {
                if (!(top(i) % pres.sol_diag[i]).is_zero())
                    throw std::logic_error("presentation: relation outside the cycle lattice");
                y(i) = top(i) / pres.sol_diag[i];
            }
            IVector x = pres.sol_v * y;
            IVector chk = lattice * x;
            for (Index i = 0; i < rhs.size(); ++i)
                if (chk(i) != rhs(i))
                    throw std::logic_error("presentation: relation outside the cycle lattice");
            rel.col(c) = x;
        }
    }

    SNFResult rf = snf<Integer>(rel);
    pres.rel_u = rf.U;
    pres.rel_divisors.assign(z, Integer(0));
    for (Index i = 0; i < rf.rank; ++i) pres.rel_divisors[i] = rf.diag(i);

    IMatrix gens_all = lattice * rf.Uinv;  // column i generates with order rel_divisors[i]

    // Keep torsion generators (divisor > 1) and, over Z, free generators
    // (divisor 0). Over Q only the free part survives; over Z_{p^t} every
    // divisor is a nonzero divisor of p^t.
    for (Index i = 0; i < z; ++i) {
        const Integer& d = pres.rel_divisors[i];
        if (d == Integer(1)) continue;
        if (coeffs.kind == Coefficients::Kind::Q) {
            if (!d.is_zero()) continue;
            pres.kept.push_back(i);
            pres.orders.push_back(Integer(0));
            ++pres.free_rank;
        } else if (d.is_zero()) {
            pres.kept.push_back(i);
            pres.orders.push_back(Integer(0));
            ++pres.free_rank;
        } else {
            if (modular && !(m % d).is_zero())
                throw std::logic_error("presentation: modular torsion does not divide the modulus");
            pres.kept.push_back(i);
            pres.orders.push_back(d);
            pres.torsion.push_back(d);
        }
    }
    // Generators ordered torsion-first per the divisor chain, then free; the
    // SNF already delivers divisors in that order.
    pres.generators = IMatrix::Zero(pres.ambient, (Index)pres.kept.size());
    for (std::size_t j = 0; j < pres.kept.size(); ++j)
        pres.generators.col((Index)j) = gens_all.col(pres.kept[j]);

    return pres;
}

namespace {

SpMat upper_boundary(const DComplex& x, int n) {
    if (n >= 3) return SpMat(x.count(3), 0);
    return x.boundary_matrix(n + 1);
}

}  // namespace

AbelianPresentation homology(const DComplex& x, int n, const Coefficients& coeffs) {
    if (n < 0 || n > 3) throw std::invalid_argument("homology: dimension out of range");
    return presentation_from_pair(x.boundary_matrix(n), upper_boundary(x, n), coeffs);
}

AbelianPresentation homology(const ComplexPtr& x, int n, const Coefficients& coeffs) {
    return homology(*x, n, coeffs);
}

AbelianPresentation cohomology(const DComplex& x, int n, const Coefficients& coeffs) {
    if (n < 0 || n > 3) throw std::invalid_argument("cohomology: dimension out of range");
    SpMat delta_out = SpMat(upper_boundary(x, n).transpose());
    SpMat delta_in = SpMat(x.boundary_matrix(n).transpose());
    return presentation_from_pair(delta_out, delta_in, coeffs);
}

AbelianPresentation cohomology(const ComplexPtr& x, int n, const Coefficients& coeffs) {
    return cohomology(*x, n, coeffs);
}

namespace {

HomMatrix hom_from_chain_action(AbelianPresentation src, AbelianPresentation dst,
                                const std::function<IVector(const IVector&)>& act,
                                std::string name) {
    HomMatrix h;
    h.matrix = IMatrix::Zero(dst.gen_count(), src.gen_count());
    for (Index j = 0; j < src.gen_count(); ++j) {
        IVector img = act(IVector(src.generators.col(j)));
        IVector coords = dst.class_of(img);
        h.matrix.col(j) = coords;
        // The image must be annihilated by the generator's order.
        if (!src.orders[j].is_zero()) {
            IVector scaled = coords * src.orders[j];
            if (!dst.is_zero_class(scaled))
                throw std::logic_error("induced map not well defined on torsion");
        }
    }
    h.source = std::move(src);
    h.target = std::move(dst);
    h.name = std::move(name);
    return h;
}

}  // namespace

HomMatrix induced_map(const CellularMap& f, int n, const Coefficients& coeffs) {
    AbelianPresentation src = homology(f.source(), n, coeffs);
    AbelianPresentation dst = homology(f.target(), n, coeffs);
    const SpMat& c = f.chain(n);
    return hom_from_chain_action(std::move(src), std::move(dst),
                                 [&](const IVector& v) { return IVector(c * v); },
                                 f.name() + "_*");
}

HomMatrix induced_cohomology_map(const CellularMap& f, int n, const Coefficients& coeffs) {
    AbelianPresentation src = cohomology(f.target(), n, coeffs);
    AbelianPresentation dst = cohomology(f.source(), n, coeffs);
    SpMat ct = SpMat(f.chain(n).transpose());
    return hom_from_chain_action(std::move(src), std::move(dst),
                                 [&](const IVector& v) { return IVector(ct * v); },
                                 f.name() + "^*");
}

HomMatrix coeff_morphism_between(const DComplex& x, int n, const Integer& p, int a, int b) {
    if (a < 1 || b < a) throw std::invalid_argument("coeff_morphism: need 1 <= a <= b");
    AbelianPresentation src = homology(x, n, Coefficients::mod_prime_power(p, a));
    AbelianPresentation dst = homology(x, n, Coefficients::mod_prime_power(p, b));
    Integer scale = pow(p, (unsigned)(b - a));
    return hom_from_chain_action(std::move(src), std::move(dst),
                                 [&](const IVector& v) { return IVector(v * scale); },
                                 "coeff");
}

HomMatrix coeff_morphism(const DComplex& x, int n, const Integer& p, int t) {
    return coeff_morphism_between(x, n, p, 1, t);
}

HomMatrix coeff_morphism(const ComplexPtr& x, int n, const Integer& p, int t) {
    return coeff_morphism(*x, n, p, t);
}

bool HomMatrix::is_zero() const {
    for (Index j = 0; j < matrix.cols(); ++j)
        if (!target.is_zero_class(IVector(matrix.col(j)))) return false;
    return true;
}

HomMatrix compose_hom(const HomMatrix& g, const HomMatrix& f) {
    if (!compatible(f.target, g.source))
        throw std::invalid_argument("compose_hom: presentations do not match");
    HomMatrix h;
    h.source = f.source;
    h.target = g.target;
    h.matrix = g.matrix * f.matrix;
    for (Index j = 0; j < h.matrix.cols(); ++j)
        h.matrix.col(j) = h.target.reduce(IVector(h.matrix.col(j)));
    h.name = g.name + "*" + f.name;
    return h;
}

HomMatrix identity_hom(const AbelianPresentation& pres) {
    HomMatrix h;
    h.source = h.target = pres;
    h.matrix = IMatrix::Identity(pres.gen_count(), pres.gen_count());
    h.name = "id";
    return h;
}

namespace {

IMatrix relation_columns(const AbelianPresentation& p) {
    // Lattice of coordinate vectors representing zero: order * e_i for
    // torsion generators (free generators admit no relation).
    std::vector<Index> tors;
    for (Index i = 0; i < p.gen_count(); ++i)
        if (!p.orders[i].is_zero()) tors.push_back(i);
    IMatrix r = IMatrix::Zero(p.gen_count(), (Index)tors.size());
    for (std::size_t j = 0; j < tors.size(); ++j) r(tors[j], (Index)j) = p.orders[tors[j]];
    return r;
}

}  // namespace

std::vector<IVector> hom_kernel_generators(const HomMatrix& h) {
    const Index sg = h.source.gen_count(), tg = h.target.gen_count();
    IMatrix rt = relation_columns(h.target);
    // {x : matrix x in im(rt)}: kernel of [matrix | rt], projected to x.
    IMatrix a(tg, sg + rt.cols());
    a.leftCols(sg) = h.matrix;
    a.rightCols(rt.cols()) = rt;
    SNFResult f = snf<Integer>(a);
    IMatrix ker = kernel_basis(f).topRows(sg);
    // Also anything that is zero in the source maps to the kernel lattice.
    IMatrix rs = relation_columns(h.source);
    std::vector<IVector> out;
    for (Index j = 0; j < ker.cols(); ++j) {
        IVector v = h.source.reduce(IVector(ker.col(j)));
        if (!h.source.is_zero_class(v)) out.push_back(v);
    }
    (void)rs;
    return out;
}

bool hom_is_injective(const HomMatrix& h) {
    for (const IVector& v : hom_kernel_generators(h))
        if (!h.source.is_zero_class(v)) return false;
    return true;
}

bool hom_is_surjective(const HomMatrix& h) {
    // Cokernel of [matrix | target relations] must vanish.
    const Index tg = h.target.gen_count();
    if (tg == 0) return true;
    IMatrix rt = relation_columns(h.target);
    IMatrix a(tg, h.matrix.cols() + rt.cols());
    a.leftCols(h.matrix.cols()) = h.matrix;
    a.rightCols(rt.cols()) = rt;
    SNFResult f = snf<Integer>(a);
    if (f.rank < tg) return false;
    for (Index i = 0; i < tg; ++i)
        if (f.diag(i) != Integer(1)) return false;
    return true;
}

bool hom_is_isomorphism(const HomMatrix& h) {
    return hom_is_injective(h) && hom_is_surjective(h);
}

TrivialityReport composition_triviality_report(const std::vector<HomMatrix>& maps) {
    if (maps.empty()) throw std::invalid_argument("composition_triviality_report: no maps");
    HomMatrix acc = maps.front();
    for (std::size_t i = 1; i < maps.size(); ++i) acc = compose_hom(maps[i], acc);
    TrivialityReport rep;
    for (Index j = 0; j < acc.matrix.cols(); ++j) {
        IVector col = acc.target.reduce(IVector(acc.matrix.col(j)));
        if (!acc.target.is_zero_class(col)) {
            rep.trivial = false;
            rep.witness_generator = j;
            rep.witness_cycle = acc.source.generators.col(j);
            rep.witness_image = col;
            return rep;
        }
    }
    return rep;
}

bool class_divisibility(const DComplex& x, const IVector& cocycle, const Integer& p, int k,
                        IVector* section) {
    if (cocycle.size() != x.count(2))
        throw std::invalid_argument("class_divisibility: cochain has wrong length");
    // Cocycle check: the class must vanish on 3-cell boundaries.
    {
        IVector v = IVector(SpMat(x.boundary_matrix(3).transpose()) * cocycle);
        for (Index i = 0; i < v.size(); ++i)
            if (!v(i).is_zero())
                throw std::invalid_argument("class_divisibility: cochain is not a cocycle");
    }
    IMatrix delta = to_dense(x.boundary_matrix(2)).transpose();
    auto sol = solve_mod(delta, cocycle, pow(p, (unsigned)k));
    if (!sol) return false;
    if (section) *section = *sol;
    return true;
}

}  // namespace padlab
