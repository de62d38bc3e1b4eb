// Exact (co)homology of DComplexes with Z, Q and Z_{p^t} coefficients.
//
// Groups are presented with concrete representative (co)cycles and enough
// transform data to express an arbitrary cycle in the generator basis, so
// induced maps and coefficient morphisms come out as honest matrices.
// Z_{p^t} is handled by integer Smith reduction of the boundary matrix
// stacked with p^t times the identity; one exact kernel serves every ring.

#ifndef PADLAB_HOMOLOGY_HPP
#define PADLAB_HOMOLOGY_HPP

#include "padlab/cellmap.hpp"

#include <optional>
#include <string>
#include <vector>

namespace padlab {

struct Coefficients {
    enum class Kind { Z, Q, Zm };
    Kind kind = Kind::Z;
    Integer p = 0;
    int t = 1;

    static Coefficients integers() { return {Kind::Z, Integer(0), 1}; }
    static Coefficients rationals() { return {Kind::Q, Integer(0), 1}; }
    static Coefficients mod_prime_power(Integer prime, int exponent) {
        return {Kind::Zm, std::move(prime), exponent};
    }
    Integer modulus() const { return kind == Kind::Zm ? pow(p, (unsigned)t) : Integer(0); }
    std::string str() const;
    friend bool operator==(const Coefficients& a, const Coefficients& b) {
        return a.kind == b.kind && a.p == b.p && (a.kind != Kind::Zm || a.t == b.t);
    }
};

/// Finitely generated abelian group (or Z_{p^t}-module) presented on
/// explicit cycle representatives.
class AbelianPresentation {
public:
    Coefficients coeffs;
    Index ambient = 0;

    Index free_rank = 0;
    std::vector<Integer> torsion;   // divisors > 1, in divisibility order
    std::vector<Integer> orders;    // per generator: divisor, or 0 when free
    IMatrix generators;             // ambient x (#gens): representative cycles

    Index gen_count() const { return generators.cols(); }
    bool is_trivial() const { return gen_count() == 0; }
    Integer group_order() const;  // 0 when infinite

    /// Coordinates of a chain's class in the generator basis (torsion
    /// coordinates reduced into [0, d)). Throws if the chain is not a cycle
    /// of this presentation's lattice.
    IVector class_of(const IVector& chain) const;
    std::optional<IVector> try_class_of(const IVector& chain) const;

    /// Reduce a raw coordinate vector modulo the generator orders.
    IVector reduce(IVector coords) const;
    bool is_zero_class(const IVector& coords) const;

    /// Order of an element given by generator coordinates (0 = infinite).
    Integer element_order(const IVector& coords) const;

    std::string str() const;
    bool same_group_type(Index want_free, const std::vector<Integer>& want_torsion) const;
    friend bool compatible(const AbelianPresentation& a, const AbelianPresentation& b);

    // Certificate data: the Smith forms this presentation was computed from.
    IMatrix lattice;        // ambient x z cycle lattice basis
    IMatrix rel_u;          // z x z transform from the relation Smith form
    std::vector<Integer> rel_divisors;  // per lattice coordinate
    std::vector<Index> kept;            // lattice coordinates kept as generators

    // Solver for lattice coordinates (top of U, V and diagonal of snf(lattice)).
    IMatrix sol_top;
    IMatrix sol_v;
    std::vector<Integer> sol_diag;
};

/// Presentation of ker(d_out)/im(d_in) over the given coefficients, where
/// d_out: C -> C' and d_in: C'' -> C.
AbelianPresentation presentation_from_pair(const SpMat& d_out, const SpMat& d_in,
                                           const Coefficients& coeffs);

AbelianPresentation homology(const DComplex& x, int n, const Coefficients& coeffs);
AbelianPresentation homology(const ComplexPtr& x, int n, const Coefficients& coeffs);
AbelianPresentation cohomology(const DComplex& x, int n, const Coefficients& coeffs);
AbelianPresentation cohomology(const ComplexPtr& x, int n, const Coefficients& coeffs);

struct HomMatrix {
    AbelianPresentation source, target;
    IMatrix matrix;  // target gens x source gens, reduced mod target orders
    std::string name;

    bool is_zero() const;
};

/// Map induced on homology by a cellular map.
HomMatrix induced_map(const CellularMap& f, int n, const Coefficients& coeffs);

/// Pullback induced on cohomology by a cellular map (from target to source).
HomMatrix induced_cohomology_map(const CellularMap& f, int n, const Coefficients& coeffs);

/// Map H_n(X; Z_p) -> H_n(X; Z_{p^t}) induced by 1 |-> p^{t-1}.
HomMatrix coeff_morphism(const DComplex& x, int n, const Integer& p, int t);
HomMatrix coeff_morphism(const ComplexPtr& x, int n, const Integer& p, int t);

/// Map between homology with Z_{p^a} -> Z_{p^b} coefficients, a <= b,
/// induced on chains by multiplication with p^{b-a}.
HomMatrix coeff_morphism_between(const DComplex& x, int n, const Integer& p, int a, int b);

HomMatrix compose_hom(const HomMatrix& g, const HomMatrix& f);
HomMatrix identity_hom(const AbelianPresentation& pres);

bool hom_is_isomorphism(const HomMatrix& h);
bool hom_is_injective(const HomMatrix& h);
bool hom_is_surjective(const HomMatrix& h);

/// Generators (as source coordinates) of the kernel subgroup of h.
std::vector<IVector> hom_kernel_generators(const HomMatrix& h);

struct TrivialityReport {
    bool trivial = true;
    std::optional<Index> witness_generator;
    IVector witness_cycle;   // representative of the witness in the source
    IVector witness_image;   // its image coordinates in the final target
};

/// Composes the given maps left-to-right (maps[0] first) and reports whether
/// the composite is the zero map; a witness generator is attached when not.
TrivialityReport composition_triviality_report(const std::vector<HomMatrix>& maps);

/// True iff the image of the integral class `cocycle` in H^2(X; Z_{p^k})
/// vanishes, i.e. the cocycle is delta(beta) + p^k * (...) for an integral
/// 1-cochain beta. Returns beta through `section` when given.
bool class_divisibility(const DComplex& x, const IVector& cocycle, const Integer& p, int k,
                        IVector* section = nullptr);

}  // namespace padlab

#endif
