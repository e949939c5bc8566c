#pragma once

#include <cstdint>
#include <vector>

#include "nakwide/linalg.hpp"
#include "nakwide/model.hpp"

// Brute-force representation engine for kQ/(rad kQ)^ell, Q = (m -> ... -> 1),
// over a prime field. Everything here is computed by explicit linear algebra
// and is used as the oracle for the closed-form calculus.
namespace nakwide::rep {

using linalg::Matrix;
using linalg::PrimeField;

/// The bound quiver algebra kQ/(rad kQ)^ell over F_p.
struct Algebra {
    int m;
    int ell;
    PrimeField field;

    friend bool operator==(const Algebra&, const Algebra&) = default;
};

Algebra algebra_for(const AlgebraParams& params, std::uint32_t prime = 2);

/// Representation of the linear quiver. Vertices are 1-based; arrow j (1 <= j < m)
/// goes from vertex j+1 to vertex j and acts as a dim(j) x dim(j+1) matrix.
class Representation {
public:
    /// Throws PreconditionViolation on shape mismatch and RelationViolation when a
    /// path of length ell acts nonzero.
    Representation(Algebra algebra, std::vector<int> dims, std::vector<Matrix> arrows);

    static Representation zero(const Algebra& algebra);

    const Algebra& algebra() const noexcept { return algebra_; }
    const PrimeField& field() const noexcept { return algebra_.field; }
    int vertex_count() const noexcept { return algebra_.m; }
    int dim(int vertex) const { return dims_.at(std::size_t(vertex - 1)); }
    const std::vector<int>& dims() const noexcept { return dims_; }
    const Matrix& arrow(int j) const { return arrows_.at(std::size_t(j - 1)); }
    int total_dim() const noexcept;
    bool is_zero() const noexcept { return total_dim() == 0; }

    /// Composite of the arrows from vertex `from` down to vertex `to` (to <= from).
    Matrix path(int from, int to) const;

    friend bool operator==(const Representation&, const Representation&) = default;

private:
    Algebra algebra_;
    std::vector<int> dims_;
    std::vector<Matrix> arrows_;
};

/// Per-vertex linear maps commuting with the arrows.
class RepMorphism {
public:
    /// Throws PreconditionViolation if shapes are wrong or a square fails to commute.
    RepMorphism(Representation source, Representation target, std::vector<Matrix> components);

    static RepMorphism zero(const Representation& source, const Representation& target);
    static RepMorphism identity(const Representation& object);

    const Representation& source() const noexcept { return source_; }
    const Representation& target() const noexcept { return target_; }
    const Matrix& at(int vertex) const { return components_.at(std::size_t(vertex - 1)); }
    const std::vector<Matrix>& components() const noexcept { return components_; }

    bool is_zero() const noexcept;
    bool is_injective() const;
    bool is_surjective() const;
    /// Row vector of all component entries, vertex by vertex, row-major.
    Matrix coordinates() const;
    RepMorphism scaled(Matrix::Element s) const;

    friend bool operator==(const RepMorphism&, const RepMorphism&) = default;

private:
    Representation source_;
    Representation target_;
    std::vector<Matrix> components_;
};

/// g o f.
RepMorphism compose(const RepMorphism& g, const RepMorphism& f);
RepMorphism add(const RepMorphism& f, const RepMorphism& g);

/// k at vertices a..b with identity connecting maps. RangeError when the
/// support leaves 1..m, RelationViolation when b - a + 1 > ell.
Representation build_interval(const Algebra& algebra, int a, int b);
Representation build_interval(const Algebra& algebra, IntervalSupport support);
/// The module f_i as an interval representation.
Representation f_module(const Algebra& algebra, const AlgebraParams& params, IndecIndex i);

Representation direct_sum(const std::vector<Representation>& summands);
/// Morphism out of a direct sum, given one morphism per summand (same target).
RepMorphism from_sum(const Representation& sum, const std::vector<RepMorphism>& parts);

/// The map that is 1 on the common support of [from] and [to], nonzero exactly
/// when from.a <= to.a <= from.b <= to.b; zero morphism otherwise.
RepMorphism interval_map(const Algebra& algebra, IntervalSupport from, IntervalSupport to);

struct HomSpace {
    int dimension = 0;
    std::vector<RepMorphism> basis;
};

/// Solves the commuting-square system; basis order follows the free variables
/// of the reduced row echelon form.
HomSpace hom_space(const Representation& x, const Representation& y);

/// Rank of Hom(A, Y) -> Hom(B, Y), h |-> h o g, where `hom` spans Hom(A, Y) and g : B -> A.
int precomposition_rank(const HomSpace& hom, const RepMorphism& g);
/// Rank of Hom(Z, A) -> Hom(Z, B), h |-> g o h, where `hom` spans Hom(Z, A) and g : A -> B.
int postcomposition_rank(const HomSpace& hom, const RepMorphism& g);

struct KernelResult {
    Representation object;
    RepMorphism inclusion;
};
struct CokernelResult {
    Representation object;
    RepMorphism projection;
};

KernelResult kernel_rep(const RepMorphism& phi);
CokernelResult cokernel_rep(const RepMorphism& phi);

/// dim of X / rad X at each vertex.
std::vector<int> top_dims(const Representation& x);

struct ProjectiveCover {
    Representation projective;
    RepMorphism surjection;
    /// Vertex v for each indecomposable summand p_v, in summand order.
    std::vector<int> summand_tops;
};

ProjectiveCover projective_cover(const Representation& x);

struct ProjectiveResolution {
    /// P_0, P_1, ..., P_L.
    std::vector<Representation> modules;
    /// differentials[k] : P_{k+1} -> P_k.
    std::vector<RepMorphism> differentials;
    RepMorphism augmentation;
    /// Vertices of the indecomposable summands of each P_k.
    std::vector<std::vector<int>> summand_tops;

    /// L, or -1 for the zero module.
    int length() const noexcept { return int(modules.size()) - 1; }
};

inline constexpr int kDefaultMaxResolution = 64;

/// Minimal projective resolution by iterated projective covers. Throws
/// ResolutionOverflow if P_{max_len + 1} would be nonzero.
ProjectiveResolution projective_resolution(const Representation& x, int max_len = kDefaultMaxResolution);

/// dim Ext^k(X, Y) for k = 0..max_k as cohomology of Hom(P_., Y).
std::vector<int> ext_dims(const ProjectiveResolution& resolution, const Representation& y, int max_k);
int ext_dim(int k, const ProjectiveResolution& resolution, const Representation& y);
int ext_dim(int k, const Representation& x, const Representation& y, int max_len = kDefaultMaxResolution);

/// dim of Hom(X, Y) modulo maps factoring through a projective, computed along
/// the projective cover of Y.
int stable_hom_dim(const Representation& x, const Representation& y);

bool is_split_mono(const RepMorphism& phi);
bool is_split_epi(const RepMorphism& phi);

/// Sequence T_0 -> T_1 -> ... -> T_r read left to right. A closed end means the
/// sequence continues with 0 on that side.
struct ComplexOfReps {
    std::vector<Representation> terms;
    std::vector<RepMorphism> maps;
    bool closed_left = true;
    bool closed_right = true;
};

/// Consecutive composites vanish and the shapes line up.
bool is_complex(const ComplexOfReps& complex);
/// Homology vanishes at every interior position and at closed ends.
bool is_exact(const ComplexOfReps& complex);
/// Exactness of Hom(Z, -) applied to the complex, with the same end convention.
bool is_hom_exact_covariant(const Representation& z, const ComplexOfReps& complex);
/// Exactness of Hom(-, Z) applied to the complex. The image runs right to left,
/// so a closed right end asks for injectivity of Hom(T_r, Z) -> Hom(T_{r-1}, Z).
bool is_hom_exact_contravariant(const Representation& z, const ComplexOfReps& complex);

} // namespace nakwide::rep
