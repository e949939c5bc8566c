#include "nakwide/rep.hpp"

#include <algorithm>
#include <string>

#include "nakwide/error.hpp"

namespace nakwide::rep {

namespace {

void require(bool condition, ErrorKind kind, const std::string& what)
{
    if (!condition)
        throw Error(kind, what);
}

std::size_t sz(int v) { return std::size_t(v); }

} // namespace

Algebra algebra_for(const AlgebraParams& params, std::uint32_t prime)
{
    return Algebra{params.m(), params.ell(), PrimeField(prime)};
}

Representation::Representation(Algebra algebra, std::vector<int> dims, std::vector<Matrix> arrows)
    : algebra_(algebra), dims_(std::move(dims)), arrows_(std::move(arrows))
{
    const int m = algebra_.m;
    require(int(dims_.size()) == m, ErrorKind::PreconditionViolation, "dimension vector length differs from m");
    require(int(arrows_.size()) == m - 1, ErrorKind::PreconditionViolation, "arrow count differs from m - 1");
    for (int v = 1; v <= m; ++v)
        require(dim(v) >= 0, ErrorKind::PreconditionViolation, "negative dimension");
    for (int j = 1; j < m; ++j) {
        const Matrix& a = arrow(j);
        require(a.field() == algebra_.field, ErrorKind::PreconditionViolation, "arrow over a different field");
        require(a.rows() == sz(dim(j)) && a.cols() == sz(dim(j + 1)), ErrorKind::PreconditionViolation,
                "arrow " + std::to_string(j) + " has the wrong shape");
    }
    for (int low = 1; low + algebra_.ell <= m; ++low)
        require(path(low + algebra_.ell, low).is_zero(), ErrorKind::RelationViolation,
                "path of length ell from vertex " + std::to_string(low + algebra_.ell) + " acts nonzero");
}

Representation Representation::zero(const Algebra& algebra)
{
    std::vector<Matrix> arrows(sz(algebra.m - 1), Matrix(algebra.field, 0, 0));
    return Representation(algebra, std::vector<int>(sz(algebra.m), 0), std::move(arrows));
}

int Representation::total_dim() const noexcept
{
    int total = 0;
    for (int v : dims_)
        total += v;
    return total;
}

Matrix Representation::path(int from, int to) const
{
    Matrix result = Matrix::identity(field(), sz(dim(from)));
    for (int j = from - 1; j >= to; --j)
        result = arrow(j) * result;
    return result;
}

RepMorphism::RepMorphism(Representation source, Representation target, std::vector<Matrix> components)
    : source_(std::move(source)), target_(std::move(target)), components_(std::move(components))
{
    require(source_.algebra() == target_.algebra(), ErrorKind::PreconditionViolation,
            "morphism between modules over different algebras");
    const int m = source_.vertex_count();
    require(int(components_.size()) == m, ErrorKind::PreconditionViolation, "component count differs from m");
    for (int v = 1; v <= m; ++v)
        require(at(v).rows() == sz(target_.dim(v)) && at(v).cols() == sz(source_.dim(v)),
                ErrorKind::PreconditionViolation, "component " + std::to_string(v) + " has the wrong shape");
    for (int j = 1; j < m; ++j)
        require(at(j) * source_.arrow(j) == target_.arrow(j) * at(j + 1), ErrorKind::PreconditionViolation,
                "square at arrow " + std::to_string(j) + " does not commute");
}

RepMorphism RepMorphism::zero(const Representation& source, const Representation& target)
{
    std::vector<Matrix> comps;
    for (int v = 1; v <= source.vertex_count(); ++v)
        comps.emplace_back(source.field(), sz(target.dim(v)), sz(source.dim(v)));
    return RepMorphism(source, target, std::move(comps));
}

RepMorphism RepMorphism::identity(const Representation& object)
{
    std::vector<Matrix> comps;
    for (int v = 1; v <= object.vertex_count(); ++v)
        comps.push_back(Matrix::identity(object.field(), sz(object.dim(v))));
    return RepMorphism(object, object, std::move(comps));
}

bool RepMorphism::is_zero() const noexcept
{
    return std::all_of(components_.begin(), components_.end(), [](const Matrix& c) { return c.is_zero(); });
}

bool RepMorphism::is_injective() const
{
    for (int v = 1; v <= source_.vertex_count(); ++v)
        if (linalg::rank(at(v)) != sz(source_.dim(v)))
            return false;
    return true;
}

bool RepMorphism::is_surjective() const
{
    for (int v = 1; v <= source_.vertex_count(); ++v)
        if (linalg::rank(at(v)) != sz(target_.dim(v)))
            return false;
    return true;
}

Matrix RepMorphism::coordinates() const
{
    std::vector<Matrix> rows;
    for (const auto& c : components_)
        rows.push_back(c.flatten());
    return linalg::hstack(rows, source_.field(), 1);
}

RepMorphism RepMorphism::scaled(Matrix::Element s) const
{
    std::vector<Matrix> comps;
    for (const auto& c : components_)
        comps.push_back(c.scaled(s));
    return RepMorphism(source_, target_, std::move(comps));
}

RepMorphism compose(const RepMorphism& g, const RepMorphism& f)
{
    require(f.target() == g.source(), ErrorKind::PreconditionViolation, "compose: target/source mismatch");
    std::vector<Matrix> comps;
    for (int v = 1; v <= f.source().vertex_count(); ++v)
        comps.push_back(g.at(v) * f.at(v));
    return RepMorphism(f.source(), g.target(), std::move(comps));
}

RepMorphism add(const RepMorphism& f, const RepMorphism& g)
{
    require(f.source() == g.source() && f.target() == g.target(), ErrorKind::PreconditionViolation,
            "add: morphisms between different modules");
    std::vector<Matrix> comps;
    for (int v = 1; v <= f.source().vertex_count(); ++v)
        comps.push_back(f.at(v) + g.at(v));
    return RepMorphism(f.source(), f.target(), std::move(comps));
}

Representation build_interval(const Algebra& algebra, int a, int b)
{
    require(1 <= a && a <= b && b <= algebra.m, ErrorKind::RangeError,
            "interval [" + std::to_string(a) + "," + std::to_string(b) + "] outside 1.." + std::to_string(algebra.m));
    require(b - a + 1 <= algebra.ell, ErrorKind::RelationViolation,
            "interval of length " + std::to_string(b - a + 1) + " exceeds ell = " + std::to_string(algebra.ell));
    std::vector<int> dims(sz(algebra.m), 0);
    for (int v = a; v <= b; ++v)
        dims[sz(v - 1)] = 1;
    std::vector<Matrix> arrows;
    for (int j = 1; j < algebra.m; ++j) {
        Matrix arrow(algebra.field, sz(dims[sz(j - 1)]), sz(dims[sz(j)]));
        if (j >= a && j + 1 <= b)
            arrow(0, 0) = 1;
        arrows.push_back(std::move(arrow));
    }
    return Representation(algebra, std::move(dims), std::move(arrows));
}

Representation build_interval(const Algebra& algebra, IntervalSupport support)
{
    return build_interval(algebra, support.a, support.b);
}

Representation f_module(const Algebra& algebra, const AlgebraParams& params, IndecIndex i)
{
    return build_interval(algebra, interval_of(params, i));
}

Representation direct_sum(const std::vector<Representation>& summands)
{
    require(!summands.empty(), ErrorKind::PreconditionViolation, "direct_sum of nothing");
    const Algebra& algebra = summands.front().algebra();
    std::vector<int> dims(sz(algebra.m), 0);
    for (const auto& s : summands) {
        require(s.algebra() == algebra, ErrorKind::PreconditionViolation, "direct_sum over different algebras");
        for (int v = 1; v <= algebra.m; ++v)
            dims[sz(v - 1)] += s.dim(v);
    }
    std::vector<Matrix> arrows;
    for (int j = 1; j < algebra.m; ++j) {
        std::vector<Matrix> blocks;
        for (const auto& s : summands)
            blocks.push_back(s.arrow(j));
        arrows.push_back(linalg::block_diagonal(blocks, algebra.field));
    }
    return Representation(algebra, std::move(dims), std::move(arrows));
}

RepMorphism from_sum(const Representation& sum, const std::vector<RepMorphism>& parts)
{
    require(!parts.empty(), ErrorKind::PreconditionViolation, "from_sum of nothing");
    const Representation& target = parts.front().target();
    std::vector<Matrix> comps;
    for (int v = 1; v <= sum.vertex_count(); ++v) {
        std::vector<Matrix> blocks;
        for (const auto& p : parts)
            blocks.push_back(p.at(v));
        comps.push_back(linalg::hstack(blocks, sum.field(), sz(target.dim(v))));
    }
    return RepMorphism(sum, target, std::move(comps));
}

RepMorphism interval_map(const Algebra& algebra, IntervalSupport from, IntervalSupport to)
{
    Representation x = build_interval(algebra, from);
    Representation y = build_interval(algebra, to);
    const bool nonzero = from.a <= to.a && to.a <= from.b && from.b <= to.b;
    std::vector<Matrix> comps;
    for (int v = 1; v <= algebra.m; ++v) {
        Matrix c(algebra.field, sz(y.dim(v)), sz(x.dim(v)));
        if (nonzero && v >= to.a && v <= from.b)
            c(0, 0) = 1;
        comps.push_back(std::move(c));
    }
    return RepMorphism(std::move(x), std::move(y), std::move(comps));
}

HomSpace hom_space(const Representation& x, const Representation& y)
{
    require(x.algebra() == y.algebra(), ErrorKind::PreconditionViolation, "hom_space over different algebras");
    const int m = x.vertex_count();
    const PrimeField& f = x.field();
    std::vector<std::size_t> offset(sz(m + 1), 0);
    for (int v = 1; v <= m; ++v)
        offset[sz(v)] = offset[sz(v - 1)] + sz(y.dim(v) * x.dim(v));
    const std::size_t unknowns = offset[sz(m)];
    auto var = [&](int v, int r, int c) { return offset[sz(v - 1)] + sz(r * x.dim(v) + c); };

    std::size_t equations = 0;
    for (int j = 1; j < m; ++j)
        equations += sz(y.dim(j) * x.dim(j + 1));
    Matrix system(f, equations, unknowns);

    // phi_j * X.arrow(j) - Y.arrow(j) * phi_{j+1} = 0, one row per entry.
    std::size_t row = 0;
    for (int j = 1; j < m; ++j) {
        const Matrix& xa = x.arrow(j);
        const Matrix& ya = y.arrow(j);
        for (int r = 0; r < y.dim(j); ++r) {
            for (int c = 0; c < x.dim(j + 1); ++c, ++row) {
                for (int s = 0; s < x.dim(j); ++s)
                    system(row, var(j, r, s)) = f.add(system(row, var(j, r, s)), xa(sz(s), sz(c)));
                for (int t = 0; t < y.dim(j + 1); ++t)
                    system(row, var(j + 1, t, c)) = f.sub(system(row, var(j + 1, t, c)), ya(sz(r), sz(t)));
            }
        }
    }

    const Matrix kernel = linalg::nullspace(system);
    HomSpace result;
    result.dimension = int(kernel.cols());
    for (std::size_t k = 0; k < kernel.cols(); ++k) {
        std::vector<Matrix> comps;
        for (int v = 1; v <= m; ++v) {
            Matrix c(f, sz(y.dim(v)), sz(x.dim(v)));
            for (int r = 0; r < y.dim(v); ++r)
                for (int s = 0; s < x.dim(v); ++s)
                    c(sz(r), sz(s)) = kernel(var(v, r, s), k);
            comps.push_back(std::move(c));
        }
        result.basis.emplace_back(x, y, std::move(comps));
    }
    return result;
}

KernelResult kernel_rep(const RepMorphism& phi)
{
    const Representation& x = phi.source();
    const int m = x.vertex_count();
    std::vector<Matrix> inclusions;
    std::vector<int> dims;
    for (int v = 1; v <= m; ++v) {
        inclusions.push_back(linalg::nullspace(phi.at(v)));
        dims.push_back(int(inclusions.back().cols()));
    }
    std::vector<Matrix> arrows;
    for (int j = 1; j < m; ++j) {
        const Matrix image = x.arrow(j) * inclusions[sz(j)];
        auto induced = linalg::solve(inclusions[sz(j - 1)], image);
        require(induced.has_value(), ErrorKind::PreconditionViolation, "kernel not closed under arrow action");
        arrows.push_back(std::move(*induced));
    }
    Representation object(x.algebra(), std::move(dims), std::move(arrows));
    RepMorphism inclusion(object, x, std::move(inclusions));
    return {std::move(object), std::move(inclusion)};
}

CokernelResult cokernel_rep(const RepMorphism& phi)
{
    const Representation& y = phi.target();
    const int m = y.vertex_count();
    const PrimeField& f = y.field();
    std::vector<Matrix> sections;
    std::vector<Matrix> projections;
    std::vector<int> dims;
    for (int v = 1; v <= m; ++v) {
        const Matrix& image = phi.at(v);
        const auto echelon = linalg::rref(image);
        std::vector<Matrix> image_basis;
        for (auto c : echelon.pivot_columns)
            image_basis.push_back(image.column(c));
        Matrix complement = linalg::complement_columns(linalg::hstack(image_basis, f, sz(y.dim(v))));
        image_basis.push_back(complement);
        const Matrix change = linalg::inverse(linalg::hstack(image_basis, f, sz(y.dim(v))));
        const std::size_t c_dim = complement.cols();
        const std::size_t skip = change.rows() - c_dim;
        Matrix projection(f, c_dim, sz(y.dim(v)));
        for (std::size_t r = 0; r < c_dim; ++r)
            for (std::size_t c = 0; c < sz(y.dim(v)); ++c)
                projection(r, c) = change(skip + r, c);
        dims.push_back(int(c_dim));
        sections.push_back(std::move(complement));
        projections.push_back(std::move(projection));
    }
    std::vector<Matrix> arrows;
    for (int j = 1; j < m; ++j)
        arrows.push_back(projections[sz(j - 1)] * y.arrow(j) * sections[sz(j)]);
    Representation object(y.algebra(), std::move(dims), std::move(arrows));
    RepMorphism projection(y, object, std::move(projections));
    return {std::move(object), std::move(projection)};
}

std::vector<int> top_dims(const Representation& x)
{
    std::vector<int> tops;
    for (int v = 1; v <= x.vertex_count(); ++v) {
        const std::size_t radical = v < x.vertex_count() ? linalg::rank(x.arrow(v)) : 0;
        tops.push_back(x.dim(v) - int(radical));
    }
    return tops;
}

ProjectiveCover projective_cover(const Representation& x)
{
    const Algebra& algebra = x.algebra();
    const PrimeField& f = x.field();
    std::vector<Representation> summands;
    std::vector<RepMorphism> parts;
    std::vector<int> tops;
    for (int v = 1; v <= algebra.m; ++v) {
        const Matrix radical = v < algebra.m ? x.arrow(v) : Matrix(f, sz(x.dim(v)), 0);
        const Matrix generators = linalg::complement_columns(radical);
        for (std::size_t g = 0; g < generators.cols(); ++g) {
            const int low = std::max(1, v - algebra.ell + 1);
            Representation p = build_interval(algebra, low, v);
            std::vector<Matrix> comps;
            for (int u = 1; u <= algebra.m; ++u) {
                if (u < low || u > v)
                    comps.emplace_back(f, sz(x.dim(u)), 0);
                else
                    comps.push_back(x.path(v, u) * generators.column(g));
            }
            parts.emplace_back(p, x, std::move(comps));
            summands.push_back(std::move(p));
            tops.push_back(v);
        }
    }
    if (summands.empty()) {
        Representation zero = Representation::zero(algebra);
        return {zero, RepMorphism::zero(zero, x), {}};
    }
    Representation projective = direct_sum(summands);
    RepMorphism surjection = from_sum(projective, parts);
    require(surjection.is_surjective(), ErrorKind::PreconditionViolation, "projective cover is not surjective");
    return {std::move(projective), std::move(surjection), std::move(tops)};
}

ProjectiveResolution projective_resolution(const Representation& x, int max_len)
{
    ProjectiveResolution res{{}, {}, RepMorphism::zero(Representation::zero(x.algebra()), x), {}};
    Representation current = x;
    std::optional<RepMorphism> previous_inclusion;
    for (int k = 0; !current.is_zero(); ++k) {
        if (k > max_len)
            throw Error(ErrorKind::ResolutionOverflow,
                        "projective resolution longer than " + std::to_string(max_len));
        ProjectiveCover cover = projective_cover(current);
        if (k == 0)
            res.augmentation = cover.surjection;
        else
            res.differentials.push_back(compose(*previous_inclusion, cover.surjection));
        KernelResult kernel = kernel_rep(cover.surjection);
        res.modules.push_back(std::move(cover.projective));
        res.summand_tops.push_back(std::move(cover.summand_tops));
        current = std::move(kernel.object);
        previous_inclusion = std::move(kernel.inclusion);
    }
    return res;
}

int precomposition_rank(const HomSpace& hom, const RepMorphism& g)
{
    if (hom.basis.empty())
        return 0;
    std::vector<Matrix> rows;
    for (const auto& h : hom.basis)
        rows.push_back(compose(h, g).coordinates());
    return int(linalg::rank(linalg::vstack(rows, g.source().field(), rows.front().cols())));
}

int postcomposition_rank(const HomSpace& hom, const RepMorphism& g)
{
    if (hom.basis.empty())
        return 0;
    std::vector<Matrix> rows;
    for (const auto& h : hom.basis)
        rows.push_back(compose(g, h).coordinates());
    return int(linalg::rank(linalg::vstack(rows, g.source().field(), rows.front().cols())));
}

std::vector<int> ext_dims(const ProjectiveResolution& resolution, const Representation& y, int max_k)
{
    const int terms = int(resolution.modules.size());
    std::vector<HomSpace> homs;
    for (int k = 0; k < terms; ++k)
        homs.push_back(hom_space(resolution.modules[sz(k)], y));
    // rank of delta_k : Hom(P_k, Y) -> Hom(P_{k+1}, Y)
    std::vector<int> delta_rank(sz(std::max(terms, 0)), 0);
    for (int k = 0; k + 1 < terms; ++k)
        delta_rank[sz(k)] = precomposition_rank(homs[sz(k)], resolution.differentials[sz(k)]);
    std::vector<int> dims;
    for (int k = 0; k <= max_k; ++k) {
        if (k >= terms) {
            dims.push_back(0);
            continue;
        }
        const int incoming = k > 0 ? delta_rank[sz(k - 1)] : 0;
        dims.push_back(homs[sz(k)].dimension - delta_rank[sz(k)] - incoming);
    }
    return dims;
}

int ext_dim(int k, const ProjectiveResolution& resolution, const Representation& y)
{
    require(k >= 0, ErrorKind::RangeError, "negative Ext degree");
    return ext_dims(resolution, y, k).back();
}

int ext_dim(int k, const Representation& x, const Representation& y, int max_len)
{
    require(k >= 0 && k <= max_len, ErrorKind::RangeError, "Ext degree outside 0..max_len");
    return ext_dim(k, projective_resolution(x, max_len), y);
}

int stable_hom_dim(const Representation& x, const Representation& y)
{
    const HomSpace direct = hom_space(x, y);
    if (direct.dimension == 0)
        return 0;
    const ProjectiveCover cover = projective_cover(y);
    if (cover.projective.is_zero())
        return direct.dimension;
    const HomSpace through = hom_space(x, cover.projective);
    return direct.dimension - postcomposition_rank(through, cover.surjection);
}

namespace {

// Is the identity of `object` in the span of { basis_b o phi } (or phi o basis_b)?
bool identity_in_span(const std::vector<RepMorphism>& composites, const Representation& object)
{
    const Matrix id = RepMorphism::identity(object).coordinates();
    if (composites.empty())
        return id.is_zero();
    std::vector<Matrix> cols;
    for (const auto& c : composites)
        cols.push_back(c.coordinates().transpose());
    const Matrix a = linalg::hstack(cols, object.field(), id.cols());
    return linalg::solve(a, id.transpose()).has_value();
}

} // namespace

bool is_split_mono(const RepMorphism& phi)
{
    std::vector<RepMorphism> composites;
    for (const auto& psi : hom_space(phi.target(), phi.source()).basis)
        composites.push_back(compose(psi, phi));
    return identity_in_span(composites, phi.source());
}

bool is_split_epi(const RepMorphism& phi)
{
    std::vector<RepMorphism> composites;
    for (const auto& psi : hom_space(phi.target(), phi.source()).basis)
        composites.push_back(compose(phi, psi));
    return identity_in_span(composites, phi.target());
}

bool is_complex(const ComplexOfReps& complex)
{
    if (complex.terms.empty())
        return complex.maps.empty();
    if (complex.maps.size() + 1 != complex.terms.size())
        return false;
    for (std::size_t k = 0; k < complex.maps.size(); ++k)
        if (!(complex.maps[k].source() == complex.terms[k]) || !(complex.maps[k].target() == complex.terms[k + 1]))
            return false;
    for (std::size_t k = 0; k + 1 < complex.maps.size(); ++k)
        if (!compose(complex.maps[k + 1], complex.maps[k]).is_zero())
            return false;
    return true;
}

namespace {

// Shared bookkeeping: given the dimension of each position and the rank of each
// outgoing map, check kernel = image at the positions that need it.
bool ranks_exact(const std::vector<int>& dims, const std::vector<int>& ranks, bool closed_left, bool closed_right)
{
    const std::size_t r = dims.size() - 1;
    for (std::size_t k = 0; k <= r; ++k) {
        if (k == 0 && !closed_left)
            continue;
        if (k == r && !closed_right)
            continue;
        const int outgoing = k < r ? ranks[k] : 0;
        const int incoming = k > 0 ? ranks[k - 1] : 0;
        if (dims[k] - outgoing != incoming)
            return false;
    }
    return true;
}

} // namespace

bool is_exact(const ComplexOfReps& complex)
{
    if (!is_complex(complex))
        return false;
    if (complex.terms.empty())
        return true;
    const int m = complex.terms.front().vertex_count();
    for (int v = 1; v <= m; ++v) {
        std::vector<int> dims;
        std::vector<int> ranks;
        for (const auto& t : complex.terms)
            dims.push_back(t.dim(v));
        for (const auto& map : complex.maps)
            ranks.push_back(int(linalg::rank(map.at(v))));
        if (!ranks_exact(dims, ranks, complex.closed_left, complex.closed_right))
            return false;
    }
    return true;
}

bool is_hom_exact_covariant(const Representation& z, const ComplexOfReps& complex)
{
    if (!is_complex(complex))
        return false;
    if (complex.terms.empty())
        return true;
    std::vector<HomSpace> homs;
    std::vector<int> dims;
    for (const auto& t : complex.terms) {
        homs.push_back(hom_space(z, t));
        dims.push_back(homs.back().dimension);
    }
    std::vector<int> ranks;
    for (std::size_t k = 0; k < complex.maps.size(); ++k)
        ranks.push_back(postcomposition_rank(homs[k], complex.maps[k]));
    return ranks_exact(dims, ranks, complex.closed_left, complex.closed_right);
}

bool is_hom_exact_contravariant(const Representation& z, const ComplexOfReps& complex)
{
    if (!is_complex(complex))
        return false;
    if (complex.terms.empty())
        return true;
    // Reverse so the induced sequence reads left to right.
    std::vector<HomSpace> homs;
    std::vector<int> dims;
    for (auto it = complex.terms.rbegin(); it != complex.terms.rend(); ++it) {
        homs.push_back(hom_space(*it, z));
        dims.push_back(homs.back().dimension);
    }
    std::vector<int> ranks;
    const std::size_t r = complex.maps.size();
    for (std::size_t k = 0; k < r; ++k)
        ranks.push_back(precomposition_rank(homs[k], complex.maps[r - 1 - k]));
    return ranks_exact(dims, ranks, complex.closed_right, complex.closed_left);
}

} // namespace nakwide::rep
