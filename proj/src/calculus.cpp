#include "nakwide/calculus.hpp"

#include <string>

#include "nakwide/error.hpp"

namespace nakwide::calc {

namespace {

int floor_div(int a, int b)
{
    int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

void require_hom(const AlgebraParams& params, IndecIndex i, IndecIndex j)
{
    if (hom_dim(params, i, j) == 0)
        throw Error(ErrorKind::PreconditionViolation,
                    "Hom(f" + std::to_string(i.value) + ", f" + std::to_string(j.value) + ") = 0");
}

void require_proper_hom(const AlgebraParams& params, IndecIndex i, IndecIndex j)
{
    require_hom(params, i, j);
    if (i == j)
        throw Error(ErrorKind::PreconditionViolation, "mu is an isomorphism (i == j)");
}

} // namespace

int hom_dim(const AlgebraParams& params, IndecIndex i, IndecIndex j)
{
    require_index(params, i);
    require_index(params, j);
    const int diff = j.value - i.value;
    return (diff >= 0 && diff <= params.ell() - 1) ? 1 : 0;
}

bool factors_through(const AlgebraParams& params, IndecIndex i, IndecIndex q, IndecIndex j)
{
    require_index(params, q);
    require_hom(params, i, j);
    return i <= q && q <= j;
}

bool is_mono(const AlgebraParams& params, IndecIndex i, IndecIndex j)
{
    require_hom(params, i, j);
    return i == j || j.value <= params.ell();
}

bool is_epi(const AlgebraParams& params, IndecIndex i, IndecIndex j)
{
    require_hom(params, i, j);
    return i == j || i.value >= params.m();
}

IndecIndex tau_d_inverse(const AlgebraParams& params, IndecIndex i)
{
    require_index(params, i);
    if (i.value > params.ell() - 1)
        throw Error(ErrorKind::DomainError,
                    "tau_d^- f_i = f_{i+m} is only available for i <= ell - 1, got " + std::to_string(i.value));
    return {i.value + params.m()};
}

int ext_d_dim(const AlgebraParams& params, IndecIndex i, IndecIndex j)
{
    require_index(params, i);
    require_index(params, j);
    return i.value - j.value >= params.m() ? 1 : 0;
}

int DWindow::nonzero_count() const
{
    int count = 0;
    for (const auto& s : slots)
        count += s.has_value() ? 1 : 0;
    return count;
}

std::vector<IndecIndex> DWindow::nonzero() const
{
    std::vector<IndecIndex> out;
    for (const auto& s : slots)
        if (s)
            out.push_back(*s);
    return out;
}

int interleaved_term(const AlgebraParams& params, IndecIndex i, IndecIndex j, int k)
{
    const int r = floor_div(k, 2);
    return (k - 2 * r == 0 ? i.value : j.value) + r * params.ell();
}

DWindow e_complex(const AlgebraParams& params, IndecIndex i, IndecIndex j)
{
    require_proper_hom(params, i, j);
    int first = 0;
    while (interleaved_term(params, i, j, first - 1) >= 1)
        --first;
    DWindow window;
    window.mu_position = -first;
    for (int k = first; k < first + params.d() + 2; ++k)
        window.slots.push_back(params.slot(interleaved_term(params, i, j, k)));
    // Everything outside the window must vanish, and the window must be full.
    if (window.nonzero_count() != params.d() + 2 || params.in_range(interleaved_term(params, i, j, first + params.d() + 2)))
        throw Error(ErrorKind::PreconditionViolation,
                    "complex for f" + std::to_string(i.value) + " -> f" + std::to_string(j.value)
                        + " does not have exactly d + 2 nonzero terms");
    return window;
}

std::vector<Slot> minimal_d_kernel(const AlgebraParams& params, IndecIndex i, IndecIndex j)
{
    require_proper_hom(params, i, j);
    std::vector<Slot> out;
    for (int k = -params.d(); k <= -1; ++k)
        out.push_back(params.slot(interleaved_term(params, i, j, k)));
    return out;
}

std::vector<Slot> minimal_d_cokernel(const AlgebraParams& params, IndecIndex i, IndecIndex j)
{
    require_proper_hom(params, i, j);
    std::vector<Slot> out;
    for (int k = 2; k <= params.d() + 1; ++k)
        out.push_back(params.slot(interleaved_term(params, i, j, k)));
    return out;
}

std::vector<IndecIndex> canonical_ext_representative(const AlgebraParams& params, IndecIndex i, IndecIndex j)
{
    if (ext_d_dim(params, i, j) == 0)
        throw Error(ErrorKind::NoExtension,
                    "Ext^d(f" + std::to_string(i.value) + ", f" + std::to_string(j.value) + ") = 0");
    const int t = i.value - j.value - params.m() + 1;
    std::vector<IndecIndex> out;
    for (int k = 0; k < params.d() + 2; ++k)
        out.push_back({interleaved_term(params, j, {j.value + t}, k)});
    if (out.back() != i)
        throw Error(ErrorKind::PreconditionViolation, "extension representative does not end at f_i");
    return out;
}

} // namespace nakwide::calc
