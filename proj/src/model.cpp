#include "nakwide/model.hpp"

#include <algorithm>
#include <string>

#include "nakwide/error.hpp"

namespace nakwide {

AlgebraParams validate_params(int m, int ell, int d)
{
    if (m < 3)
        throw Error(ErrorKind::RangeError, "m must be at least 3, got " + std::to_string(m));
    if (ell < 2)
        throw Error(ErrorKind::RangeError, "ell must be at least 2, got " + std::to_string(ell));
    if (d < 1)
        throw Error(ErrorKind::RangeError, "d must be at least 1, got " + std::to_string(d));
    if (2 * (m - 1) != ell * d)
        throw Error(ErrorKind::NonIntegralRatio,
                    "(m-1)/ell = " + std::to_string(m - 1) + "/" + std::to_string(ell) + " differs from d/2 = "
                        + std::to_string(d) + "/2");
    if (ell > 2 && d % 2 != 0)
        throw Error(ErrorKind::ParityViolation, "d must be even when ell > 2, got d = " + std::to_string(d));
    return AlgebraParams(m, ell, d);
}

void require_index(const AlgebraParams& params, IndecIndex i)
{
    if (!params.in_range(i))
        throw Error(ErrorKind::RangeError,
                    "index " + std::to_string(i.value) + " outside 1.." + std::to_string(params.n()));
}

IntervalSupport interval_of(const AlgebraParams& params, IndecIndex i)
{
    require_index(params, i);
    return {std::max(1, i.value - params.ell() + 1), std::min(i.value, params.m())};
}

bool is_projective(const AlgebraParams& params, IndecIndex i)
{
    require_index(params, i);
    return i.value <= params.m();
}

bool is_injective(const AlgebraParams& params, IndecIndex i)
{
    require_index(params, i);
    return i.value >= params.ell();
}

std::optional<IndecIndex> index_of_interval(const AlgebraParams& params, IntervalSupport support)
{
    for (int i = 1; i <= params.n(); ++i)
        if (interval_of(params, {i}) == support)
            return IndecIndex{i};
    return std::nullopt;
}

} // namespace nakwide
