#pragma once

#include <functional>
#include <vector>

#include "nakwide/calculus.hpp"
#include "nakwide/error.hpp"
#include "nakwide/model.hpp"
#include "nakwide/rep.hpp"

namespace nakwide::testing {

/// Every triple named in the acceptance criteria, plus the smallest valid one.
inline std::vector<AlgebraParams> desk_params()
{
    return {validate_params(9, 4, 4),  validate_params(7, 3, 4),  validate_params(4, 2, 3),
            validate_params(6, 2, 5),  validate_params(13, 6, 4), validate_params(11, 5, 4),
            validate_params(5, 4, 2),  validate_params(3, 2, 2)};
}

/// Smaller set for the slower rep-engine sweeps.
inline std::vector<AlgebraParams> small_params()
{
    return {validate_params(9, 4, 4), validate_params(7, 3, 4), validate_params(4, 2, 3),
            validate_params(6, 2, 5), validate_params(5, 4, 2), validate_params(3, 2, 2)};
}

/// Runs `fn` and reports whether it threw nakwide::Error of the given kind.
inline bool throws_kind(ErrorKind kind, const std::function<void()>& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.kind() == kind;
    }
    return false;
}

/// Interval modules f_{t_0} -> f_{t_1} -> ... joined by the normalised maps
/// (scalar 1 on the common support), closed at both ends unless stated.
inline rep::ComplexOfReps realize(const AlgebraParams& params, const rep::Algebra& algebra,
                                  const std::vector<IndecIndex>& terms, bool closed_left = true,
                                  bool closed_right = true)
{
    rep::ComplexOfReps c;
    c.closed_left = closed_left;
    c.closed_right = closed_right;
    for (const auto& t : terms)
        c.terms.push_back(rep::f_module(algebra, params, t));
    for (std::size_t k = 0; k + 1 < terms.size(); ++k)
        c.maps.push_back(rep::interval_map(algebra, interval_of(params, terms[k]), interval_of(params, terms[k + 1])));
    return c;
}

inline std::vector<int> values(const std::vector<IndecIndex>& v)
{
    std::vector<int> out;
    for (auto i : v)
        out.push_back(i.value);
    return out;
}

/// 0 for a zero slot.
inline std::vector<int> values(const std::vector<Slot>& v)
{
    std::vector<int> out;
    for (auto s : v)
        out.push_back(s ? s->value : 0);
    return out;
}

} // namespace nakwide::testing
