#pragma once

#include <random>
#include <string>
#include <vector>

#include "omega/game.hpp"
#include "omega/problem.hpp"
#include "omega/rational.hpp"

namespace omega::testing {

inline Rational R(const std::string& text) { return parse_rational(text); }

inline Vector V(std::initializer_list<const char*> values)
{
    Vector result;
    for (const char* value : values)
        result.push_back(parse_rational(value));
    return result;
}

inline Vector Vi(std::initializer_list<long> values)
{
    Vector result;
    for (const long value : values)
        result.push_back(Rational(value));
    return result;
}

/// Williams' 3×6 payoff table.
inline MatrixGame williams_game()
{
    return MatrixGame{{Vi({4, 3, 3, 2, 2, 6}), Vi({0, 7, 3, 6, 2, 2}), Vi({6, 0, 4, 2, 6, 2})}, 0};
}

inline LPProblem williams_problem()
{
    return game_to_lp(williams_game());
}

struct RandomInstanceSpec {
    std::size_t max_n = 5;
    std::size_t max_m = 4;
    long low = -5;
    long high = 5;
};

/// n in [1, max_n], m in [1, max_m], integer A and c in [low, high], b = 1.
inline LPProblem random_instance(std::mt19937_64& rng, const RandomInstanceSpec& spec = {})
{
    std::uniform_int_distribution<std::size_t> n_dist(1, spec.max_n);
    std::uniform_int_distribution<std::size_t> m_dist(1, spec.max_m);
    std::uniform_int_distribution<long> entry(spec.low, spec.high);
    const std::size_t n = n_dist(rng);
    const std::size_t m = m_dist(rng);
    Matrix A(m, Vector(n));
    for (auto& row : A)
        for (auto& value : row)
            value = entry(rng);
    Vector c(n);
    for (auto& value : c)
        value = entry(rng);
    return make_problem(std::move(c), std::move(A), Vector(m, Rational(1)));
}

/// Positive rational p/q with p, q in [1, 9].
inline Rational random_positive(std::mt19937_64& rng)
{
    std::uniform_int_distribution<long> digit(1, 9);
    const long p = digit(rng);
    const long q = digit(rng);
    return Rational(p, q);
}

}  // namespace omega::testing
