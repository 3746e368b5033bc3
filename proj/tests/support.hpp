// Shared helpers for the unit tests: a fixed-seed generator and brute-force
// reference computations that do not go through the library's algorithms.

#ifndef HEXAD_TESTS_SUPPORT_HPP
#define HEXAD_TESTS_SUPPORT_HPP

#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "hexad/picard.hpp"
#include "hexad/toric.hpp"

namespace testing {

using hexad::Int;
using hexad::PicClass;

inline std::mt19937_64& rng()
{
    static std::mt19937_64 gen(0x6865786164ULL);
    return gen;
}

inline Int uniform(Int lo, Int hi)
{
    return std::uniform_int_distribution<Int>(lo, hi)(rng());
}

inline PicClass random_class(Int bound)
{
    return PicClass({uniform(-bound, bound), uniform(-bound, bound), uniform(-bound, bound), uniform(-bound, bound)});
}

inline hexad::Line random_line() { return hexad::kLines[static_cast<std::size_t>(uniform(0, 5))]; }

// Coordinates written out by hand: M_i = b_i, L_i = b0 - b_j - b_k.
inline PicClass hand_line(int idx)
{
    static const std::array<PicClass, 6> lines = {
        PicClass({1, 0, -1, -1}), PicClass({1, -1, 0, -1}), PicClass({1, -1, -1, 0}),
        PicClass({0, 1, 0, 0}),   PicClass({0, 0, 1, 0}),   PicClass({0, 0, 0, 1})};
    return lines[static_cast<std::size_t>(idx)];
}

inline Int hand_form(const PicClass& a, const PicClass& b)
{
    return a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3];
}

inline const PicClass& hand_K()
{
    static const PicClass k({-3, 1, 1, 1});
    return k;
}

inline Int riemann_roch(const PicClass& d)
{
    return 1 + (hand_form(d, d) - hand_form(d, hand_K())) / 2;
}

// Lattice points m with <m, u_i> >= -a_i for the six hexagon rays, by
// scanning a box that certainly contains the polygon.
inline Int count_sections(const hexad::RayDivisor& a)
{
    static const std::array<std::array<Int, 2>, 6> rays = {
        {{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}}};
    Int bound = 1;
    for (Int x : a)
        bound += x < 0 ? -x : x;
    Int n = 0;
    for (Int x = -bound; x <= bound; ++x)
        for (Int y = -bound; y <= bound; ++y)
        {
            bool in = true;
            for (std::size_t i = 0; i < 6 && in; ++i)
                in = rays[i][0] * x + rays[i][1] * y >= -a[i];
            n += in ? 1 : 0;
        }
    return n;
}

struct Triple
{
    Int h0, h1, h2;
};

// h0 by point count, h2 by Serre duality (K lifts to minus the boundary),
// h1 from Riemann-Roch.
inline Triple reference_cohomology(const PicClass& d)
{
    const hexad::RayDivisor a = hexad::ray_coefficients(d);
    hexad::RayDivisor dual{};
    for (std::size_t i = 0; i < 6; ++i)
        dual[i] = -1 - a[i];
    const Int h0 = count_sections(a);
    const Int h2 = count_sections(dual);
    return {h0, h0 + h2 - riemann_roch(d), h2};
}

// The six tilting classes and their multiplicities, written out by hand.
inline const std::vector<std::pair<PicClass, int>>& hand_summands()
{
    static const std::vector<std::pair<PicClass, int>> s = {
        {PicClass({1, 0, 0, 0}), 3},   {PicClass({2, -1, -1, -1}), 3}, {PicClass({1, 0, 0, -1}), 2},
        {PicClass({1, -1, 0, 0}), 2},  {PicClass({1, 0, -1, 0}), 2},   {PicClass({0, 0, 0, 0}), 1}};
    return s;
}

}   // namespace testing

#endif
