#include <doctest.h>

#include <set>

#include "hexad/galois.hpp"
#include "hexad/toric.hpp"
#include "support.hpp"

using namespace hexad;

namespace {

CohomologyTriple triple(Int a, Int b, Int c) { return {a, b, c}; }

}   // namespace

TEST_CASE("fan validates")
{
    CHECK_NOTHROW(fan::validate());
}

TEST_CASE("fan: adjacent rays form a basis and u(i-1) + u(i+1) = u(i)")
{
    const auto& u = fan::rays();
    for (std::size_t i = 0; i < 6; ++i)
    {
        const Character a = u[i], b = u[(i + 1) % 6], prev = u[(i + 5) % 6];
        CHECK((a.x * b.y - a.y * b.x == 1 || a.x * b.y - a.y * b.x == -1));
        CHECK(prev + b == a);
    }
}

TEST_CASE("fan: wall adjacency reproduces the line intersections")
{
    // Boundary divisors meet exactly when their rays span a cone.
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j)
        {
            Int expected = 0;
            if (i == j)
                expected = -1;
            else if ((i + 1) % 6 == j || (j + 1) % 6 == i)
                expected = 1;
            CHECK(intersect(line_class(fan::ray_line(i)), line_class(fan::ray_line(j))) == expected);
            CHECK(fan::boundary_intersection(i, j) == expected);
        }
    for (Line l : kLines)
        CHECK(fan::ray_line(fan::line_ray(l)) == l);
}

TEST_CASE("class map: unit vectors, principal divisors and lifts")
{
    for (std::size_t i = 0; i < 6; ++i)
    {
        RayDivisor e{};
        e[i] = 1;
        CHECK(ray_class(e) == line_class(fan::ray_line(i)));
    }
    for (Int x = -3; x <= 3; ++x)
        for (Int y = -3; y <= 3; ++y)
            CHECK(ray_class(principal_divisor({x, y})).is_zero());

    CHECK(ray_coefficients(PicClass{}) == RayDivisor{});
    CHECK(ray_coefficients(class_H()) == RayDivisor{1, 1, 0, 0, 0, 1});
    for (Line l : kLines)
        CHECK(ray_class(ray_coefficients(line_class(l))) == line_class(l));
    for (int trial = 0; trial < 200; ++trial)
    {
        const PicClass d = testing::random_class(9);
        CHECK(ray_class(ray_coefficients(d)) == d);
    }
}

TEST_CASE("class map kernel has rank 2")
{
    // Z^6 -> Pic is onto a rank-4 lattice; the principal divisors of two
    // independent characters span the kernel over Q.
    const RayDivisor p = principal_divisor({1, 0}), q = principal_divisor({0, 1});
    bool independent = false;
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j)
            independent = independent || p[i] * q[j] - p[j] * q[i] != 0;
    CHECK(independent);
}

TEST_CASE("global sections examples")
{
    CHECK(global_sections_basis(PicClass{}) == std::vector<Character>{{0, 0}});
    CHECK(global_sections_basis(class_H()).size() == 3);
    CHECK(global_sections_basis(-class_H()).empty());
    CHECK(global_sections_basis(class_of("L1+M2")).size() == 2);
}

TEST_CASE("cohomology examples")
{
    CHECK(cohomology(class_H()) == triple(3, 0, 0));
    CHECK(cohomology(class_H_prime()) == triple(3, 0, 0));
    CHECK(cohomology(-class_H()) == triple(0, 0, 0));
    CHECK(cohomology(-class_H_prime()) == triple(0, 0, 0));
    CHECK(cohomology(PicClass{}) == triple(1, 0, 0));
    CHECK(cohomology(class_of("L1+M2")) == triple(2, 0, 0));
    CHECK(cohomology(canonical_class()) == triple(0, 0, 1));
    CHECK(cohomology(-canonical_class()) == triple(7, 0, 0));
    // two disjoint lines: h1(-L1-L2) = 1
    CHECK(cohomology(class_of("-L1-L2")) == triple(0, 1, 0));
    for (Line l : kLines)
    {
        CHECK(cohomology(line_class(l)) == triple(1, 0, 0));
        CHECK(cohomology(-line_class(l)) == triple(0, 0, 0));
    }
}

TEST_CASE("euler characteristic examples")
{
    CHECK(euler_characteristic(PicClass{}) == 1);
    CHECK(euler_characteristic(class_H()) == 3);
    CHECK(euler_characteristic(-class_H()) == 0);
    CHECK(euler_characteristic(canonical_class()) == 1);
}

TEST_CASE("curve cohomology on P1")
{
    CHECK(curve_cohomology(0) == std::array<Int, 2>{1, 0});
    CHECK(curve_cohomology(-1) == std::array<Int, 2>{0, 0});
    CHECK(curve_cohomology(-2) == std::array<Int, 2>{0, 1});
    CHECK(curve_cohomology(4) == std::array<Int, 2>{5, 0});
    CHECK(curve_cohomology(-5) == std::array<Int, 2>{0, 4});
}

TEST_CASE("chart pattern table")
{
    for (unsigned p = 0; p < 64; ++p)
    {
        const CohomologyTriple& h = pattern_cohomology(static_cast<std::uint8_t>(p));
        CHECK(h.h0 >= 0);
        CHECK(h.h1 >= 0);
        CHECK(h.h2 >= 0);
    }
    CHECK(pattern_cohomology(63) == triple(1, 0, 0));
    CHECK(pattern_cohomology(0) == triple(0, 0, 1));
}

TEST_CASE("property: Cech result matches point count, Serre duality and Riemann-Roch")
{
    for (int trial = 0; trial < 400; ++trial)
    {
        const PicClass d = testing::random_class(5);
        CAPTURE(d.to_string());
        const CohomologyTriple h = cohomology(d);
        const testing::Triple ref = testing::reference_cohomology(d);
        CHECK(h.h0 == ref.h0);
        CHECK(h.h1 == ref.h1);
        CHECK(h.h2 == ref.h2);
        CHECK(h.h0 == static_cast<Int>(global_sections_basis(d).size()));
        CHECK(h.euler() == euler_characteristic(d));
        CHECK(euler_characteristic(d) == testing::riemann_roch(d));
        CHECK(h.h2 == cohomology(canonical_class() - d).h0);
    }
}

TEST_CASE("property: window expansion does not change cohomology")
{
    for (int trial = 0; trial < 150; ++trial)
    {
        const PicClass d = testing::random_class(4);
        CAPTURE(d.to_string());
        const CohomologyTriple base = cohomology(d, 1);
        CHECK(cohomology(d, 6) == base);
    }
}

TEST_CASE("property: adding a principal divisor to the lift changes nothing")
{
    for (int trial = 0; trial < 150; ++trial)
    {
        const PicClass d = testing::random_class(4);
        const Character m{testing::uniform(-5, 5), testing::uniform(-5, 5)};
        RayDivisor a = ray_coefficients(d);
        const RayDivisor p = principal_divisor(m);
        for (std::size_t i = 0; i < 6; ++i)
            a[i] += p[i];
        CHECK(ray_class(a) == d);
        CHECK(cohomology(a) == cohomology(d));
        CHECK(testing::count_sections(a) == cohomology(d).h0);
    }
}

TEST_CASE("property: cohomology is invariant under the hexagon symmetries")
{
    const auto& group = hexagon_symmetries();
    for (int trial = 0; trial < 100; ++trial)
    {
        const PicClass d = testing::random_class(4);
        const HexSymmetry& g = group[static_cast<std::size_t>(testing::uniform(0, 11))];
        CHECK(cohomology(g.apply(d)) == cohomology(d));
    }
}

TEST_CASE("character window contains every section")
{
    for (int trial = 0; trial < 100; ++trial)
    {
        const PicClass d = testing::random_class(5);
        const RayDivisor a = ray_coefficients(d);
        const CharacterWindow w = character_window(a);
        for (const Character& m : global_sections_basis(a))
        {
            CHECK(m.x >= w.xmin);
            CHECK(m.x <= w.xmax);
            CHECK(m.y >= w.ymin);
            CHECK(m.y <= w.ymax);
        }
    }
}
