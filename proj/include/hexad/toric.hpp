/**
 * The split surface as a smooth complete toric surface.
 *
 * The fan has the six rays (1,0), (1,1), (0,1), (-1,0), (-1,-1), (0,-1);
 * boundary divisor D_i is identified with the i-th line of hexagon_cycle().
 * Line bundle cohomology is computed one character at a time from the Čech
 * complex of the six affine charts, which gives an oracle independent of
 * any vanishing argument.
 */

#ifndef HEXAD_TORIC_HPP
#define HEXAD_TORIC_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <vector>

#include "hexad/picard.hpp"

namespace hexad {

/// An element of the character lattice M = Z^2 (or of N, for rays).
struct Character
{
    Int x = 0;
    Int y = 0;

    friend bool operator==(const Character&, const Character&) = default;
    friend auto operator<=>(const Character&, const Character&) = default;
    Character operator+(const Character& o) const { return {x + o.x, y + o.y}; }
    Character operator-(const Character& o) const { return {x - o.x, y - o.y}; }
};

Int pairing(const Character& m, const Character& u);

/// Coefficients a_i of sum a_i D_i over the six boundary divisors.
using RayDivisor = std::array<Int, 6>;

struct CohomologyTriple
{
    Int h0 = 0;
    Int h1 = 0;
    Int h2 = 0;

    friend bool operator==(const CohomologyTriple&, const CohomologyTriple&) = default;
    Int euler() const { return h0 - h1 + h2; }
    bool good() const { return h1 == 0 && h2 == 0; }
};

namespace fan {

const std::array<Character, 6>& rays();

/// The line represented by boundary divisor D_i.
Line ray_line(std::size_t i);
std::size_t line_ray(Line l);

/// Smoothness, the -1 self-intersection relation, and agreement with the lattice.
void validate();

/// D_i . D_j from the fan alone: adjacency gives 1, D_i^2 = -b where u_{i-1} + u_{i+1} = b u_i.
Int boundary_intersection(std::size_t i, std::size_t j);

}   // namespace fan

PicClass ray_class(const RayDivisor& a);

/// (<m, u_i>)_i, the divisor of the character m.
RayDivisor principal_divisor(const Character& m);

/**
 * Canonical lift of a class to a boundary divisor.  The section of the class
 * map sends b0 to D(L1) + D(M2) + D(M3) and b_i to D(M_i); it is linear, so
 * lifts of sums are sums of lifts.
 */
RayDivisor ray_coefficients(const PicClass& d);

struct CharacterWindow
{
    Int xmin, xmax, ymin, ymax;

    std::size_t size() const { return static_cast<std::size_t>((xmax - xmin + 1) * (ymax - ymin + 1)); }
};

/**
 * Bounding box of the pairwise intersections of the lines <m, u_i> = -a_i,
 * grown by `expansion` on every side.
 */
CharacterWindow character_window(const RayDivisor& a, Int expansion = 1);

/// Bit i is set iff <m, u_i> >= -a_i.
std::uint8_t chart_pattern(const RayDivisor& a, const Character& m);

/**
 * Cohomology of the degree-m Čech complex on the six-chart cover, which
 * depends on m only through its chart pattern.  Computed by exact ranks.
 */
const CohomologyTriple& pattern_cohomology(std::uint8_t pattern);

/// Lattice points of the section polytope, sorted.
std::vector<Character> global_sections_basis(const RayDivisor& a);
std::vector<Character> global_sections_basis(const PicClass& d);

CohomologyTriple cohomology(const RayDivisor& a, Int expansion = 1);
CohomologyTriple cohomology(const PicClass& d, Int expansion = 1);

/// Riemann-Roch: 1 + (D.D - D.K) / 2.
Int euler_characteristic(const PicClass& d);

/// (h0, h1) of O(t) on a line E ~ P^1, i.e. of O_E(D) with D.E = t.
std::array<Int, 2> curve_cohomology(Int t);

}   // namespace hexad

#endif
