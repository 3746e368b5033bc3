#include "hexad/toric.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "hexad/exact.hpp"

namespace hexad {

Int pairing(const Character& m, const Character& u)
{
    return checked_add(checked_mul(m.x, u.x), checked_mul(m.y, u.y));
}

namespace fan {

const std::array<Character, 6>& rays()
{
    static const std::array<Character, 6> r = {{{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}}};
    return r;
}

Line ray_line(std::size_t i) { return hexagon_cycle().at(i); }

std::size_t line_ray(Line l)
{
    const auto& cycle = hexagon_cycle();
    return static_cast<std::size_t>(std::find(cycle.begin(), cycle.end(), l) - cycle.begin());
}

namespace {

Int det2(const Character& a, const Character& b) { return a.x * b.y - a.y * b.x; }

}   // namespace

Int boundary_intersection(std::size_t i, std::size_t j)
{
    const auto& u = rays();
    if (i == j)
    {
        const Character s = u[(i + 5) % 6] + u[(i + 1) % 6];
        // s = b * u_i; recover b from whichever coordinate of u_i is nonzero.
        const Int b = u[i].x != 0 ? s.x / u[i].x : s.y / u[i].y;
        if (s != Character{b * u[i].x, b * u[i].y})
            throw std::logic_error("fan: neighbours of a ray do not sum to a multiple of it");
        return -b;
    }
    const std::size_t d = (i + 6 - j) % 6;
    return (d == 1 || d == 5) ? 1 : 0;
}

void validate()
{
    auto fail = [](const std::string& what) { throw std::logic_error("fan self-check: " + what); };
    const auto& u = rays();
    for (std::size_t i = 0; i < 6; ++i)
    {
        if (det2(u[i], u[(i + 1) % 6]) != 1)
            fail("cone " + std::to_string(i) + " is not unimodular and counterclockwise");
        if (u[(i + 5) % 6] + u[(i + 1) % 6] != u[i])
            fail("u_{i-1} + u_{i+1} != u_i at ray " + std::to_string(i));
    }
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j)
            if (boundary_intersection(i, j) != intersect(line_class(ray_line(i)), line_class(ray_line(j))))
                fail("D_" + std::to_string(i) + ".D_" + std::to_string(j)
                     + " from the fan disagrees with the lattice");
    for (const Character& m : {Character{1, 0}, Character{0, 1}})
        if (!ray_class(principal_divisor(m)).is_zero())
            fail("a principal divisor has nonzero class");
    for (std::size_t k = 0; k < 4; ++k)
    {
        std::array<Int, 4> e{};
        e[k] = 1;
        if (ray_class(ray_coefficients(PicClass(e))) != PicClass(e))
            fail("canonical lift is not a section of the class map");
    }
}

}   // namespace fan

PicClass ray_class(const RayDivisor& a)
{
    PicClass d;
    for (std::size_t i = 0; i < 6; ++i)
        d += a[i] * line_class(fan::ray_line(i));
    return d;
}

RayDivisor principal_divisor(const Character& m)
{
    RayDivisor a{};
    for (std::size_t i = 0; i < 6; ++i)
        a[i] = pairing(m, fan::rays()[i]);
    return a;
}

RayDivisor ray_coefficients(const PicClass& d)
{
    RayDivisor a{};
    auto bump = [&](Line l, Int k) {
        auto& slot = a[fan::line_ray(l)];
        slot = checked_add(slot, k);
    };
    bump(Line::L1, d[0]);
    bump(Line::M2, d[0]);
    bump(Line::M3, d[0]);
    bump(Line::M1, d[1]);
    bump(Line::M2, d[2]);
    bump(Line::M3, d[3]);
    return a;
}

namespace {

Int floor_div(Int a, Int b)
{
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

Int ceil_div(Int a, Int b) { return -floor_div(-a, b); }

}   // namespace

CharacterWindow character_window(const RayDivisor& a, Int expansion)
{
    const auto& u = fan::rays();
    bool any = false;
    CharacterWindow w{0, 0, 0, 0};
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = i + 1; j < 6; ++j)
        {
            const Int det = u[i].x * u[j].y - u[i].y * u[j].x;
            if (det == 0)
                continue;
            // Cramer's rule for <m,u_i> = -a_i, <m,u_j> = -a_j.
            const Int nx = -a[i] * u[j].y + a[j] * u[i].y;
            const Int ny = -u[i].x * a[j] + u[j].x * a[i];
            const Int x0 = floor_div(nx, det), x1 = ceil_div(nx, det);
            const Int y0 = floor_div(ny, det), y1 = ceil_div(ny, det);
            if (!any)
            {
                w = {x0, x1, y0, y1};
                any = true;
            }
            w.xmin = std::min(w.xmin, x0);
            w.xmax = std::max(w.xmax, x1);
            w.ymin = std::min(w.ymin, y0);
            w.ymax = std::max(w.ymax, y1);
        }
    w.xmin -= expansion;
    w.ymin -= expansion;
    w.xmax += expansion;
    w.ymax += expansion;
    return w;
}

std::uint8_t chart_pattern(const RayDivisor& a, const Character& m)
{
    std::uint8_t bits = 0;
    for (std::size_t i = 0; i < 6; ++i)
        if (pairing(m, fan::rays()[i]) >= -a[i])
            bits |= static_cast<std::uint8_t>(1u << i);
    return bits;
}

namespace {

// Maximal cone k is spanned by rays k and k+1.
constexpr std::uint8_t cone_rays(unsigned k) { return static_cast<std::uint8_t>((1u << k) | (1u << ((k + 1) % 6))); }

CohomologyTriple compute_pattern_cohomology(std::uint8_t pattern)
{
    // Cochains of degree p live on (p+1)-subsets of the cones whose common
    // face only involves rays where the character is regular.
    std::array<std::vector<unsigned>, 6> cells;
    for (unsigned s = 1; s < 64; ++s)
    {
        std::uint8_t common = 0x3f;
        for (unsigned k = 0; k < 6; ++k)
            if (s & (1u << k))
                common &= cone_rays(k);
        if ((common & ~pattern) == 0)
            cells[static_cast<std::size_t>(__builtin_popcount(s) - 1)].push_back(s);
    }

    std::array<std::size_t, 6> ranks{};   // ranks[p] = rank of d_p : C^p -> C^{p+1}
    for (std::size_t p = 0; p + 1 < 6; ++p)
    {
        const auto& src = cells[p];
        const auto& dst = cells[p + 1];
        if (src.empty() || dst.empty())
            continue;
        RationalMatrix d(dst.size(), src.size());
        for (std::size_t r = 0; r < dst.size(); ++r)
        {
            const unsigned face = dst[r];
            int position = 0;
            for (unsigned k = 0; k < 6; ++k)
            {
                if (!(face & (1u << k)))
                    continue;
                const unsigned smaller = face & ~(1u << k);
                auto it = std::find(src.begin(), src.end(), smaller);
                if (it != src.end())
                    d(r, static_cast<std::size_t>(it - src.begin())) = (position % 2 == 0) ? 1 : -1;
                ++position;
            }
        }
        ranks[p] = d.rank();
    }

    std::array<Int, 6> h{};
    for (std::size_t p = 0; p < 6; ++p)
    {
        const std::size_t in = p == 0 ? 0 : ranks[p - 1];
        h[p] = static_cast<Int>(cells[p].size() - ranks[p] - in);
    }
    for (std::size_t p = 3; p < 6; ++p)
        if (h[p] != 0)
            throw std::logic_error("Čech cohomology in degree > 2 on a surface");
    return {h[0], h[1], h[2]};
}

}   // namespace

const CohomologyTriple& pattern_cohomology(std::uint8_t pattern)
{
    static const std::array<CohomologyTriple, 64> table = [] {
        std::array<CohomologyTriple, 64> t{};
        for (unsigned p = 0; p < 64; ++p)
            t[p] = compute_pattern_cohomology(static_cast<std::uint8_t>(p));
        return t;
    }();
    return table.at(pattern & 0x3f);
}

std::vector<Character> global_sections_basis(const RayDivisor& a)
{
    const CharacterWindow w = character_window(a, 1);
    std::vector<Character> out;
    for (Int x = w.xmin; x <= w.xmax; ++x)
        for (Int y = w.ymin; y <= w.ymax; ++y)
            if (chart_pattern(a, {x, y}) == 0x3f)
                out.push_back({x, y});
    return out;
}

std::vector<Character> global_sections_basis(const PicClass& d)
{
    return global_sections_basis(ray_coefficients(d));
}

CohomologyTriple cohomology(const RayDivisor& a, Int expansion)
{
    const CharacterWindow w = character_window(a, expansion);
    CohomologyTriple total;
    for (Int x = w.xmin; x <= w.xmax; ++x)
        for (Int y = w.ymin; y <= w.ymax; ++y)
        {
            const CohomologyTriple& c = pattern_cohomology(chart_pattern(a, {x, y}));
            total.h0 += c.h0;
            total.h1 += c.h1;
            total.h2 += c.h2;
        }
    return total;
}

CohomologyTriple cohomology(const PicClass& d, Int expansion)
{
    return cohomology(ray_coefficients(d), expansion);
}

Int euler_characteristic(const PicClass& d)
{
    const Int twice = checked_sub(intersect(d, d), intersect(d, canonical_class()));
    if (twice % 2 != 0)
        throw std::logic_error("D.D - D.K is odd: the form is not even on D(D - K)");
    return 1 + twice / 2;
}

std::array<Int, 2> curve_cohomology(Int t)
{
    return {std::max<Int>(t + 1, 0), std::max<Int>(-t - 1, 0)};
}

}   // namespace hexad
