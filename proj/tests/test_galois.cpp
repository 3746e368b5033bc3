#include <doctest.h>

#include <algorithm>
#include <set>

#include "hexad/galois.hpp"
#include "hexad/tilting.hpp"
#include "support.hpp"

using namespace hexad;

namespace {

using Perm = std::array<int, 6>;

// All permutations of the six hand-coordinate lines that preserve the
// intersection matrix.
std::vector<Perm> brute_force_symmetries()
{
    Perm p = {0, 1, 2, 3, 4, 5};
    std::vector<Perm> out;
    do
    {
        bool ok = true;
        for (int i = 0; i < 6 && ok; ++i)
            for (int j = 0; j < 6 && ok; ++j)
                ok = testing::hand_form(testing::hand_line(i), testing::hand_line(j))
                     == testing::hand_form(testing::hand_line(p[static_cast<std::size_t>(i)]),
                                           testing::hand_line(p[static_cast<std::size_t>(j)]));
        if (ok)
            out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

Perm compose(const Perm& a, const Perm& b)   // a after b
{
    Perm out{};
    for (std::size_t i = 0; i < 6; ++i)
        out[i] = a[static_cast<std::size_t>(b[i])];
    return out;
}

Perm inverse(const Perm& a)
{
    Perm out{};
    for (std::size_t i = 0; i < 6; ++i)
        out[static_cast<std::size_t>(a[i])] = static_cast<int>(i);
    return out;
}

std::set<Perm> generate(const std::vector<Perm>& gens)
{
    std::set<Perm> g = {{0, 1, 2, 3, 4, 5}};
    bool grew = true;
    while (grew)
    {
        grew = false;
        for (const Perm& x : std::vector<Perm>(g.begin(), g.end()))
            for (const Perm& s : gens)
                grew = g.insert(compose(s, x)).second || grew;
    }
    return g;
}

Perm as_perm(const HexSymmetry& g)
{
    Perm p{};
    for (std::size_t i = 0; i < 6; ++i)
        p[i] = static_cast<int>(index_of(g.apply(kLines[i])));
    return p;
}

}   // namespace

TEST_CASE("symmetry group matches brute-force enumeration")
{
    const auto brute = brute_force_symmetries();
    CHECK(brute.size() == 12);
    const auto& group = hexagon_symmetries();
    REQUIRE(group.size() == 12);
    std::set<Perm> lib;
    for (const HexSymmetry& g : group)
        lib.insert(as_perm(g));
    CHECK(lib == std::set<Perm>(brute.begin(), brute.end()));
    CHECK(group.front().is_identity());
}

TEST_CASE("group structure: closed, contains sigma, S2 x S3")
{
    const auto& group = hexagon_symmetries();
    for (const HexSymmetry& a : group)
        for (const HexSymmetry& b : group)
            CHECK(std::find(group.begin(), group.end(), a.compose(b)) != group.end());
    CHECK(std::find(group.begin(), group.end(), sigma()) != group.end());

    // element orders of the dihedral group of order 12: 1, 7 involutions,
    // 2 of order 3, 2 of order 6
    std::map<int, int> orders;
    for (const HexSymmetry& g : group)
        ++orders[g.order()];
    CHECK(orders == std::map<int, int>{{1, 1}, {2, 7}, {3, 2}, {6, 2}});

    // centre is {1, sigma^3}
    int central = 0;
    for (const HexSymmetry& z : group)
    {
        bool commutes = true;
        for (const HexSymmetry& g : group)
            commutes = commutes && z.compose(g) == g.compose(z);
        central += commutes ? 1 : 0;
    }
    CHECK(central == 2);
}

TEST_CASE("action on Pic is faithful and preserves K and degree")
{
    const auto& group = hexagon_symmetries();
    for (const HexSymmetry& g : group)
    {
        if (!g.is_identity())
            CHECK(g.matrix() != identity_matrix4());
        CHECK(g.apply(canonical_class()) == canonical_class());
        for (int trial = 0; trial < 20; ++trial)
        {
            const PicClass d = testing::random_class(6);
            CHECK(degree(g.apply(d)) == degree(d));
        }
    }
    for (const PicClass& d : {class_H(), class_of("L1+M2"), canonical_class()})
        CHECK(HexSymmetry::identity().apply(d) == d);
}

TEST_CASE("subgroup enumeration matches a brute-force count")
{
    // every subgroup of a dihedral group is generated by at most two elements
    const auto brute = brute_force_symmetries();
    std::set<std::set<Perm>> subgroups;
    for (const Perm& a : brute)
        for (const Perm& b : brute)
            subgroups.insert(generate({a, b}));
    CHECK(subgroups.size() == 16);

    std::set<std::set<Perm>> classes;
    for (const auto& h : subgroups)
    {
        std::set<std::set<Perm>> conj;
        for (const Perm& g : brute)
        {
            std::set<Perm> c;
            for (const Perm& x : h)
                c.insert(compose(compose(g, x), inverse(g)));
            conj.insert(c);
        }
        classes.insert(*conj.begin());   // canonical: least conjugate
    }
    CHECK(classes.size() == 10);

    const auto reports = enumerate_subgroups();
    CHECK(reports.size() == classes.size());
    int total = 0;
    std::multiset<int> orders, ref_orders;
    for (const auto& c : classes)
        ref_orders.insert(static_cast<int>(c.size()));
    for (const SubgroupReport& r : reports)
    {
        total += r.conjugacy_class_size;
        orders.insert(r.order);
        CHECK(12 % r.order == 0);
        CHECK(static_cast<int>(r.elements.size()) == r.order);
        CHECK(generated_subgroup(r.generators).size() == r.elements.size());
        CHECK(r.invariant);
    }
    CHECK(total == 16);
    CHECK(orders == ref_orders);
}

TEST_CASE("subgroup report examples")
{
    const auto reports = enumerate_subgroups();
    const SubgroupReport& trivial = reports.front();
    CHECK(trivial.order == 1);
    CHECK(trivial.orbits_on_blowdowns == Partition{{0}, {1}});
    CHECK(trivial.orbits_on_jclasses == Partition{{0}, {1}, {2}});
    CHECK(trivial.quadratic_center() == std::vector<int>{1, 1});
    CHECK(trivial.cubic_center() == std::vector<int>{1, 1, 1});

    const SubgroupReport& full = reports.back();
    CHECK(full.order == 12);
    CHECK(full.orbits_on_blowdowns.size() == 1);
    CHECK(full.orbits_on_jclasses.size() == 1);
    CHECK(full.orbits_on_lines.size() == 1);

    // <sigma^3>: H and H' swapped, every J class fixed
    const std::vector<HexSymmetry> central = generated_subgroup({sigma().power(3)});
    CHECK(central.size() == 2);
    CHECK(orbits(central, {class_H(), class_H_prime()}).size() == 1);
    const auto& s = tilting_summands().summands;
    CHECK(orbits(central, {s[2].divisor, s[3].divisor, s[4].divisor}).size() == 3);
    bool found = false;
    for (const SubgroupReport& r : reports)
        if (r.order == 2 && r.conjugacy_class_size == 1)
        {
            found = true;
            CHECK(r.orbits_on_blowdowns.size() == 1);
            CHECK(r.orbits_on_jclasses.size() == 3);
        }
    CHECK(found);
}

TEST_CASE("orbit patterns stay within the quadratic and cubic shapes")
{
    for (const SubgroupReport& r : enumerate_subgroups())
    {
        const std::size_t b = r.orbits_on_blowdowns.size(), j = r.orbits_on_jclasses.size();
        CHECK((b == 1 || b == 2));
        CHECK((j >= 1 && j <= 3));
        int qsum = 0, csum = 0;
        for (int x : r.quadratic_center())
            qsum += x;
        for (int x : r.cubic_center())
            csum += x;
        CHECK(qsum == 2);
        CHECK(csum == 3);
    }
}

TEST_CASE("invariance of the summand multiset")
{
    CHECK(verify_invariance());
    const auto& group = hexagon_symmetries();
    const auto summands = tilting_summands().summands;
    CHECK(verify_invariance(summands, {sigma()}));
    const auto r = *HexSymmetry::from_permutation({Line::L1, Line::L3, Line::L2, Line::M1, Line::M3, Line::M2});
    CHECK(verify_invariance(summands, {r}));
    for (const HexSymmetry& g : group)
        CHECK(verify_invariance(summands, {g}));

    auto edited = summands;
    edited[0].multiplicity = 2;
    CHECK_FALSE(verify_invariance(edited, group));
    CHECK_FALSE(verify_invariance(edited, {sigma()}));
    CHECK(verify_invariance(edited, {HexSymmetry::identity()}));
}
