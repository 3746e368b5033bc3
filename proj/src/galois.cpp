#include "hexad/galois.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace hexad {

const std::vector<HexSymmetry>& hexagon_symmetries()
{
    static const std::vector<HexSymmetry> group = [] {
        std::vector<HexSymmetry> out;
        std::array<Line, 6> p = kLines;
        do
        {
            if (auto g = HexSymmetry::from_permutation(p))
                out.push_back(*g);
        } while (std::next_permutation(p.begin(), p.end(),
                                       [](Line a, Line b) { return index_of(a) < index_of(b); }));
        std::sort(out.begin(), out.end());
        return out;
    }();
    return group;
}

std::vector<HexSymmetry> generated_subgroup(const std::vector<HexSymmetry>& gens)
{
    std::vector<HexSymmetry> elems = {HexSymmetry::identity()};
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (const HexSymmetry& g : gens)
        {
            HexSymmetry h = g.compose(elems[i]);
            if (std::find(elems.begin(), elems.end(), h) == elems.end())
                elems.push_back(h);
        }
    std::sort(elems.begin(), elems.end());
    return elems;
}

std::vector<int> SubgroupReport::quadratic_center() const
{
    std::vector<int> out;
    for (const auto& o : orbits_on_blowdowns)
        out.push_back(static_cast<int>(o.size()));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> SubgroupReport::cubic_center() const
{
    std::vector<int> out;
    for (const auto& o : orbits_on_jclasses)
        out.push_back(static_cast<int>(o.size()));
    std::sort(out.begin(), out.end());
    return out;
}

Partition orbits(const std::vector<HexSymmetry>& group, const std::vector<PicClass>& classes)
{
    Partition out;
    std::vector<bool> done(classes.size(), false);
    for (std::size_t i = 0; i < classes.size(); ++i)
    {
        if (done[i])
            continue;
        std::vector<std::size_t> orbit;
        for (const HexSymmetry& g : group)
        {
            auto it = std::find(classes.begin(), classes.end(), g.apply(classes[i]));
            if (it == classes.end())
                throw std::logic_error("class " + describe(classes[i]) + " leaves the list under " + g.to_string());
            const std::size_t j = static_cast<std::size_t>(it - classes.begin());
            if (std::find(orbit.begin(), orbit.end(), j) == orbit.end())
                orbit.push_back(j);
        }
        std::sort(orbit.begin(), orbit.end());
        for (std::size_t j : orbit)
            done[j] = true;
        out.push_back(std::move(orbit));
    }
    return out;
}

Partition line_orbits(const std::vector<HexSymmetry>& group)
{
    std::vector<PicClass> lines;
    for (Line l : kLines)
        lines.push_back(line_class(l));
    return orbits(group, lines);
}

namespace {

using IndexSet = std::vector<std::size_t>;

IndexSet indices_of(const std::vector<HexSymmetry>& elems)
{
    const auto& all = hexagon_symmetries();
    IndexSet out;
    for (const HexSymmetry& g : elems)
        out.push_back(static_cast<std::size_t>(std::find(all.begin(), all.end(), g) - all.begin()));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<HexSymmetry> elements_of(const IndexSet& idx)
{
    std::vector<HexSymmetry> out;
    for (std::size_t i : idx)
        out.push_back(hexagon_symmetries()[i]);
    return out;
}

/// Lexicographically least generating set of minimal size.
std::vector<HexSymmetry> least_generators(const IndexSet& subgroup)
{
    const auto& all = hexagon_symmetries();
    if (subgroup.size() == 1)
        return {};
    for (std::size_t a : subgroup)
        if (indices_of(generated_subgroup({all[a]})) == subgroup)
            return {all[a]};
    for (std::size_t a : subgroup)
        for (std::size_t b : subgroup)
            if (a < b && indices_of(generated_subgroup({all[a], all[b]})) == subgroup)
                return {all[a], all[b]};
    throw std::logic_error("subgroup of the hexagon group needs more than two generators");
}

}   // namespace

std::vector<SubgroupReport> enumerate_subgroups()
{
    const auto& all = hexagon_symmetries();

    // Every subgroup of a dihedral group is generated by at most two elements.
    std::set<IndexSet> subgroups;
    for (const HexSymmetry& a : all)
        for (const HexSymmetry& b : all)
            subgroups.insert(indices_of(generated_subgroup({a, b})));

    std::map<IndexSet, std::set<IndexSet>> classes;   // representative -> members
    std::set<IndexSet> assigned;
    for (const IndexSet& s : subgroups)
    {
        if (assigned.count(s))
            continue;
        std::set<IndexSet> conj;
        for (const HexSymmetry& g : all)
        {
            std::vector<HexSymmetry> image;
            for (const HexSymmetry& h : elements_of(s))
                image.push_back(g.compose(h).compose(g.inverse()));
            conj.insert(indices_of(image));
        }
        assigned.insert(conj.begin(), conj.end());
        classes[*conj.begin()] = conj;
    }

    const TiltingBundle bundle = tilting_summands();
    std::vector<PicClass> blowdowns, jclasses;
    for (const Summand& s : bundle.summands)
    {
        if (s.block == 'I')
            blowdowns.push_back(s.divisor);
        else if (s.block == 'J')
            jclasses.push_back(s.divisor);
    }

    std::vector<SubgroupReport> reports;
    for (const auto& [rep, members] : classes)
    {
        SubgroupReport r;
        r.elements = elements_of(rep);
        r.generators = least_generators(rep);
        r.order = static_cast<int>(rep.size());
        r.conjugacy_class_size = static_cast<int>(members.size());
        r.orbits_on_blowdowns = orbits(r.elements, blowdowns);
        r.orbits_on_jclasses = orbits(r.elements, jclasses);
        r.orbits_on_lines = line_orbits(r.elements);
        r.invariant = verify_invariance(bundle.summands, r.elements);
        reports.push_back(std::move(r));
    }
    std::stable_sort(reports.begin(), reports.end(),
                     [](const SubgroupReport& a, const SubgroupReport& b) { return a.order < b.order; });
    return reports;
}

bool verify_invariance(const std::vector<Summand>& summands, const std::vector<HexSymmetry>& group)
{
    for (const HexSymmetry& g : group)
        for (const Summand& s : summands)
        {
            const PicClass image = g.apply(s.divisor);
            auto it = std::find_if(summands.begin(), summands.end(),
                                   [&](const Summand& t) { return t.divisor == image; });
            if (it == summands.end() || it->multiplicity != s.multiplicity)
                return false;
        }
    return true;
}

bool verify_invariance() { return verify_invariance(tilting_summands().summands, hexagon_symmetries()); }

}   // namespace hexad
