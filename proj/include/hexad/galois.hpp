/**
 * Galois images as subgroups of the hexagon symmetry group.
 *
 * A Galois action on the six lines factors through a subgroup of the
 * order-12 symmetry group.  For each conjugacy class of subgroups we report
 * the orbits on the two blowdown classes and on the three J-classes; these
 * orbit shapes predict the quadratic and cubic étale centres.
 */

#ifndef HEXAD_GALOIS_HPP
#define HEXAD_GALOIS_HPP

#include <vector>

#include "hexad/picard.hpp"
#include "hexad/tilting.hpp"

namespace hexad {

/// All adjacency-preserving permutations of the lines, sorted; identity first.
const std::vector<HexSymmetry>& hexagon_symmetries();

/// Subgroup generated by the given elements.
std::vector<HexSymmetry> generated_subgroup(const std::vector<HexSymmetry>& gens);

using Partition = std::vector<std::vector<std::size_t>>;

struct SubgroupReport
{
    std::vector<HexSymmetry> generators;
    std::vector<HexSymmetry> elements;
    int order = 0;
    int conjugacy_class_size = 0;   ///< number of conjugate subgroups
    Partition orbits_on_blowdowns;  ///< indices into {H, H'}
    Partition orbits_on_jclasses;   ///< indices into the three J-classes
    Partition orbits_on_lines;      ///< indices into kLines
    bool invariant = false;         ///< tilting summand multiset is fixed

    /// Degrees of the field factors of the centres: orbit sizes.
    std::vector<int> quadratic_center() const;
    std::vector<int> cubic_center() const;
};

/// Orbits of a set of elements acting on a list of classes; throws if a class leaves the list.
Partition orbits(const std::vector<HexSymmetry>& group, const std::vector<PicClass>& classes);
Partition line_orbits(const std::vector<HexSymmetry>& group);

/**
 * One report per conjugacy class of subgroups, represented by the subgroup
 * whose sorted element list is lexicographically least.  Reports are
 * ordered by subgroup order, then representative.
 */
std::vector<SubgroupReport> enumerate_subgroups();

/// True iff every g maps the multiset (class, multiplicity) onto itself.
bool verify_invariance(const std::vector<Summand>& summands, const std::vector<HexSymmetry>& group);
bool verify_invariance();

}   // namespace hexad

#endif
