/**
 * The split tilting bundle and its endomorphism algebra.
 *
 * The bundle is the sum of the sigma-orbits of O(H) and O(L1+M2) plus O.
 * Its endomorphism algebra is built as an explicit structure-constant
 * algebra: a basis element is a Cox monomial, i.e. a section character of
 * D_t - D_s for a pair of summand copies (s, t), and composition adds
 * characters.  Homological invariants are computed from that table alone.
 */

#ifndef HEXAD_TILTING_HPP
#define HEXAD_TILTING_HPP

#include <optional>
#include <string>
#include <vector>

#include "hexad/picard.hpp"
#include "hexad/toric.hpp"

namespace hexad {

struct Summand
{
    PicClass divisor;
    int multiplicity;
    std::string label;   ///< e.g. "H", "L1+M2", "0"
    char block;          ///< 'I', 'J' or 'O'
};

struct TiltingBundle
{
    std::vector<Summand> summands;   ///< I classes, then J classes, then O

    int rank() const;
    std::vector<PicClass> divisors() const;
};

TiltingBundle tilting_summands();

using IntMatrix = std::vector<std::vector<Int>>;

/// Entry (a, b) is h^i(D_b - D_a) over the distinct summand classes.
IntMatrix ext_table(int i);

struct AlgebraBasisElement
{
    std::size_t source;    ///< vertex (summand copy) the morphism starts at
    std::size_t target;
    Character character;   ///< section character of D_target - D_source

    friend bool operator==(const AlgebraBasisElement&, const AlgebraBasisElement&) = default;
};

/**
 * A finite-dimensional algebra with a basis of "arrows" between vertices,
 * in which the product of two basis elements is either zero or another
 * basis element with coefficient 1.
 *
 * multiply(a, b) is the composite a after b; it can be nonzero only when
 * b.target == a.source.  Vertices are grouped into classes (isomorphic
 * summands); the radical is spanned by the basis elements joining distinct
 * classes, which is valid because the class quiver is triangular.
 */
class StructureConstantAlgebra
{
public:
    StructureConstantAlgebra(std::vector<std::size_t> vertex_class,
                             std::vector<std::string> class_labels,
                             std::vector<PicClass> class_divisors,
                             std::vector<AlgebraBasisElement> basis,
                             std::vector<int> products);

    std::size_t dimension() const { return basis_.size(); }
    std::size_t vertex_count() const { return vertex_class_.size(); }
    std::size_t class_count() const { return class_labels_.size(); }
    std::size_t vertex_class(std::size_t v) const { return vertex_class_[v]; }
    const std::vector<std::string>& class_labels() const { return class_labels_; }
    const std::vector<PicClass>& class_divisors() const { return class_divisors_; }
    const std::vector<AlgebraBasisElement>& basis() const { return basis_; }
    const AlgebraBasisElement& element(std::size_t i) const { return basis_[i]; }

    std::optional<std::size_t> multiply(std::size_t a, std::size_t b) const;

    /// Basis element acting as the identity on vertex v, if present.
    std::optional<std::size_t> vertex_idempotent(std::size_t v) const;

    std::optional<std::size_t> find(std::size_t source, std::size_t target, const Character& m) const;

    bool is_radical(std::size_t i) const;

    /// First vertex of each class.
    std::size_t class_representative(std::size_t c) const;
    std::size_t class_multiplicity(std::size_t c) const;

    /// Number of basis elements from vertices of class `source_class` to vertices of class `target_class`.
    std::size_t block_dimension(std::size_t target_class, std::size_t source_class) const;

    /// Dimension of a group of classes, e.g. End of the I-block.
    std::size_t block_dimension(const std::vector<std::size_t>& target_classes,
                                const std::vector<std::size_t>& source_classes) const;

    bool check_associative() const;
    bool check_unital() const;

    /// Largest n with rad^n != 0, plus one; i.e. the Loewy length.
    std::size_t loewy_length() const;

    /// Quotient by the span of radical basis elements.
    StructureConstantAlgebra semisimple_quotient() const;

private:
    std::vector<std::size_t> vertex_class_;
    std::vector<std::string> class_labels_;
    std::vector<PicClass> class_divisors_;
    std::vector<AlgebraBasisElement> basis_;
    std::vector<int> products_;   // dim x dim, -1 for zero
};

class AlgebraError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/**
 * Build End of the split tilting bundle.  Vertices are the 13 summand copies
 * in summand order; class c owns vertices in one contiguous run.  Throws
 * AlgebraError if Ext^1 or Ext^2 is nonzero, a composite character is not a
 * section, or associativity or unitality fails.
 */
StructureConstantAlgebra build_algebra();

/// Projective dimension of the simple module at class c.
int simple_projective_dimension(const StructureConstantAlgebra& alg, std::size_t c);

/**
 * Exact global dimension: the maximum projective dimension of the simples,
 * each computed from a minimal projective resolution.  Throws AlgebraError
 * if a resolution runs past 13 steps.
 */
int global_dimension(const StructureConstantAlgebra& alg);

struct CartanData
{
    IntMatrix cartan;   ///< (a, b) = multiplicity of simple b in projective a
    int k0_rank;
    Int determinant;
};

CartanData cartan_and_k0(const StructureConstantAlgebra& alg);

bool is_upper_unitriangular(const IntMatrix& m);

/**
 * The basis permutation induced by a hexagon symmetry, or nullopt if the
 * symmetry does not permute the basis.  Characters move by the fan
 * automorphism realising the symmetry, corrected by the principal divisor
 * separating the canonical lifts.
 */
std::optional<std::vector<std::size_t>> induced_basis_permutation(const StructureConstantAlgebra& alg,
                                                                  const HexSymmetry& g);

/// True iff perm is a bijection of the basis compatible with all products.
bool is_automorphism(const StructureConstantAlgebra& alg, const std::vector<std::size_t>& perm);

}   // namespace hexad

#endif
