#include "hexad/tilting.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "hexad/exact.hpp"

namespace hexad {

int TiltingBundle::rank() const
{
    int r = 0;
    for (const Summand& s : summands)
        r += s.multiplicity;
    return r;
}

std::vector<PicClass> TiltingBundle::divisors() const
{
    std::vector<PicClass> out;
    for (const Summand& s : summands)
        out.push_back(s.divisor);
    return out;
}

namespace {

void add_orbit(std::vector<Summand>& out, const PicClass& start, char block)
{
    const HexSymmetry s = sigma();
    PicClass d = start;
    for (int i = 0; i < 6; ++i)
    {
        auto it = std::find_if(out.begin(), out.end(), [&](const Summand& x) { return x.divisor == d; });
        if (it == out.end())
            out.push_back({d, 1, describe(d), block});
        else
            ++it->multiplicity;
        d = s.apply(d);
    }
}

std::string sum_label(const PicClass& d)
{
    // J-classes print as L_i + M_{i+1}, indices mod 3.
    for (std::size_t i = 0; i < 3; ++i)
    {
        const Line L = kLines[i];
        const Line M = kLines[3 + (i + 1) % 3];
        if (line_class(L) + line_class(M) == d)
            return std::string(line_name(L)) + "+" + std::string(line_name(M));
    }
    return describe(d);
}

}   // namespace

TiltingBundle tilting_summands()
{
    TiltingBundle t;
    add_orbit(t.summands, class_H(), 'I');
    const std::size_t first_j = t.summands.size();
    add_orbit(t.summands, class_of("L1+M2"), 'J');
    for (std::size_t i = first_j; i < t.summands.size(); ++i)
        t.summands[i].label = sum_label(t.summands[i].divisor);
    t.summands.push_back({PicClass{}, 1, "0", 'O'});
    return t;
}

IntMatrix ext_table(int i)
{
    if (i < 0 || i > 2)
        throw std::invalid_argument("cohomological degree must be 0, 1 or 2");
    const std::vector<PicClass> d = tilting_summands().divisors();
    IntMatrix m(d.size(), std::vector<Int>(d.size()));
    for (std::size_t a = 0; a < d.size(); ++a)
        for (std::size_t b = 0; b < d.size(); ++b)
        {
            const CohomologyTriple c = cohomology(d[b] - d[a]);
            m[a][b] = i == 0 ? c.h0 : (i == 1 ? c.h1 : c.h2);
        }
    return m;
}

StructureConstantAlgebra::StructureConstantAlgebra(std::vector<std::size_t> vertex_class,
                                                   std::vector<std::string> class_labels,
                                                   std::vector<PicClass> class_divisors,
                                                   std::vector<AlgebraBasisElement> basis,
                                                   std::vector<int> products)
    : vertex_class_(std::move(vertex_class)),
      class_labels_(std::move(class_labels)),
      class_divisors_(std::move(class_divisors)),
      basis_(std::move(basis)),
      products_(std::move(products))
{
    if (products_.size() != basis_.size() * basis_.size())
        throw std::invalid_argument("product table has the wrong size");
}

std::optional<std::size_t> StructureConstantAlgebra::multiply(std::size_t a, std::size_t b) const
{
    const int p = products_[a * basis_.size() + b];
    if (p < 0)
        return std::nullopt;
    return static_cast<std::size_t>(p);
}

std::optional<std::size_t> StructureConstantAlgebra::find(std::size_t source, std::size_t target,
                                                          const Character& m) const
{
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (basis_[i].source == source && basis_[i].target == target && basis_[i].character == m)
            return i;
    return std::nullopt;
}

std::optional<std::size_t> StructureConstantAlgebra::vertex_idempotent(std::size_t v) const
{
    return find(v, v, Character{});
}

bool StructureConstantAlgebra::is_radical(std::size_t i) const
{
    return vertex_class_[basis_[i].source] != vertex_class_[basis_[i].target];
}

std::size_t StructureConstantAlgebra::class_representative(std::size_t c) const
{
    for (std::size_t v = 0; v < vertex_class_.size(); ++v)
        if (vertex_class_[v] == c)
            return v;
    throw std::out_of_range("class has no vertices");
}

std::size_t StructureConstantAlgebra::class_multiplicity(std::size_t c) const
{
    return static_cast<std::size_t>(std::count(vertex_class_.begin(), vertex_class_.end(), c));
}

std::size_t StructureConstantAlgebra::block_dimension(std::size_t target_class, std::size_t source_class) const
{
    return block_dimension(std::vector<std::size_t>{target_class}, std::vector<std::size_t>{source_class});
}

std::size_t StructureConstantAlgebra::block_dimension(const std::vector<std::size_t>& target_classes,
                                                      const std::vector<std::size_t>& source_classes) const
{
    auto in = [](const std::vector<std::size_t>& set, std::size_t c) {
        return std::find(set.begin(), set.end(), c) != set.end();
    };
    std::size_t n = 0;
    for (const AlgebraBasisElement& e : basis_)
        if (in(target_classes, vertex_class_[e.target]) && in(source_classes, vertex_class_[e.source]))
            ++n;
    return n;
}

bool StructureConstantAlgebra::check_associative() const
{
    const std::size_t n = basis_.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
        {
            const auto ab = multiply(a, b);
            for (std::size_t c = 0; c < n; ++c)
            {
                const auto bc = multiply(b, c);
                const auto left = ab ? multiply(*ab, c) : std::nullopt;
                const auto right = bc ? multiply(a, *bc) : std::nullopt;
                if (left != right)
                    return false;
            }
        }
    return true;
}

bool StructureConstantAlgebra::check_unital() const
{
    std::vector<std::size_t> units;
    for (std::size_t v = 0; v < vertex_count(); ++v)
    {
        const auto e = vertex_idempotent(v);
        if (!e)
            return false;
        units.push_back(*e);
    }
    // sum_v e_v must fix every basis element from both sides.
    for (std::size_t x = 0; x < basis_.size(); ++x)
    {
        int left_hits = 0, right_hits = 0;
        for (std::size_t e : units)
        {
            if (auto p = multiply(e, x))
            {
                if (*p != x)
                    return false;
                ++left_hits;
            }
            if (auto p = multiply(x, e))
            {
                if (*p != x)
                    return false;
                ++right_hits;
            }
        }
        if (left_hits != 1 || right_hits != 1)
            return false;
    }
    return true;
}

std::size_t StructureConstantAlgebra::loewy_length() const
{
    std::vector<std::size_t> radical;
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (is_radical(i))
            radical.push_back(i);

    // Products of basis elements are basis elements, so rad^n is spanned by
    // the n-fold products of radical basis elements.
    std::vector<std::size_t> power = radical;
    std::size_t n = 1;
    while (!power.empty())
    {
        if (n > basis_.size() + 1)
            throw AlgebraError("radical is not nilpotent");
        std::vector<bool> hit(basis_.size(), false);
        for (std::size_t r : radical)
            for (std::size_t p : power)
                if (auto q = multiply(r, p))
                    hit[*q] = true;
        power.clear();
        for (std::size_t i = 0; i < hit.size(); ++i)
            if (hit[i])
                power.push_back(i);
        ++n;
    }
    return n;
}

StructureConstantAlgebra StructureConstantAlgebra::semisimple_quotient() const
{
    std::vector<int> new_index(basis_.size(), -1);
    std::vector<AlgebraBasisElement> kept;
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (!is_radical(i))
        {
            new_index[i] = static_cast<int>(kept.size());
            kept.push_back(basis_[i]);
        }
    std::vector<int> products(kept.size() * kept.size(), -1);
    for (std::size_t a = 0; a < basis_.size(); ++a)
        for (std::size_t b = 0; b < basis_.size(); ++b)
        {
            if (new_index[a] < 0 || new_index[b] < 0)
                continue;
            if (auto p = multiply(a, b))
                products[static_cast<std::size_t>(new_index[a]) * kept.size() + static_cast<std::size_t>(new_index[b])] =
                    new_index[*p];
        }
    return StructureConstantAlgebra(vertex_class_, class_labels_, class_divisors_, std::move(kept),
                                    std::move(products));
}

StructureConstantAlgebra build_algebra()
{
    for (int i : {1, 2})
        for (const auto& row : ext_table(i))
            for (Int x : row)
                if (x != 0)
                    throw AlgebraError("Ext^" + std::to_string(i) + " of the tilting bundle is nonzero");

    const TiltingBundle bundle = tilting_summands();
    std::vector<std::size_t> vertex_class;
    std::vector<std::string> labels;
    std::vector<PicClass> divisors;
    for (std::size_t c = 0; c < bundle.summands.size(); ++c)
    {
        labels.push_back(bundle.summands[c].label);
        divisors.push_back(bundle.summands[c].divisor);
        for (int k = 0; k < bundle.summands[c].multiplicity; ++k)
            vertex_class.push_back(c);
    }

    std::vector<AlgebraBasisElement> basis;
    std::map<std::tuple<std::size_t, std::size_t, Int, Int>, std::size_t> index;
    for (std::size_t s = 0; s < vertex_class.size(); ++s)
        for (std::size_t t = 0; t < vertex_class.size(); ++t)
            for (const Character& m : global_sections_basis(divisors[vertex_class[t]] - divisors[vertex_class[s]]))
            {
                index[{s, t, m.x, m.y}] = basis.size();
                basis.push_back({s, t, m});
            }

    const std::size_t n = basis.size();
    std::vector<int> products(n * n, -1);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
        {
            if (basis[b].target != basis[a].source)
                continue;
            const Character m = basis[a].character + basis[b].character;
            auto it = index.find({basis[b].source, basis[a].target, m.x, m.y});
            if (it == index.end())
                throw AlgebraError("composite character is not a section of the difference class");
            products[a * n + b] = static_cast<int>(it->second);
        }

    StructureConstantAlgebra alg(std::move(vertex_class), std::move(labels), std::move(divisors),
                                 std::move(basis), std::move(products));
    if (!alg.check_associative())
        throw AlgebraError("multiplication table is not associative");
    if (!alg.check_unital())
        throw AlgebraError("vertex idempotents do not sum to an identity");
    return alg;
}

namespace {

/**
 * A free right module sum_k e_{v_k} A.  The summand for vertex v has the
 * basis elements x with x.target == v; coordinates are (summand, element).
 */
class FreeModule
{
public:
    FreeModule(const StructureConstantAlgebra& alg, std::vector<std::size_t> tops)
        : alg_(&alg), tops_(std::move(tops))
    {
        for (std::size_t k = 0; k < tops_.size(); ++k)
            for (std::size_t x = 0; x < alg.dimension(); ++x)
                if (alg.element(x).target == tops_[k])
                {
                    index_[{k, x}] = coords_.size();
                    coords_.emplace_back(k, x);
                }
    }

    std::size_t dim() const { return coords_.size(); }
    const std::vector<std::pair<std::size_t, std::size_t>>& coords() const { return coords_; }
    std::size_t top(std::size_t k) const { return tops_[k]; }
    std::size_t summands() const { return tops_.size(); }

    /// v composed with the basis element r on the right.
    RationalVector act(const RationalVector& v, std::size_t r) const
    {
        RationalVector out(dim());
        for (std::size_t i = 0; i < dim(); ++i)
        {
            if (v[i] == 0)
                continue;
            const auto [k, x] = coords_[i];
            if (auto p = alg_->multiply(x, r))
                out[index_.at({k, *p})] += v[i];
        }
        return out;
    }

    /// v e_w: keep the coordinates whose basis element starts at w.
    RationalVector project(const RationalVector& v, std::size_t w) const
    {
        RationalVector out(dim());
        for (std::size_t i = 0; i < dim(); ++i)
            if (alg_->element(coords_[i].second).source == w)
                out[i] = v[i];
        return out;
    }

    std::size_t coordinate(std::size_t k, std::size_t x) const { return index_.at({k, x}); }

private:
    const StructureConstantAlgebra* alg_;
    std::vector<std::size_t> tops_;
    std::vector<std::pair<std::size_t, std::size_t>> coords_;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> index_;
};

constexpr int kResolutionBound = 13;

}   // namespace

int simple_projective_dimension(const StructureConstantAlgebra& alg, std::size_t c)
{
    std::vector<std::size_t> radical;
    for (std::size_t i = 0; i < alg.dimension(); ++i)
        if (alg.is_radical(i))
            radical.push_back(i);

    FreeModule F(alg, {alg.class_representative(c)});
    // First syzygy of the simple: the radical of its projective cover.
    std::vector<RationalVector> syzygy;
    for (std::size_t i = 0; i < F.dim(); ++i)
        if (alg.is_radical(F.coords()[i].second))
        {
            RationalVector v(F.dim());
            v[i] = 1;
            syzygy.push_back(std::move(v));
        }

    for (int n = 1;; ++n)
    {
        if (syzygy.empty())
            return n - 1;
        if (n > kResolutionBound)
            throw AlgebraError("projective resolution did not terminate within the sanity bound");

        SubspaceBasis rad_part(F.dim());
        for (const RationalVector& k : syzygy)
            for (std::size_t r : radical)
                rad_part.insert(F.act(k, r));

        // Minimal generators: a complement of (K rad) e_w in K e_w, one
        // representative vertex w per class.
        std::vector<std::size_t> gen_tops;
        std::vector<RationalVector> gens;
        for (std::size_t cls = 0; cls < alg.class_count(); ++cls)
        {
            const std::size_t w = alg.class_representative(cls);
            SubspaceBasis acc(F.dim());
            for (const RationalVector& v : rad_part.vectors())
                acc.insert(F.project(v, w));
            for (const RationalVector& k : syzygy)
            {
                RationalVector p = F.project(k, w);
                if (acc.insert(p))
                {
                    gen_tops.push_back(w);
                    gens.push_back(std::move(p));
                }
            }
        }

        FreeModule cover(alg, gen_tops);
        RationalMatrix phi(F.dim(), cover.dim());
        for (std::size_t j = 0; j < cover.dim(); ++j)
        {
            const auto [k, x] = cover.coords()[j];
            const RationalVector image = F.act(gens[k], x);
            for (std::size_t i = 0; i < F.dim(); ++i)
                phi(i, j) = image[i];
        }
        if (phi.rank() != syzygy.size())
            throw AlgebraError("projective cover does not map onto the syzygy");

        syzygy = phi.nullspace();
        F = std::move(cover);
    }
}

int global_dimension(const StructureConstantAlgebra& alg)
{
    int g = 0;
    for (std::size_t c = 0; c < alg.class_count(); ++c)
        g = std::max(g, simple_projective_dimension(alg, c));
    return g;
}

CartanData cartan_and_k0(const StructureConstantAlgebra& alg)
{
    const std::size_t n = alg.class_count();
    CartanData out;
    out.cartan.assign(n, std::vector<Int>(n, 0));
    for (std::size_t a = 0; a < n; ++a)
    {
        const std::size_t va = alg.class_representative(a);
        for (std::size_t b = 0; b < n; ++b)
        {
            const std::size_t vb = alg.class_representative(b);
            std::size_t in_block = 0, simple_dim = 0;
            for (std::size_t x = 0; x < alg.dimension(); ++x)
            {
                const AlgebraBasisElement& e = alg.element(x);
                if (e.target == va && alg.vertex_class(e.source) == b)
                    ++in_block;
                if (e.target == vb && alg.vertex_class(e.source) == b)
                    ++simple_dim;
            }
            if (simple_dim == 0 || in_block % simple_dim != 0)
                throw AlgebraError("block dimension is not a multiple of the simple dimension");
            out.cartan[a][b] = static_cast<Int>(in_block / simple_dim);
        }
    }
    out.k0_rank = static_cast<int>(n);

    RationalMatrix m(n, n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            m(a, b) = out.cartan[a][b];
    const Rational det = m.determinant();
    if (denominator(det) != 1)
        throw AlgebraError("non-integral Cartan determinant");
    out.determinant = static_cast<Int>(numerator(det));
    return out;
}

bool is_upper_unitriangular(const IntMatrix& m)
{
    for (std::size_t a = 0; a < m.size(); ++a)
        for (std::size_t b = 0; b < m[a].size(); ++b)
        {
            if (a == b && m[a][b] != 1)
                return false;
            if (a > b && m[a][b] != 0)
                return false;
        }
    return true;
}

namespace {

struct FanAutomorphism
{
    std::array<std::array<Int, 2>, 2> dual;   // psi^{-T}, acting on characters
    std::array<std::size_t, 6> ray_perm;
};

std::optional<FanAutomorphism> fan_automorphism(const HexSymmetry& g)
{
    FanAutomorphism f{};
    for (std::size_t i = 0; i < 6; ++i)
        f.ray_perm[i] = fan::line_ray(g.apply(fan::ray_line(i)));
    const auto& u = fan::rays();
    // u_0 = (1,0) and u_2 = (0,1), so psi has columns u_{pi(0)}, u_{pi(2)}.
    const Character c0 = u[f.ray_perm[0]], c1 = u[f.ray_perm[2]];
    const Int a = c0.x, b = c1.x, c = c0.y, d = c1.y;
    const Int det = a * d - b * c;
    if (det != 1 && det != -1)
        return std::nullopt;
    for (std::size_t i = 0; i < 6; ++i)
    {
        const Character image{a * u[i].x + b * u[i].y, c * u[i].x + d * u[i].y};
        if (image != u[f.ray_perm[i]])
            return std::nullopt;
    }
    // psi^{-1} = [[d, -b], [-c, a]] / det; transpose it.
    f.dual = {{{d / det, -c / det}, {-b / det, a / det}}};
    return f;
}

}   // namespace

std::optional<std::vector<std::size_t>> induced_basis_permutation(const StructureConstantAlgebra& alg,
                                                                  const HexSymmetry& g)
{
    const auto f = fan_automorphism(g);
    if (!f)
        return std::nullopt;
    const auto& divisors = alg.class_divisors();

    // Class permutation, then vertex permutation preserving the copy index.
    std::vector<std::size_t> class_image(alg.class_count());
    for (std::size_t c = 0; c < alg.class_count(); ++c)
    {
        auto it = std::find(divisors.begin(), divisors.end(), g.apply(divisors[c]));
        if (it == divisors.end())
            return std::nullopt;
        class_image[c] = static_cast<std::size_t>(it - divisors.begin());
        if (alg.class_multiplicity(c) != alg.class_multiplicity(class_image[c]))
            return std::nullopt;
    }
    std::vector<std::size_t> vertex_image(alg.vertex_count());
    for (std::size_t v = 0; v < alg.vertex_count(); ++v)
    {
        const std::size_t c = alg.vertex_class(v);
        const std::size_t copy = v - alg.class_representative(c);
        vertex_image[v] = alg.class_representative(class_image[c]) + copy;
    }

    std::vector<std::size_t> perm(alg.dimension());
    for (std::size_t x = 0; x < alg.dimension(); ++x)
    {
        const AlgebraBasisElement& e = alg.element(x);
        const PicClass D = divisors[alg.vertex_class(e.target)] - divisors[alg.vertex_class(e.source)];
        const RayDivisor lifted = ray_coefficients(D);
        RayDivisor moved{};
        for (std::size_t i = 0; i < 6; ++i)
            moved[f->ray_perm[i]] = lifted[i];
        const RayDivisor target = ray_coefficients(g.apply(D));
        RayDivisor diff{};
        for (std::size_t i = 0; i < 6; ++i)
            diff[i] = target[i] - moved[i];
        const Character shift{diff[0], diff[2]};
        if (principal_divisor(shift) != diff)
            return std::nullopt;
        const Character& m = e.character;
        const Character image = Character{f->dual[0][0] * m.x + f->dual[0][1] * m.y,
                                          f->dual[1][0] * m.x + f->dual[1][1] * m.y}
                                - shift;
        auto y = alg.find(vertex_image[e.source], vertex_image[e.target], image);
        if (!y)
            return std::nullopt;
        perm[x] = *y;
    }
    return perm;
}

bool is_automorphism(const StructureConstantAlgebra& alg, const std::vector<std::size_t>& perm)
{
    const std::size_t n = alg.dimension();
    if (perm.size() != n)
        return false;
    std::vector<bool> seen(n, false);
    for (std::size_t p : perm)
    {
        if (p >= n || seen[p])
            return false;
        seen[p] = true;
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
        {
            const auto ab = alg.multiply(a, b);
            const auto image = alg.multiply(perm[a], perm[b]);
            if (ab.has_value() != image.has_value())
                return false;
            if (ab && perm[*ab] != *image)
                return false;
        }
    return true;
}

}   // namespace hexad
