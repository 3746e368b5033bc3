#include "hexad/picard.hpp"

#include <cctype>
#include <sstream>

#include "hexad/exact.hpp"

namespace hexad {

namespace {

constexpr std::array<Int, 4> kForm = {1, -1, -1, -1};

constexpr std::array<std::string_view, 6> kLineNames = {"L1", "L2", "L3", "M1", "M2", "M3"};

bool is_L(Line l) { return index_of(l) < 3; }
int line_number(Line l) { return static_cast<int>(index_of(l) % 3) + 1; }

}   // namespace

std::string_view line_name(Line l) { return kLineNames[index_of(l)]; }

std::optional<Line> parse_line(std::string_view name)
{
    for (Line l : kLines)
        if (line_name(l) == name)
            return l;
    return std::nullopt;
}

Int PicClass::max_abs() const
{
    Int m = 0;
    for (Int x : c_)
        m = std::max(m, x < 0 ? -x : x);
    return m;
}

PicClass PicClass::operator+(const PicClass& o) const
{
    PicClass r;
    for (std::size_t i = 0; i < 4; ++i)
        r.c_[i] = checked_add(c_[i], o.c_[i]);
    return r;
}

PicClass PicClass::operator-(const PicClass& o) const
{
    PicClass r;
    for (std::size_t i = 0; i < 4; ++i)
        r.c_[i] = checked_sub(c_[i], o.c_[i]);
    return r;
}

PicClass PicClass::operator-() const { return PicClass{} - *this; }

PicClass operator*(Int k, const PicClass& d)
{
    PicClass r;
    for (std::size_t i = 0; i < 4; ++i)
        r.c_[i] = checked_mul(k, d.c_[i]);
    return r;
}

std::string PicClass::to_string() const
{
    std::ostringstream out;
    out << '(' << c_[0] << "; " << c_[1] << ", " << c_[2] << ", " << c_[3] << ')';
    return out.str();
}

std::size_t PicClassHash::operator()(const PicClass& d) const noexcept
{
    std::size_t h = 0;
    for (Int x : d.coeffs())
        h = h * 1000003u ^ std::hash<Int>{}(x);
    return h;
}

PicClass line_class(Line l)
{
    std::array<Int, 4> c{};
    const int i = line_number(l);
    if (is_L(l))
    {
        c[0] = 1;
        for (int j = 1; j <= 3; ++j)
            if (j != i)
                c[j] = -1;
    }
    else
    {
        c[i] = 1;
    }
    return PicClass(c);
}

PicClass canonical_class()
{
    PicClass sum;
    for (Line l : kLines)
        sum += line_class(l);
    return -sum;
}

PicClass class_H() { return line_class(Line::L1) + line_class(Line::M2) + line_class(Line::M3); }

PicClass class_H_prime() { return line_class(Line::L1) + line_class(Line::L2) + line_class(Line::M3); }

Int intersect(const PicClass& a, const PicClass& b)
{
    Int s = 0;
    for (std::size_t i = 0; i < 4; ++i)
        s = checked_add(s, checked_mul(kForm[i], checked_mul(a[i], b[i])));
    return s;
}

Int degree(const PicClass& d) { return -intersect(d, canonical_class()); }

namespace {

struct Parser
{
    std::string_view s;
    std::size_t pos = 0;

    void skip()
    {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
            ++pos;
    }

    [[noreturn]] void fail(const std::string& what) const
    {
        std::ostringstream msg;
        msg << "divisor expression \"" << s << "\": " << what << " at offset " << pos;
        throw ParseError(msg.str());
    }

    std::optional<Int> number()
    {
        std::size_t start = pos;
        Int v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
        {
            v = checked_add(checked_mul(v, 10), s[pos] - '0');
            ++pos;
        }
        if (pos == start)
            return std::nullopt;
        return v;
    }

    std::optional<PicClass> symbol()
    {
        if (pos >= s.size())
            return std::nullopt;
        const char c = s[pos];
        if ((c == 'L' || c == 'M') && pos + 1 < s.size() && s[pos + 1] >= '1' && s[pos + 1] <= '3')
        {
            auto l = parse_line(s.substr(pos, 2));
            pos += 2;
            return line_class(*l);
        }
        if (c == 'H')
        {
            ++pos;
            if (pos < s.size() && s[pos] == '\'')
            {
                ++pos;
                return class_H_prime();
            }
            return class_H();
        }
        if (c == 'K')
        {
            ++pos;
            return canonical_class();
        }
        return std::nullopt;
    }

    PicClass term()
    {
        skip();
        std::optional<Int> mult = number();
        skip();
        if (mult && pos < s.size() && s[pos] == '*')
        {
            ++pos;
            skip();
        }
        std::optional<PicClass> sym = symbol();
        if (!sym)
        {
            if (mult && *mult == 0)
                return PicClass{};
            if (pos < s.size())
                fail(std::string("unknown symbol '") + s[pos] + "'");
            fail("expected a divisor symbol");
        }
        // Reject run-on identifiers such as "L12" or "Hx".
        if (pos < s.size() && std::isalnum(static_cast<unsigned char>(s[pos])))
            fail("unknown symbol");
        return mult.value_or(1) * *sym;
    }

    PicClass parse()
    {
        PicClass total;
        skip();
        if (pos == s.size())
            fail("empty expression");
        bool first = true;
        while (true)
        {
            skip();
            if (pos == s.size())
                break;
            Int sign = 1;
            if (s[pos] == '+' || s[pos] == '-')
            {
                sign = s[pos] == '-' ? -1 : 1;
                ++pos;
            }
            else if (!first)
            {
                fail("expected '+' or '-'");
            }
            total += sign * term();
            first = false;
        }
        return total;
    }
};

}   // namespace

PicClass class_of(std::string_view expr) { return Parser{expr}.parse(); }

std::string describe(const PicClass& d)
{
    if (d.is_zero())
        return "0";
    if (d == class_H())
        return "H";
    if (d == class_H_prime())
        return "H'";
    if (d == -class_H())
        return "-H";
    if (d == -class_H_prime())
        return "-H'";
    if (d == canonical_class())
        return "K";
    for (Line l : kLines)
    {
        if (d == line_class(l))
            return std::string(line_name(l));
        if (d == -line_class(l))
            return "-" + std::string(line_name(l));
    }
    return d.to_string();
}

void check_lattice()
{
    auto fail = [](const std::string& what) { throw std::logic_error("lattice self-check: " + what); };

    for (Line a : kLines)
        for (Line b : kLines)
        {
            Int expected;
            if (a == b)
                expected = -1;
            else if (is_L(a) == is_L(b))
                expected = 0;   // same family: disjoint
            else
                expected = line_number(a) == line_number(b) ? 0 : 1;
            const Int got = intersect(line_class(a), line_class(b));
            if (got != expected)
                fail(std::string(line_name(a)) + "." + std::string(line_name(b)) + " = "
                     + std::to_string(got) + ", expected " + std::to_string(expected));
        }

    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
        {
            const Line Li = kLines[i - 1], Lj = kLines[j - 1];
            const Line Mi = kLines[i + 2], Mj = kLines[j + 2];
            if (line_class(Li) + line_class(Mj) != line_class(Lj) + line_class(Mi))
                fail("relation M_i + L_j = M_j + L_i fails for i=" + std::to_string(i)
                     + ", j=" + std::to_string(j));
        }

    // The six lines generate a rank-4 lattice on which the form is unimodular.
    std::vector<RationalVector> rows;
    for (Line l : kLines)
    {
        RationalVector v;
        for (Int x : line_class(l).coeffs())
            v.emplace_back(x);
        rows.push_back(v);
    }
    if (RationalMatrix::from_rows(rows).rank() != 4)
        fail("lines do not span a rank-4 lattice");
    if (line_class(Line::L1) + line_class(Line::M2) + line_class(Line::M3) != PicClass({1, 0, 0, 0}))
        fail("b0 is not L1 + M2 + M3");

    const PicClass K = canonical_class();
    if (intersect(K, K) != 6)
        fail("K.K = " + std::to_string(intersect(K, K)) + ", expected 6");
    for (Line l : kLines)
        if (degree(line_class(l)) != 1)
            fail(std::string(line_name(l)) + " does not have degree 1");

    const auto& cycle = hexagon_cycle();
    for (std::size_t i = 0; i < 6; ++i)
    {
        const Line a = cycle[i], b = cycle[(i + 1) % 6];
        if (intersect(line_class(a), line_class(b)) != 1 || is_L(a) == is_L(b))
            fail("hexagon cycle is not an alternating chain of meeting lines");
    }
}

const std::array<Line, 6>& hexagon_cycle()
{
    static const std::array<Line, 6> cycle = [] {
        std::array<Line, 6> c{};
        std::array<bool, 6> used{};
        c[0] = Line::L1;
        used[index_of(Line::L1)] = true;
        for (std::size_t k = 1; k < 6; ++k)
        {
            bool found = false;
            for (Line l : kLines)
                if (!used[index_of(l)] && intersect(line_class(c[k - 1]), line_class(l)) == 1)
                {
                    c[k] = l;
                    used[index_of(l)] = true;
                    found = true;
                    break;
                }
            if (!found)
                throw std::logic_error("hexagon walk got stuck");
        }
        if (intersect(line_class(c[5]), line_class(c[0])) != 1)
            throw std::logic_error("hexagon walk does not close up");
        return c;
    }();
    return cycle;
}

Matrix4 identity_matrix4()
{
    Matrix4 m{};
    for (std::size_t i = 0; i < 4; ++i)
        m[i][i] = 1;
    return m;
}

Matrix4 multiply(const Matrix4& a, const Matrix4& b)
{
    Matrix4 m{};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            for (std::size_t k = 0; k < 4; ++k)
                m[i][j] = checked_add(m[i][j], checked_mul(a[i][k], b[k][j]));
    return m;
}

Matrix4 add(const Matrix4& a, const Matrix4& b)
{
    Matrix4 m{};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            m[i][j] = checked_add(a[i][j], b[i][j]);
    return m;
}

Matrix4 subtract(const Matrix4& a, const Matrix4& b)
{
    Matrix4 m{};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            m[i][j] = checked_sub(a[i][j], b[i][j]);
    return m;
}

std::size_t matrix_rank(const Matrix4& m)
{
    RationalMatrix r(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            r(i, j) = m[i][j];
    return r.rank();
}

PicClass apply(const Matrix4& m, const PicClass& d)
{
    std::array<Int, 4> out{};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            out[i] = checked_add(out[i], checked_mul(m[i][j], d[j]));
    return PicClass(out);
}

HexSymmetry HexSymmetry::identity()
{
    return HexSymmetry(kLines, identity_matrix4());
}

std::optional<HexSymmetry> HexSymmetry::from_permutation(const std::array<Line, 6>& images)
{
    std::array<bool, 6> hit{};
    for (Line l : images)
    {
        if (hit[index_of(l)])
            return std::nullopt;
        hit[index_of(l)] = true;
    }
    for (Line a : kLines)
        for (Line b : kLines)
            if (intersect(line_class(a), line_class(b))
                != intersect(line_class(images[index_of(a)]), line_class(images[index_of(b)])))
                return std::nullopt;

    auto img = [&](Line l) { return line_class(images[index_of(l)]); };
    // Columns are images of b0 = L1 + M2 + M3 and b_i = M_i.
    std::array<PicClass, 4> cols = {img(Line::L1) + img(Line::M2) + img(Line::M3),
                                    img(Line::M1), img(Line::M2), img(Line::M3)};
    Matrix4 m{};
    for (std::size_t c = 0; c < 4; ++c)
        for (std::size_t r = 0; r < 4; ++r)
            m[r][c] = cols[c][r];

    // The permutation must be compatible with the presentation.
    for (Line l : kLines)
        if (hexad::apply(m, line_class(l)) != img(l))
            return std::nullopt;
    return HexSymmetry(images, m);
}

PicClass HexSymmetry::apply(const PicClass& d) const { return hexad::apply(matrix_, d); }

HexSymmetry HexSymmetry::compose(const HexSymmetry& other) const
{
    std::array<Line, 6> p{};
    for (Line l : kLines)
        p[index_of(l)] = apply(other.apply(l));
    return HexSymmetry(p, multiply(matrix_, other.matrix_));
}

HexSymmetry HexSymmetry::inverse() const
{
    std::array<Line, 6> p{};
    for (Line l : kLines)
        p[index_of(apply(l))] = l;
    return *from_permutation(p);
}

HexSymmetry HexSymmetry::power(int n) const
{
    HexSymmetry base = n < 0 ? inverse() : *this;
    HexSymmetry r = identity();
    for (int k = 0; k < (n < 0 ? -n : n); ++k)
        r = r.compose(base);
    return r;
}

int HexSymmetry::order() const
{
    HexSymmetry g = *this;
    int n = 1;
    while (!g.is_identity())
    {
        g = g.compose(*this);
        ++n;
    }
    return n;
}

bool HexSymmetry::is_identity() const { return perm_ == kLines; }

std::string HexSymmetry::to_string() const
{
    std::string s;
    for (Line l : kLines)
    {
        if (!s.empty())
            s += ' ';
        s += std::string(line_name(l)) + "->" + std::string(line_name(apply(l)));
    }
    return s;
}

HexSymmetry sigma()
{
    const auto& cycle = hexagon_cycle();
    std::array<Line, 6> p{};
    for (std::size_t i = 0; i < 6; ++i)
        p[index_of(cycle[i])] = cycle[(i + 1) % 6];
    auto g = HexSymmetry::from_permutation(p);
    if (!g)
        throw std::logic_error("hexagon rotation does not preserve adjacency");
    return *g;
}

Matrix4 sigma_identity_matrix(const HexSymmetry& g)
{
    const Matrix4 one = identity_matrix4();
    const Matrix4 g3 = g.power(3).matrix();
    return multiply(add(one, g.matrix()), subtract(one, g3));
}

bool verify_sigma_identity(const HexSymmetry& g)
{
    return sigma_identity_matrix(g) == Matrix4{};
}

bool verify_sigma_identity() { return verify_sigma_identity(sigma()); }

std::optional<PicClass> blowdown_class(const std::array<Line, 3>& contracted)
{
    std::optional<PicClass> found;
    for (const PicClass& c : {class_H(), class_H_prime()})
    {
        bool zero = true;
        for (Line l : contracted)
            zero = zero && intersect(c, line_class(l)) == 0;
        if (zero)
        {
            if (found)
                return std::nullopt;
            found = c;
        }
    }
    return found;
}

}   // namespace hexad
