/**
 * The Picard lattice of the split degree-6 del Pezzo surface.
 *
 * Classes are stored in the basis (b0; b1, b2, b3) with intersection form
 * diag(+1, -1, -1, -1).  The six exceptional lines are embedded as
 *
 *     M_i = b_i,    L_i = b0 - b_j - b_k    ({i, j, k} = {1, 2, 3}),
 *
 * so that b0 = L1 + M2 + M3.  The embedding is checked against the hexagon
 * adjacency table by check_lattice() rather than trusted.
 */

#ifndef HEXAD_PICARD_HPP
#define HEXAD_PICARD_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hexad {

using Int = std::int64_t;

/// Tag serialized alongside coefficient vectors so files name their basis.
inline constexpr std::string_view kPicBasisTag = "b0=H;b1=M1,b2=M2,b3=M3;form=diag(1,-1,-1,-1)";

enum class Line : std::uint8_t { L1 = 0, L2, L3, M1, M2, M3 };

/// Fixed line order, also used for deterministic tie-breaking.
inline constexpr std::array<Line, 6> kLines = {Line::L1, Line::L2, Line::L3,
                                               Line::M1, Line::M2, Line::M3};

inline constexpr std::size_t index_of(Line l) { return static_cast<std::size_t>(l); }
std::string_view line_name(Line l);
std::optional<Line> parse_line(std::string_view name);

class PicClass
{
public:
    constexpr PicClass() = default;
    constexpr explicit PicClass(std::array<Int, 4> coeffs) : c_(coeffs) {}

    const std::array<Int, 4>& coeffs() const { return c_; }
    Int operator[](std::size_t i) const { return c_[i]; }

    bool is_zero() const { return c_ == std::array<Int, 4>{}; }

    /// Largest absolute basis coefficient.
    Int max_abs() const;

    PicClass operator+(const PicClass& o) const;
    PicClass operator-(const PicClass& o) const;
    PicClass operator-() const;
    PicClass& operator+=(const PicClass& o) { return *this = *this + o; }
    PicClass& operator-=(const PicClass& o) { return *this = *this - o; }
    friend PicClass operator*(Int k, const PicClass& d);

    friend bool operator==(const PicClass&, const PicClass&) = default;
    friend auto operator<=>(const PicClass&, const PicClass&) = default;

    /// "(a; b, c, d)"
    std::string to_string() const;

private:
    std::array<Int, 4> c_{};
};

struct PicClassHash
{
    std::size_t operator()(const PicClass& d) const noexcept;
};

PicClass line_class(Line l);
PicClass canonical_class();
PicClass class_H();         ///< L1 + M2 + M3
PicClass class_H_prime();   ///< L1 + L2 + M3

Int intersect(const PicClass& a, const PicClass& b);

/// deg C = -C.K
Int degree(const PicClass& d);

class ParseError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/**
 * Parse a divisor expression such as "2H - L1 + M2" or "3*H' + K".
 *
 * Tokens are L1..L3, M1..M3, H, H', K and the literal 0.  Each term may
 * carry an integer multiplier, optionally followed by '*'.
 */
PicClass class_of(std::string_view expr);

/// Short human-readable name if d is one of the named classes, else to_string().
std::string describe(const PicClass& d);

/**
 * Assert the hexagon adjacency table, the presentation relations and the
 * rank of the lattice.  Throws std::logic_error naming the first violation.
 */
void check_lattice();

/// The six lines in hexagon cyclic order, walked from L1 by lowest neighbour.
const std::array<Line, 6>& hexagon_cycle();

using Matrix4 = std::array<std::array<Int, 4>, 4>;

Matrix4 identity_matrix4();
Matrix4 multiply(const Matrix4& a, const Matrix4& b);
Matrix4 add(const Matrix4& a, const Matrix4& b);
Matrix4 subtract(const Matrix4& a, const Matrix4& b);
std::size_t matrix_rank(const Matrix4& m);
PicClass apply(const Matrix4& m, const PicClass& d);

/**
 * An adjacency-preserving permutation of the six lines together with the
 * lattice automorphism it induces.
 */
class HexSymmetry
{
public:
    static HexSymmetry identity();

    /// images[index_of(l)] is the image of l; nullopt unless the hexagon is preserved.
    static std::optional<HexSymmetry> from_permutation(const std::array<Line, 6>& images);

    Line apply(Line l) const { return perm_[index_of(l)]; }
    PicClass apply(const PicClass& d) const;

    const std::array<Line, 6>& permutation() const { return perm_; }
    const Matrix4& matrix() const { return matrix_; }

    /// (*this) after other.
    HexSymmetry compose(const HexSymmetry& other) const;
    HexSymmetry inverse() const;
    HexSymmetry power(int n) const;
    int order() const;
    bool is_identity() const;

    /// "L1->M2 L2->M3 ..." compact form.
    std::string to_string() const;

    friend bool operator==(const HexSymmetry& a, const HexSymmetry& b) { return a.perm_ == b.perm_; }
    friend auto operator<=>(const HexSymmetry& a, const HexSymmetry& b) { return a.perm_ <=> b.perm_; }

private:
    HexSymmetry(const std::array<Line, 6>& perm, const Matrix4& m) : perm_(perm), matrix_(m) {}

    std::array<Line, 6> perm_;
    Matrix4 matrix_;
};

/// Rotation one step along hexagon_cycle(): L1 -> M2 -> L3 -> M1 -> L2 -> M3 -> L1.
HexSymmetry sigma();

/// The matrix (1 + g)(1 - g^3) on Pic.
Matrix4 sigma_identity_matrix(const HexSymmetry& g);

/// True iff (1 + g)(1 - g^3) is the zero endomorphism.
bool verify_sigma_identity(const HexSymmetry& g);
bool verify_sigma_identity();

/**
 * Of H and H', the one meeting each line of the given triple in 0; this is
 * the pullback of a line under the blowdown contracting that triple.
 */
std::optional<PicClass> blowdown_class(const std::array<Line, 3>& contracted);

}   // namespace hexad

#endif
