/**
 * Thick-closure certificates for the split tilting bundle.
 *
 * Objects are tracked as formal atoms: line bundles O(D) and twists O_E(t)
 * of the structure sheaf of an exceptional line.  Short exact sequences
 * are recorded as triangle rules; whenever every atom of two terms is
 * known, the atoms of the third term are added.  Each added atom keeps the
 * rule application that produced it, so membership can be replayed.
 *
 * Rule families:
 *   restriction  0 -> O(D-E) -> O(D) -> O_E(D.E) -> 0
 *   koszul       0 -> O(X-E-F) -> O(X-E) + O(X-F) -> O(X) -> 0    (E.F = 0, E != F)
 *   euler        0 -> O_E(t-2) -> O_E(t-1)^2 -> O_E(t) -> 0
 */

#ifndef HEXAD_GENERATION_HPP
#define HEXAD_GENERATION_HPP

#include <array>
#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "hexad/picard.hpp"

namespace hexad {

struct Atom
{
    enum class Kind : std::uint8_t { LineBundle = 0, OnCurve = 1 };

    Kind kind = Kind::LineBundle;
    PicClass divisor;          ///< LineBundle only
    Line curve = Line::L1;     ///< OnCurve only
    Int twist = 0;             ///< OnCurve only: D.E

    static Atom line_bundle(const PicClass& d) { return {Kind::LineBundle, d, Line::L1, 0}; }
    static Atom on_curve(Line e, Int t) { return {Kind::OnCurve, PicClass{}, e, t}; }

    bool is_line_bundle() const { return kind == Kind::LineBundle; }

    /// "O(-1; 0, 0, 1)" or "O_M3(0)"
    std::string to_string() const;

    friend bool operator==(const Atom&, const Atom&) = default;
    friend auto operator<=>(const Atom&, const Atom&) = default;
};

struct AtomHash
{
    std::size_t operator()(const Atom& a) const noexcept;
};

enum class RuleKind : std::uint8_t { Restriction = 0, Koszul = 1, Euler = 2 };

std::string_view rule_kind_name(RuleKind k);
std::optional<RuleKind> parse_rule_kind(std::string_view s);

/// Parameters that determine a rule instance completely.
struct RuleParams
{
    RuleKind kind = RuleKind::Restriction;
    PicClass divisor;          ///< D for restriction, X for koszul
    Line first = Line::L1;     ///< E
    Line second = Line::L1;    ///< F, koszul only
    Int twist = 0;             ///< t, euler only

    friend bool operator==(const RuleParams&, const RuleParams&) = default;
    friend auto operator<=>(const RuleParams&, const RuleParams&) = default;
};

using Term = std::vector<Atom>;   // direct sum, sorted, duplicates collapsed

struct TriangleRule
{
    RuleParams params;
    std::array<Term, 3> terms;    ///< sub, mid, quot
};

/**
 * Derive the terms of a rule from its parameters, checking its side
 * conditions from scratch.  nullopt if they fail (e.g. koszul lines meet).
 */
std::optional<TriangleRule> make_rule(const RuleParams& p);

/// Largest |coefficient| over line bundle atoms and |twist| over curve atoms.
bool within_window(const Atom& a, Int window);

/**
 * Every rule whose line bundle atoms have coefficients in [-window, window]
 * and whose curve twists satisfy |t| <= 3 * window.
 */
std::vector<TriangleRule> rule_instances(Int window);

/// The six distinct summand classes of the tilting bundle, as atoms.
std::vector<Atom> tilting_seeds();

struct GenerationStep
{
    RuleParams rule;
    int derived_term = 0;            ///< index into terms: 0 sub, 1 mid, 2 quot
    std::array<Term, 3> terms;       ///< as claimed; re-derived on verification

    friend bool operator==(const GenerationStep&, const GenerationStep&) = default;
};

struct GenerationCertificate
{
    Atom target;
    std::vector<GenerationStep> steps;
};

class WindowTooSmall : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/**
 * Least fixpoint of the two-out-of-three rule over a set of rules, computed
 * breadth first: round r uses only atoms known before round r.  Certificates
 * list their steps by round, then by least derived atom.
 */
class Closure
{
public:
    Closure(const std::vector<Atom>& seeds, std::vector<TriangleRule> rules);

    bool contains(const Atom& a) const { return depth_.count(a) != 0; }
    int depth(const Atom& a) const;
    std::size_t size() const { return depth_.size(); }
    int rounds() const { return rounds_; }

    std::vector<Atom> atoms() const;

    /// Throws WindowTooSmall if a is not in the closure.
    GenerationCertificate certificate(const Atom& a) const;

private:
    struct Origin
    {
        std::size_t rule;
        int term;
    };

    std::vector<TriangleRule> rules_;
    std::unordered_map<Atom, int, AtomHash> depth_;
    std::unordered_map<Atom, Origin, AtomHash> origin_;
    int rounds_ = 0;
};

/// Closure of the tilting seeds under rule_instances(window).
Closure closure(Int window);

GenerationCertificate generation_certificate(const PicClass& d, Int window);

enum class GenReason {
    Ok,
    InvalidRule,           // side condition fails or parameters are malformed
    TermMismatch,          // claimed terms differ from the re-derived ones
    UsedBeforeKnown,       // a premise atom is neither a seed nor derived earlier
    TargetNotReached,
};

std::string_view gen_reason_name(GenReason r);

struct GenCheck
{
    GenReason reason = GenReason::Ok;
    std::string detail;

    bool ok() const { return reason == GenReason::Ok; }
    explicit operator bool() const { return ok(); }
};

/// Replay a certificate from the tilting seeds, re-deriving every rule.
GenCheck verify_generation_certificate(const GenerationCertificate& cert);

}   // namespace hexad

#endif
