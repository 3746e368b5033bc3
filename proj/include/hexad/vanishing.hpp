/**
 * Differences of the six tilting divisors and goodness certificates.
 *
 * A divisor is good when h1 = h2 = 0.  Every difference D - D' of the list
 * H, H', L1+M2, L2+M3, L3+M1, 0 is shown good by descending along
 * exceptional lines E with (D - D').E >= -1 until a degree -3 base (-H or
 * -H') is reached; the restriction sequence to E then lifts goodness back up.
 */

#ifndef HEXAD_VANISHING_HPP
#define HEXAD_VANISHING_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hexad/picard.hpp"

namespace hexad {

/// H, H', L1+M2, L2+M3, L3+M1, 0 in this order.
const std::vector<PicClass>& divisor_list();

/// All D - D' over the list, sorted and deduplicated (31 classes).
const std::vector<PicClass>& difference_set();

bool in_difference_set(const PicClass& d);

enum class DifferenceTag {
    HType,            // degree  3: H
    HPrimeType,       // degree  3: H'
    SumOfTwoLines,    // degree  2: L_i + M_j, i != j
    SingleLine,       // degree  1
    ZeroDegreeForm,   // degree  0: 0, L_i - L_j, L_i - M_i, M_i - L_i
    NegativeLine,     // degree -1
    NegativeSum,      // degree -2: -L_i - M_j
    MinusHType,       // degree -3: -H or -H'
};

std::string_view tag_name(DifferenceTag t);

struct DifferenceClass
{
    DifferenceTag tag;
    int case_number;          ///< 1..5 in the classification by degree
    std::string witness;      ///< expression whose class equals the input
    PicClass witness_class;
};

class NotADifference : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

/**
 * Tag a difference and produce an explicit witness.  Candidate shapes are
 * tried in a fixed order and the first one whose class matches wins; for
 * degree 0 that includes M_i - M_j, which always coincides with L_i - L_j.
 */
DifferenceClass classify_difference(const PicClass& d);

/// Every shape tried for the given tag, as (expression, class).
std::vector<std::pair<std::string, PicClass>> candidate_shapes(DifferenceTag tag);

class NoDescentLine : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/**
 * First line E in L1, L2, L3, M1, M2, M3 order with d - E in the difference
 * set and d.E >= -1.  Throws NoDescentLine for degree <= -3 or when none exists.
 */
Line find_descent_line(const PicClass& d);

struct CertificateStep
{
    Line line;
    Int intersection;   ///< C.E where C is the divisor after adding E

    friend bool operator==(const CertificateStep&, const CertificateStep&) = default;
};

/**
 * target = base + sum of step lines.  Steps run upward from the base; step k
 * adds line E_k to C_{k-1} and records C_k . E_k.
 */
struct GoodnessCertificate
{
    PicClass target;
    PicClass base;
    std::vector<CertificateStep> steps;

    friend bool operator==(const GoodnessCertificate&, const GoodnessCertificate&) = default;
};

GoodnessCertificate goodness_certificate(const PicClass& d);

enum class CertReason {
    Ok,
    BaseNotGood,
    ChainMismatch,          // base + lines != target
    IntersectionMismatch,   // recorded number differs from the actual one
    StepBelowMinusOne,
    IntermediateNotGood,    // oracle disagrees on an intermediate class
};

std::string_view reason_name(CertReason r);

struct CertCheck
{
    CertReason reason = CertReason::Ok;
    std::string detail;

    bool ok() const { return reason == CertReason::Ok; }
    explicit operator bool() const { return ok(); }
};

/// Re-check a certificate against the toric oracle and lattice arithmetic.
CertCheck verify_certificate(const GoodnessCertificate& cert);

}   // namespace hexad

#endif
