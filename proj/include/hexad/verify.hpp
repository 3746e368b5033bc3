/**
 * The one-shot verification suite behind `hexad verify-all`.
 *
 * Each check reports the invariant it tests and, on failure, the first
 * offending divisor or atom.
 */

#ifndef HEXAD_VERIFY_HPP
#define HEXAD_VERIFY_HPP

#include <string>
#include <vector>

#include "hexad/picard.hpp"

namespace hexad {

struct CheckResult
{
    std::string name;        ///< e.g. "lattice", "goodness"
    std::string invariant;   ///< what must hold
    bool passed = true;
    std::string offender;    ///< divisor or atom that broke it, empty on pass
    std::string detail;
};

CheckResult check_lattice_suite();
CheckResult check_sigma_suite();
CheckResult check_differences_suite();
CheckResult check_goodness_suite();
CheckResult check_ext_suite();
CheckResult check_algebra_suite();
CheckResult check_galois_suite();
CheckResult check_generation_suite(Int window);

/// All of the above, in that order.
std::vector<CheckResult> run_all_checks(Int window = 2);

}   // namespace hexad

#endif
