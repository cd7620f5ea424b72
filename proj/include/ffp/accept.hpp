#ifndef FFP_ACCEPT_HPP
#define FFP_ACCEPT_HPP

#include <ostream>
#include <string>
#include <vector>

namespace ffp::accept {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;  // filled on failure (and for reportable findings)
};

// Runs the full verification suite; one result per criterion, in order.
std::vector<CriterionResult> run_all(unsigned jobs = 1);

// One line per criterion; returns 0 when everything passed, 1 otherwise.
int print_results(const std::vector<CriterionResult>& results, std::ostream& os);

}  // namespace ffp::accept

#endif
