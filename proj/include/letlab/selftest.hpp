#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace letlab {

// Cross-procedure oracle suites.  Each suite pits two independent decision
// routes against each other on seeded random inputs (or exhaustively where
// the space is finite) and reports the number of checks and mismatches.
struct SuiteResult {
    std::string name;
    std::uint64_t checks = 0;
    std::uint64_t failures = 0;
    std::vector<std::string> messages;  // first few mismatch descriptions
    bool ok() const { return failures == 0; }
};

// One deterministic-table entry must always be a member of the corresponding
// non-deterministic output set (exhaustive over all inputs).
SuiteResult suite_matrix_vs_nmatrix();

// Matrix consequence agrees with the classical-tautology reduction, both
// fragments mixed.
SuiteResult suite_matrix_vs_cpl(std::uint64_t seed, int trials);

// Matrix-valid sequents stay valid in the two-atom twist matrix.
SuiteResult suite_matrix_vs_twist(std::uint64_t seed, int trials);

// Degree-preserving consequence coincides with matrix consequence on the
// implication-free fragment.
SuiteResult suite_degree_vs_matrix(std::uint64_t seed, int trials);

// Valuation ↔ bivaluation round trips: clause satisfaction, designation
// equivalence, and both composites being identities.
SuiteResult suite_bival_roundtrip(std::uint64_t seed, int trials);

std::vector<SuiteResult> run_all_suites(std::uint64_t seed, int trials);

// Deterministic textual report; identical seed and trial count give
// byte-identical output.
std::string selftest_report(std::uint64_t seed, int trials);

}  // namespace letlab
