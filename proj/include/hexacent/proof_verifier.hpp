#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hexacent/certify.hpp"
#include "hexacent/formulas.hpp"
#include "hexacent/polynomial.hpp"

namespace hexacent {

enum class ClaimStatus { Verified, VerifiedWithErratum, Inconclusive, Disproved };
std::string to_string(ClaimStatus s);

struct LedgerEntry {
    std::string id;
    std::string description;
    ClaimStatus status = ClaimStatus::Inconclusive;
    std::string note;  // erratum text; empty unless VerifiedWithErratum
    std::vector<std::pair<std::string, std::string>> data;
};

struct VerificationLedger {
    std::vector<LedgerEntry> entries;

    const LedgerEntry* find(const std::string& id) const;
    long count(ClaimStatus s) const;
    // True when nothing is Inconclusive or Disproved.
    bool settled() const;
};

struct ClaimInfo {
    std::string id;
    std::string description;
};
// P1, P2, P3, P4a, P4b, P5a, P5b, P6, P7a, P7b, P7c, P8a, P8b, P8c, TIGHT.
const std::vector<ClaimInfo>& claim_catalog();

// Both sides of the reduction identity for a region G = A' u V with
// cen(G) = nu / delta: first (nu - areaV cenV) / (delta - areaV) <= nu / delta,
// second cenV >= nu / delta. Throws std::invalid_argument unless
// delta > areaV > 0.
std::pair<bool, bool> verify_reduction_identity(const Rational& nu, const Rational& delta, const Rational& areaV,
                                                const Rational& cenV);

// The inequality polynomials, each re-derived from its defining inequality.
BiPoly heptagon_bound_polynomial();   // cen_G <= 4/21 cleared of denominators
BiPoly heptagon_bound_cofactor();     // the above divided by (w - 2)
BiPoly lower_wing_polynomial();       // (z(2-2w)/w + 1)/2 <= cen_G cleared of denominators
UniPoly wing_triangle_polynomial();   // h(w), transcribed
UniPoly pentagon_bound_polynomial();  // cen_P <= 4/21 cleared of denominators
UniPoly part8_printed_polynomial();   // from the printed cen(a1 a6 m1)
UniPoly part8_corrected_polynomial(); // from the recomputed cen(a1 a6 m1)

// A polynomial as printed next to the one recomputed from its definition.
struct PolynomialRecord {
    std::string id;
    std::string claim;  // ledger entry the record belongs to
    std::string printed;
    std::string derived;
    bool matches = false;  // equal up to a positive constant factor
    std::string note;
};
std::vector<PolynomialRecord> proof_polynomials();

struct VerifyOptions {
    CertifyBudget budget;
    int interval_depth = 24;
    std::optional<std::string> claim;  // run only this id
};

// Throws std::invalid_argument for an unknown claim id.
VerificationLedger run_full_verification(const VerifyOptions& options = {});

// p(w, z) with both arguments carrying derivatives.
IntervalDual eval_dual(const BiPoly& p, const IntervalDual& w, const IntervalDual& z);

}  // namespace hexacent
