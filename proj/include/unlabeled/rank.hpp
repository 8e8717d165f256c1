#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace unlabeled {

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ContractError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

inline constexpr double kDefaultRelationTol = 1e-9;
inline constexpr std::uint64_t kRelationSearchGuard = 100'000'000;

struct RationalRankReport {
    int rank_lower_bound = 0;
    bool certified_full = false;
    std::optional<std::vector<std::int64_t>> found_relation;
    std::uint64_t search_budget_used = 0;
    bool singular = false;  // rejected because the point lies on the singular locus
};

struct RelationSearch {
    std::optional<std::vector<std::int64_t>> relation;
    std::uint64_t candidates_tested = 0;
};

/// Exhaustive search for a nonzero integer vector c, |c_i| <= coeff_bound,
/// with |sum c_i w_i| <= tol |w| |c|. Vectors are visited by increasing
/// max-norm, lexicographically within a norm; the first hit is returned.
RelationSearch find_integer_relation(const std::vector<double>& w, std::int64_t coeff_bound,
                                     double tol = kDefaultRelationTol);

inline std::optional<std::vector<std::int64_t>> integer_relation_search(const std::vector<double>& w,
                                                                       std::int64_t coeff_bound,
                                                                       double tol = kDefaultRelationTol) {
    return find_integer_relation(w, coeff_bound, tol).relation;
}

struct Rank2dOptions {
    double tol = kDefaultRelationTol;
    /// The first three values are known to come from independent functionals
    /// (re-measured base edges during trilateration); skip the search.
    bool first_three_independent = false;
};

/// Rational rank 6 certificate for a consistent planar K_4 tuple: no bounded
/// relation among the first three values and not on the singular locus.
RationalRankReport rational_rank_2d(const std::vector<double>& w, int b, bool l24_singular,
                                    const Rank2dOptions& options = {});

/// Ten distinct values certify rational rank 10 when the ensemble consists of
/// pings and triangles through one common vertex. The caller must assert that.
RationalRankReport rank_bypass_restricted_3d(const std::vector<double>& w, bool restricted_assumption,
                                             double tol = kDefaultRelationTol);

}  // namespace unlabeled
