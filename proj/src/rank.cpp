#include "unlabeled/rank.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace unlabeled {

RelationSearch find_integer_relation(const std::vector<double>& w, std::int64_t coeff_bound, double tol) {
    const std::size_t k = w.size();
    if (k < 2) throw std::invalid_argument("relation search needs at least two values");
    if (coeff_bound < 1) throw std::invalid_argument("coefficient bound must be >= 1");
    double total = 1.0;
    for (std::size_t i = 0; i < k; ++i) {
        total *= static_cast<double>(2 * coeff_bound + 1);
        if (total > static_cast<double>(kRelationSearchGuard)) {
            throw BudgetExceeded("relation search over " + std::to_string(k) + " values with bound " +
                                 std::to_string(coeff_bound) + " exceeds the enumeration guard");
        }
    }
    double wnorm = 0.0;
    for (double x : w) wnorm += x * x;
    wnorm = std::sqrt(wnorm);

    RelationSearch out;
    std::vector<std::int64_t> c(k);
    for (std::int64_t level = 1; level <= coeff_bound; ++level) {
        std::fill(c.begin(), c.end(), -level);
        while (true) {
            std::int64_t maxabs = 0;
            for (auto x : c) maxabs = std::max(maxabs, x < 0 ? -x : x);
            if (maxabs == level) {
                ++out.candidates_tested;
                double sum = 0.0, cnorm = 0.0;
                for (std::size_t i = 0; i < k; ++i) {
                    sum += static_cast<double>(c[i]) * w[i];
                    cnorm += static_cast<double>(c[i] * c[i]);
                }
                if (std::abs(sum) <= tol * wnorm * std::sqrt(cnorm)) {
                    out.relation = c;
                    return out;
                }
            }
            std::size_t pos = k;
            while (pos > 0 && c[pos - 1] == level) c[--pos] = -level;
            if (pos == 0) break;
            ++c[pos - 1];
        }
    }
    return out;
}

RationalRankReport rational_rank_2d(const std::vector<double>& w, int b, bool l24_singular,
                                    const Rank2dOptions& options) {
    if (w.size() != 6) throw std::invalid_argument("planar rank test needs a 6-tuple");
    if (b < 1) throw std::invalid_argument("bounce bound must be >= 1");
    RationalRankReport report;
    report.singular = l24_singular;
    const std::int64_t bound = static_cast<std::int64_t>(b) * b;
    const std::vector<double> triple(w.begin(), w.begin() + 3);

    bool triple_independent = true;
    if (!options.first_three_independent) {
        auto search = find_integer_relation(triple, bound, options.tol);
        report.search_budget_used = search.candidates_tested;
        if (search.relation) {
            triple_independent = false;
            report.found_relation = search.relation;
        }
    }

    if (triple_independent && !l24_singular) {
        report.certified_full = true;
        report.rank_lower_bound = 6;
    } else if (triple_independent) {
        report.rank_lower_bound = 3;
    } else {
        // Some pair of the triple may still be independent.
        int lower = std::any_of(triple.begin(), triple.end(), [](double x) { return x != 0.0; }) ? 1 : 0;
        for (std::size_t i = 0; i < 3 && lower < 2; ++i)
            for (std::size_t j = i + 1; j < 3 && lower < 2; ++j) {
                auto pair = find_integer_relation({triple[i], triple[j]}, bound, options.tol);
                report.search_budget_used += pair.candidates_tested;
                if (!pair.relation) lower = 2;
            }
        report.rank_lower_bound = lower;
    }
    return report;
}

RationalRankReport rank_bypass_restricted_3d(const std::vector<double>& w, bool restricted_assumption,
                                             double tol) {
    if (!restricted_assumption) {
        throw ContractError("the distinct-values rank bypass is valid only for ensembles of pings and "
                            "triangles through one common vertex; assert that assumption explicitly");
    }
    if (w.size() != 10) throw std::invalid_argument("spatial rank bypass needs a 10-tuple");
    std::vector<double> sorted(w);
    std::sort(sorted.begin(), sorted.end());
    RationalRankReport report;
    std::size_t distinct = sorted.empty() ? 0 : 1;
    for (std::size_t i = 1; i < sorted.size(); ++i) {
        const double scale = std::max(std::abs(sorted[i]), std::abs(sorted[i - 1]));
        if (sorted[i] - sorted[i - 1] > tol * scale) ++distinct;
    }
    report.certified_full = distinct == 10;
    report.rank_lower_bound = report.certified_full ? 10 : (sorted.back() != 0.0 ? 1 : 0);
    return report;
}

}  // namespace unlabeled
