#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

namespace unlabeled {

/// Coordinates of C^D restricted to reals, edge-ordered over K_{d+2}.
class VarietyPoint {
public:
    VarietyPoint(std::vector<double> coords, std::size_t d);

    std::size_t dimension() const { return d_; }
    const std::vector<double>& coords() const { return coords_; }
    double operator[](std::size_t i) const { return coords_[i]; }
    std::size_t size() const { return coords_.size(); }

private:
    std::vector<double> coords_;
    std::size_t d_;
};

struct MembershipReport {
    bool on_variety = false;
    /// |det| / scale^(d+1) with scale the mean absolute squared coordinate.
    double residual = 0.0;
};

inline constexpr double kDefaultMembershipTol = 1e-7;
inline constexpr double kDefaultSingularTol = 1e-6;

/// The (d+1)x(d+1) determinant presentation of M_{d,d+2}, origin at vertex d+2.
Eigen::MatrixXd gram_from_squared(const VarietyPoint& m);

MembershipReport on_M(const VarietyPoint& m, double tol = kDefaultMembershipTol);

/// on_M of the elementwise squares.
MembershipReport on_L(const VarietyPoint& l, double tol = kDefaultMembershipTol);

enum class SubspaceType { I, II, III };

struct SingularSubspace {
    SubspaceType type;
    std::array<std::array<std::int64_t, 6>, 3> normals;
};

struct SubspaceArrangement {
    std::vector<SingularSubspace> subspaces;

    std::size_t count(SubspaceType t) const;
};

/// The 60 three-dimensional linear subspaces making up the singular locus of L_{2,4}.
const SubspaceArrangement& l24_singular_subspaces();

/// Distance from l to the closest singular subspace, relative to |l|.
double l24_singular_distance(const VarietyPoint& l);

bool is_singular_L24(const VarietyPoint& l, double tol = kDefaultSingularTol);

struct SignFlipIdentity {
    double lhs_sum = 0.0;
    double rhs = 0.0;
    double max_discrepancy = 0.0;  // |lhs - rhs| relative to the magnitude of the summed terms
};

/// Sum over all 2^r diagonal sign matrices S of det(S X + Y), against 2^r det(Y).
SignFlipIdentity signflip_det_identity_check(const Eigen::MatrixXd& X, const Eigen::MatrixXd& Y);

}  // namespace unlabeled
