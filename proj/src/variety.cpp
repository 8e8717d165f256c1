#include "unlabeled/variety.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "unlabeled/geometry.hpp"

namespace unlabeled {

VarietyPoint::VarietyPoint(std::vector<double> coords, std::size_t d) : coords_(std::move(coords)), d_(d) {
    if (d < 1) throw std::invalid_argument("variety dimension must be >= 1");
    const std::size_t expected = edge_count(d + 2);
    if (coords_.size() != expected) {
        throw std::invalid_argument("M_{" + std::to_string(d) + "," + std::to_string(d + 2) + "} point needs " +
                                    std::to_string(expected) + " coordinates, got " +
                                    std::to_string(coords_.size()));
    }
}

Eigen::MatrixXd gram_from_squared(const VarietyPoint& m) { return doubled_gram(m.coords()); }

MembershipReport on_M(const VarietyPoint& m, double tol) {
    double scale = 0.0;
    for (double x : m.coords()) scale += std::abs(x);
    scale /= static_cast<double>(m.size());
    MembershipReport out;
    if (scale == 0.0) {
        out.on_variety = true;
        return out;
    }
    // Scale first so the determinant stays O(1).
    std::vector<double> unit(m.coords());
    for (double& x : unit) x /= scale;
    out.residual = std::abs(doubled_gram(unit).determinant());
    out.on_variety = out.residual <= tol;
    return out;
}

MembershipReport on_L(const VarietyPoint& l, double tol) {
    std::vector<double> sq(l.coords());
    for (double& x : sq) x *= x;
    return on_M(VarietyPoint(std::move(sq), l.dimension()), tol);
}

std::size_t SubspaceArrangement::count(SubspaceType t) const {
    std::size_t c = 0;
    for (const auto& s : subspaces) c += s.type == t ? 1 : 0;
    return c;
}

namespace {

// Coordinates of C^6 in order 12,13,23,14,24,34 (1-based vertex names).
constexpr std::size_t E12 = 0, E13 = 1, E23 = 2, E14 = 3, E24 = 4, E34 = 5;

SubspaceArrangement build_arrangement() {
    SubspaceArrangement arr;
    using Row = std::array<std::int64_t, 6>;

    // Type I: four collinear points, signed lengths.
    for (int mask = 0; mask < 32; ++mask) {
        auto s = [&](int bit) -> std::int64_t { return (mask >> bit) & 1 ? -1 : 1; };
        const auto s13 = s(0), s23 = s(1), s14 = s(2), s24 = s(3), s34 = s(4);
        Row a{}, b{}, c{};
        a[E12] = 1; a[E13] = -s13; a[E23] = s23;
        b[E12] = 1; b[E14] = -s14; b[E24] = s24;
        c[E13] = s13; c[E14] = -s14; c[E34] = s34;
        arr.subspaces.push_back({SubspaceType::I, {a, b, c}});
    }

    // Type II: one collapsed pair {a,b}; the two remaining vertices see a and b at equal length.
    for (std::size_t e = 0; e < 6; ++e) {
        const Edge pair = edge_at(e);
        std::array<std::size_t, 2> others{};
        std::size_t k = 0;
        for (std::size_t v = 0; v < 4; ++v)
            if (v != pair.i && v != pair.j) others[k++] = v;
        for (int mask = 0; mask < 4; ++mask) {
            Row r0{}, r1{}, r2{};
            r0[e] = 1;
            const std::int64_t s0 = (mask & 1) ? -1 : 1;
            const std::int64_t s1 = (mask & 2) ? -1 : 1;
            r1[edge_index(pair.i, others[0])] = 1;
            r1[edge_index(pair.j, others[0])] = -s0;
            r2[edge_index(pair.i, others[1])] = 1;
            r2[edge_index(pair.j, others[1])] = -s1;
            arr.subspaces.push_back({SubspaceType::II, {r0, r1, r2}});
        }
    }

    // Type III: one triangle collapsed to a point.
    for (std::size_t skip = 4; skip-- > 0;) {
        std::array<std::size_t, 3> tri{};
        std::size_t k = 0;
        for (std::size_t v = 0; v < 4; ++v)
            if (v != skip) tri[k++] = v;
        Row r0{}, r1{}, r2{};
        r0[edge_index(tri[0], tri[1])] = 1;
        r1[edge_index(tri[0], tri[2])] = 1;
        r2[edge_index(tri[1], tri[2])] = 1;
        arr.subspaces.push_back({SubspaceType::III, {r0, r1, r2}});
    }
    return arr;
}

}  // namespace

const SubspaceArrangement& l24_singular_subspaces() {
    static const SubspaceArrangement arrangement = build_arrangement();
    return arrangement;
}

namespace {

// Orthonormal bases of the normal spaces; the distance to a subspace is the
// length of the component of x in its normal space.
const std::vector<Eigen::Matrix<double, 6, 3>>& normal_bases() {
    static const std::vector<Eigen::Matrix<double, 6, 3>> bases = [] {
        std::vector<Eigen::Matrix<double, 6, 3>> out;
        for (const auto& s : l24_singular_subspaces().subspaces) {
            Eigen::Matrix<double, 6, 3> Nm;
            for (int r = 0; r < 3; ++r)
                for (int c = 0; c < 6; ++c)
                    Nm(c, r) = static_cast<double>(s.normals[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
            Eigen::HouseholderQR<Eigen::Matrix<double, 6, 3>> qr(Nm);
            out.push_back(qr.householderQ() * Eigen::Matrix<double, 6, 3>::Identity());
        }
        return out;
    }();
    return bases;
}

}  // namespace

double l24_singular_distance(const VarietyPoint& l) {
    if (l.dimension() != 2) throw std::invalid_argument("singular locus test is for L_{2,4}");
    Eigen::Matrix<double, 6, 1> x;
    for (int i = 0; i < 6; ++i) x(i) = l[static_cast<std::size_t>(i)];
    const double norm = x.norm();
    if (norm == 0.0) return 0.0;
    double best = INFINITY;
    for (const auto& Q : normal_bases()) best = std::min(best, (Q.transpose() * x).norm());
    return best / norm;
}

bool is_singular_L24(const VarietyPoint& l, double tol) { return l24_singular_distance(l) <= tol; }

SignFlipIdentity signflip_det_identity_check(const Eigen::MatrixXd& X, const Eigen::MatrixXd& Y) {
    if (X.rows() != X.cols() || Y.rows() != Y.cols() || X.rows() != Y.rows()) {
        throw std::invalid_argument("sign-flip identity needs square matrices of equal size");
    }
    const auto r = X.rows();
    if (r > 10) throw std::invalid_argument("sign-flip enumeration limited to r <= 10");
    SignFlipIdentity out;
    double magnitude = 0.0;
    for (std::uint32_t mask = 0; mask < (1u << r); ++mask) {
        Eigen::MatrixXd Z = Y;
        for (Eigen::Index i = 0; i < r; ++i) Z.row(i) += ((mask >> i) & 1u ? -1.0 : 1.0) * X.row(i);
        const double det = Z.determinant();
        out.lhs_sum += det;
        magnitude += std::abs(det);
    }
    out.rhs = std::ldexp(Y.determinant(), static_cast<int>(r));
    magnitude = std::max({magnitude, std::abs(out.rhs), 1e-300});
    out.max_discrepancy = std::abs(out.lhs_sum - out.rhs) / magnitude;
    return out;
}

}  // namespace unlabeled
