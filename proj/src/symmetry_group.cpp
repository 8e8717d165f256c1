#include "unlabeled/symmetry_group.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "unlabeled/geometry.hpp"
#include "unlabeled/variety.hpp"

namespace unlabeled {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::from_integers(const IntMatrix& src) {
    RationalMatrix m(static_cast<std::size_t>(src.rows()), static_cast<std::size_t>(src.cols()));
    for (Eigen::Index r = 0; r < src.rows(); ++r)
        for (Eigen::Index c = 0; c < src.cols(); ++c)
            m(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = Rational(static_cast<long long>(src(r, c)));
    return m;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("rational matrix product shape mismatch");
    RationalMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                const Rational& b = rhs(k, j);
                if (b != 0) out(i, j) += a * b;
            }
        }
    return out;
}

RationalMatrix RationalMatrix::scaled(const Rational& q) const {
    RationalMatrix out(*this);
    for (auto& x : out.data_) x *= q;
    return out;
}

Rational RationalMatrix::determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("determinant of a non-square matrix");
    RationalMatrix a(*this);
    Rational det = 1;
    const std::size_t n = rows_;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a(pivot, col) == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(pivot, j), a(col, j));
            det = -det;
        }
        det *= a(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a(r, col) == 0) continue;
            const Rational f = a(r, col) / a(col, col);
            for (std::size_t j = col; j < n; ++j) a(r, j) -= f * a(col, j);
        }
    }
    return det;
}

RationalMatrix RationalMatrix::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("inverse of a non-square matrix");
    const std::size_t n = rows_;
    RationalMatrix a(*this);
    RationalMatrix inv = identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a(pivot, col) == 0) ++pivot;
        if (pivot == n) throw std::domain_error("rational matrix is singular");
        for (std::size_t j = 0; j < n; ++j) {
            std::swap(a(pivot, j), a(col, j));
            std::swap(inv(pivot, j), inv(col, j));
        }
        const Rational p = a(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            a(col, j) /= p;
            inv(col, j) /= p;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a(r, col) == 0) continue;
            const Rational f = a(r, col);
            for (std::size_t j = 0; j < n; ++j) {
                a(r, j) -= f * a(col, j);
                inv(r, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

bool RationalMatrix::is_nonnegative() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x >= 0; });
}

Eigen::MatrixXd RationalMatrix::to_double() const {
    Eigen::MatrixXd m(static_cast<Eigen::Index>(rows_), static_cast<Eigen::Index>(cols_));
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = (*this)(r, c).convert_to<double>();
    return m;
}

std::string RationalMatrix::to_string() const {
    std::ostringstream os;
    for (std::size_t r = 0; r < rows_; ++r) {
        os << (r == 0 ? "[" : " ");
        for (std::size_t c = 0; c < cols_; ++c) os << (c ? " " : "") << (*this)(r, c);
        os << (r + 1 == rows_ ? "]" : "\n");
    }
    return os.str();
}

std::size_t RationalMatrixHash::operator()(const RationalMatrix& m) const {
    std::size_t h = m.rows() * 31 + m.cols();
    for (const auto& q : m.entries()) {
        const auto* raw = q.backend().data();
        const auto num = static_cast<std::size_t>(mpz_get_si(mpq_numref(raw)));
        const auto den = static_cast<std::size_t>(mpz_get_ui(mpq_denref(raw)));
        h ^= num + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        h ^= den + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

RationalMatrix canonicalize(const RationalMatrix& a, Quotient quotient) {
    for (const auto& x : a.entries()) {
        if (x == 0) continue;
        Rational divisor = x;
        if (quotient == Quotient::positive_scale && divisor < 0) divisor = -divisor;
        if (divisor == 1) return a;
        return a.scaled(Rational(1) / divisor);
    }
    return a;
}

RationalMatrix vertex_relabeling_matrix(const std::array<std::size_t, 4>& perm) {
    std::array<bool, 4> seen{};
    for (auto v : perm) {
        if (v >= 4 || seen[v]) throw std::invalid_argument("not a permutation of 4 vertices");
        seen[v] = true;
    }
    RationalMatrix P(6, 6);
    for (std::size_t e = 0; e < 6; ++e) {
        const Edge ed = edge_at(e);
        P(e, edge_index(perm[ed.i], perm[ed.j])) = 1;
    }
    return P;
}

std::vector<RationalMatrix> all_vertex_relabelings() {
    std::array<std::size_t, 4> perm{0, 1, 2, 3};
    std::vector<RationalMatrix> out;
    do out.push_back(vertex_relabeling_matrix(perm));
    while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

RationalMatrix sign_flip_matrix(unsigned mask) {
    RationalMatrix S = RationalMatrix::identity(6);
    for (std::size_t e = 0; e < 6; ++e)
        if ((mask >> e) & 1u) S(e, e) = -1;
    return S;
}

RationalMatrix regge_matrix() {
    // Rows and columns in edge order 12,13,23,14,24,34.
    const Rational h(1, 2);
    RationalMatrix R(6, 6);
    const std::array<std::array<int, 6>, 6> doubled{{
        {-1, 0, 1, 1, 0, 1},
        {0, 2, 0, 0, 0, 0},
        {1, 0, -1, 1, 0, 1},
        {1, 0, 1, -1, 0, 1},
        {0, 0, 0, 0, 2, 0},
        {1, 0, 1, 1, 0, -1},
    }};
    for (std::size_t r = 0; r < 6; ++r)
        for (std::size_t c = 0; c < 6; ++c) R(r, c) = h * doubled[r][c];
    return R;
}

std::vector<RationalMatrix> standard_generators(bool with_regge) {
    std::vector<RationalMatrix> gens{vertex_relabeling_matrix({1, 0, 2, 3}), vertex_relabeling_matrix({1, 2, 3, 0}),
                                     sign_flip_matrix(1u)};
    if (with_regge) gens.push_back(regge_matrix());
    return gens;
}

std::vector<GroupElement> close_group(const std::vector<RationalMatrix>& generators, Quotient quotient,
                                      std::size_t guard) {
    if (generators.empty()) throw std::invalid_argument("closure needs at least one generator");
    const std::size_t n = generators.front().rows();
    std::vector<RationalMatrix> gens;
    for (const auto& g : generators) {
        if (g.rows() != n || g.cols() != n) throw std::invalid_argument("generators must share a square shape");
        if (g.determinant() == 0) throw std::invalid_argument("generator is singular");
        gens.push_back(canonicalize(g, quotient));
    }

    std::vector<GroupElement> elements;
    std::unordered_map<RationalMatrix, std::size_t, RationalMatrixHash> index;
    elements.push_back({canonicalize(RationalMatrix::identity(n), quotient), {}});
    index.emplace(elements.back().matrix, 0);
    for (std::size_t head = 0; head < elements.size(); ++head) {
        for (std::size_t g = 0; g < gens.size(); ++g) {
            RationalMatrix next = canonicalize(elements[head].matrix * gens[g], quotient);
            if (index.count(next)) continue;
            if (elements.size() >= guard) {
                throw ClosureGuardExceeded("group closure exceeded " + std::to_string(guard) + " elements");
            }
            auto word = elements[head].word;
            word.push_back(static_cast<std::uint16_t>(g));
            index.emplace(next, elements.size());
            elements.push_back({std::move(next), std::move(word)});
        }
    }
    return elements;
}

std::vector<GroupElement> filter_nonnegative(const std::vector<GroupElement>& group) {
    std::vector<GroupElement> out;
    for (const auto& e : group)
        if (e.matrix.is_nonnegative()) out.push_back(e);
    return out;
}

double verify_preserves_variety(const RationalMatrix& a, std::size_t samples, std::uint64_t seed) {
    if (a.rows() != 6 || a.cols() != 6) throw std::invalid_argument("L_{2,4} automorphisms are 6x6");
    const Eigen::MatrixXd A = a.to_double();
    double worst = 0.0;
    for (std::size_t s = 0; s < samples; ++s) {
        const auto l = edge_lengths(sample_pseudo_generic(4, 2, seed + s));
        const Eigen::VectorXd image = A * Eigen::Map<const Eigen::VectorXd>(l.data(), 6);
        const auto report = on_L(VarietyPoint(std::vector<double>(image.data(), image.data() + 6), 2));
        worst = std::max(worst, report.residual);
    }
    return worst;
}

std::vector<GroupElement> check_canonical_nonneg_compositions(const std::vector<GroupElement>& group,
                                                              const RationalMatrix& n) {
    std::vector<GroupElement> out;
    for (const auto& e : group)
        if ((n * e.matrix).is_nonnegative()) out.push_back(e);
    return out;
}

}  // namespace unlabeled
