#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/gmp.hpp>
#include <Eigen/Dense>

#include "unlabeled/measurement.hpp"

namespace unlabeled {

using Rational = boost::multiprecision::mpq_rational;

class ClosureGuardExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Dense matrix of exact rationals.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols);

    static RationalMatrix identity(std::size_t n);
    static RationalMatrix from_integers(const IntMatrix& m);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    const std::vector<Rational>& entries() const { return data_; }

    RationalMatrix operator*(const RationalMatrix& rhs) const;
    RationalMatrix scaled(const Rational& q) const;

    Rational determinant() const;
    RationalMatrix inverse() const;
    bool is_nonnegative() const;
    Eigen::MatrixXd to_double() const;
    std::string to_string() const;

    friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const RationalMatrix& a, const RationalMatrix& b) { return !(a == b); }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

struct RationalMatrixHash {
    std::size_t operator()(const RationalMatrix& m) const;
};

enum class Quotient {
    positive_scale,  // A ~ qA for rational q > 0
    sign_and_scale,  // A ~ qA for rational q != 0
};

/// Divide by the first nonzero entry in row-major order (by its absolute
/// value for positive_scale).
RationalMatrix canonicalize(const RationalMatrix& a, Quotient quotient);

struct GroupElement {
    RationalMatrix matrix;             // canonical representative
    std::vector<std::uint16_t> word;   // generator indices, applied left to right
};

/// The edge permutation of K_4 induced by relabeling vertex v as perm[v]:
/// (P l)_{ij} = l_{perm(i) perm(j)}.
RationalMatrix vertex_relabeling_matrix(const std::array<std::size_t, 4>& perm);

std::vector<RationalMatrix> all_vertex_relabelings();

/// Diagonal matrix negating the coordinates set in `mask` (bit e = edge e).
RationalMatrix sign_flip_matrix(unsigned mask);

/// The half-integer Regge involution of L_{2,4}.
RationalMatrix regge_matrix();

/// Small generating set: a transposition and a 4-cycle of vertices, one
/// coordinate sign flip, and optionally the Regge map.
std::vector<RationalMatrix> standard_generators(bool with_regge);

/// Breadth-first closure of the generated group modulo the chosen scale action.
std::vector<GroupElement> close_group(const std::vector<RationalMatrix>& generators, Quotient quotient,
                                      std::size_t guard = 1'000'000);

std::vector<GroupElement> filter_nonnegative(const std::vector<GroupElement>& group);

/// Max on_L residual of A l over `samples` Euclidean K_4 length vectors of
/// pseudo-generic planar configurations.
double verify_preserves_variety(const RationalMatrix& a, std::size_t samples, std::uint64_t seed);

/// Elements A with N A entrywise non-negative.
std::vector<GroupElement> check_canonical_nonneg_compositions(const std::vector<GroupElement>& group,
                                                              const RationalMatrix& n);

}  // namespace unlabeled
