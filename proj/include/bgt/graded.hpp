#pragma once

// Z_n-graded finite-dimensional vector spaces over Q(q), degree-homogeneous
// linear maps, the anyonic braiding, and exact subspace algebra.
//
// Basis ordering conventions (frozen):
//   * the basis of V (x) W is lexicographic with the V index major; the name
//     of v (x) w is "v.w" and its degree is |v| + |w| mod n;
//   * tensoring with the unit object returns the other factor unchanged;
//   * a matrix entry (i, j) is the coefficient of codomain basis i in the
//     image of domain basis j.

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bgt/cyclotomic.hpp"

namespace bgt {

using Vec = std::vector<Scalar>;

bool is_zero(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Scalar& s, const Vec& v);
void axpy(Vec& y, const Scalar& a, const Vec& x);  // y += a x

class Matrix;
/// Applies f to the middle factor of v, read as an element of L (x) X (x) R
/// with dim L = left and dim R = right.
Vec apply_to_factor(const Matrix& f, const Vec& v, std::size_t left, std::size_t right);

/// Dense row-major matrix of scalars. Zero entries are cheap, and the
/// multiplication routines skip them.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n);
    static Matrix from_columns(std::size_t rows, const std::vector<Vec>& columns);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vec column(std::size_t j) const;
    Vec row(std::size_t i) const;
    Vec apply(const Vec& x) const;
    Matrix transpose() const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Scalar& s, const Matrix& a);
    friend bool operator==(const Matrix& a, const Matrix& b) = default;

    /// Kronecker product with the left factor's index major.
    static Matrix kronecker(const Matrix& a, const Matrix& b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

struct BasisElement {
    std::string name;
    int degree = 0;
    friend bool operator==(const BasisElement&, const BasisElement&) = default;
};

/// A Z_n-graded space with a named homogeneous basis. Immutable, cheap to copy.
class GradedSpace {
public:
    GradedSpace() : GradedSpace(3, {}) {}
    GradedSpace(int modulus, std::vector<BasisElement> basis);

    /// The unit object: one basis vector "1" in degree 0.
    static GradedSpace unit(int modulus);

    int modulus() const noexcept { return data_->modulus; }
    std::size_t dim() const noexcept { return data_->basis.size(); }
    const std::vector<BasisElement>& basis() const noexcept { return data_->basis; }
    const BasisElement& operator[](std::size_t i) const { return data_->basis[i]; }
    int degree(std::size_t i) const { return data_->basis[i].degree; }
    bool is_unit() const noexcept { return data_->is_unit; }

    std::optional<std::size_t> find(const std::string& name) const;
    std::size_t index_of(const std::string& name) const;  // throws std::out_of_range

    /// Number of basis vectors of degree d.
    std::size_t dim_in_degree(int d) const;

    Vec zero() const { return Vec(dim()); }
    Vec basis_vector(std::size_t i) const;

    /// Checks that v is homogeneous; returns its degree (nullopt for zero).
    std::optional<int> homogeneous_degree(const Vec& v) const;

    friend bool operator==(const GradedSpace& a, const GradedSpace& b);
    friend bool operator!=(const GradedSpace& a, const GradedSpace& b) { return !(a == b); }

private:
    struct Data {
        int modulus;
        std::vector<BasisElement> basis;
        std::unordered_map<std::string, std::size_t> index;
        bool is_unit = false;
    };
    std::shared_ptr<const Data> data_;
};

GradedSpace tensor(const GradedSpace& v, const GradedSpace& w);
GradedSpace tensor_power(const GradedSpace& v, int k);  // k >= 1

/// Renders a vector as "c name + c name ..." using the space's basis names.
std::string format_vector(const GradedSpace& space, const Vec& v);

/// A linear map that raises degree by `shift` (mod n). Construction checks
/// degree homogeneity and throws std::logic_error on a violation.
class GradedMap {
public:
    GradedMap() = default;
    GradedMap(GradedSpace domain, GradedSpace codomain, Matrix matrix, int shift = 0);

    static GradedMap identity(const GradedSpace& v);
    static GradedMap zero(const GradedSpace& domain, const GradedSpace& codomain, int shift = 0);
    static GradedMap from_columns(const GradedSpace& domain, const GradedSpace& codomain,
                                  const std::vector<Vec>& columns, int shift = 0);

    const GradedSpace& domain() const noexcept { return domain_; }
    const GradedSpace& codomain() const noexcept { return codomain_; }
    int shift() const noexcept { return shift_; }
    const Matrix& matrix() const noexcept { return matrix_; }

    Vec operator()(const Vec& x) const { return matrix_.apply(x); }
    Vec column(std::size_t j) const { return matrix_.column(j); }
    Vec image_of(const std::string& basis_name) const { return column(domain_.index_of(basis_name)); }

    friend bool operator==(const GradedMap& a, const GradedMap& b);
    friend bool operator!=(const GradedMap& a, const GradedMap& b) { return !(a == b); }

private:
    GradedSpace domain_;
    GradedSpace codomain_;
    int shift_ = 0;
    Matrix matrix_;
};

/// g o f; shifts add.
GradedMap compose(const GradedMap& g, const GradedMap& f);
GradedMap operator+(const GradedMap& f, const GradedMap& g);
GradedMap operator-(const GradedMap& f, const GradedMap& g);
GradedMap operator*(const Scalar& s, const GradedMap& f);

/// f (x) g; both must have shift 0.
GradedMap tensor_map(const GradedMap& f, const GradedMap& g);

/// Psi(v (x) w) = q^{|v||w|} w (x) v.
GradedMap braiding(const GradedSpace& v, const GradedSpace& w);
GradedMap braiding_inverse(const GradedSpace& v, const GradedSpace& w);

/// Inverse of a square invertible map (nullopt when singular).
std::optional<GradedMap> inverse(const GradedMap& f);

/// A subspace stored by a canonical echelon basis.
///
/// Canonical form: each row's last nonzero entry (its pivot) is 1, every
/// other row vanishes in that column, and rows are sorted by pivot. Two
/// subspaces are equal iff their basis matrices coincide. For a graded
/// subspace every canonical row is automatically homogeneous.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(GradedSpace ambient) : ambient_(std::move(ambient)) {}

    /// Canonical form of the span of the given vectors.
    static Subspace span(const GradedSpace& ambient, std::vector<Vec> vectors);
    static Subspace whole(const GradedSpace& ambient);

    const GradedSpace& ambient() const noexcept { return ambient_; }
    std::size_t dim() const noexcept { return rows_.size(); }
    const std::vector<Vec>& basis() const noexcept { return rows_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

    bool contains(const Vec& v) const;
    /// Coordinates against basis(), or nullopt when v is not in the subspace.
    std::optional<Vec> coordinates(const Vec& v) const;
    Vec from_coordinates(const Vec& coords) const;
    /// v minus its component along the pivots; zero iff v is in the subspace.
    Vec reduce(const Vec& v) const;

    /// Inclusion map from a space whose basis is the canonical rows. The
    /// domain names are the ambient names at each pivot.
    GradedMap inclusion() const;
    GradedSpace as_space() const;

    friend bool operator==(const Subspace& a, const Subspace& b);
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
    friend Subspace kernel(const GradedMap& f);
    GradedSpace ambient_;
    std::vector<Vec> rows_;
    std::vector<std::size_t> pivots_;
};

Subspace kernel(const GradedMap& f);
/// Joint kernel of several maps sharing a domain.
Subspace joint_kernel(const std::vector<GradedMap>& maps);
Subspace image(const GradedMap& f);
Subspace intersect(const Subspace& s, const Subspace& t);
Subspace sum(const Subspace& s, const Subspace& t);
bool is_subspace_of(const Subspace& s, const Subspace& t);

struct Quotient {
    GradedSpace space;       // basis: ambient vectors at the non-pivot columns of S
    GradedMap projection;    // ambient -> space, surjective with kernel S
    GradedMap section;       // space -> ambient, projection o section = id
};
Quotient quotient(const Subspace& s);

/// Some x with f(x) = y, or nullopt.
std::optional<Vec> solve(const GradedMap& f, const Vec& y);
/// Same for a plain matrix.
std::optional<Vec> solve(const Matrix& a, const Vec& y);

std::size_t rank(const Matrix& a);

}  // namespace bgt
