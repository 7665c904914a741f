#include "bgt/graded.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace bgt {

namespace {

int mod(long a, int n) {
    long r = a % n;
    return static_cast<int>(r < 0 ? r + n : r);
}

void require_same_modulus(const GradedSpace& v, const GradedSpace& w) {
    if (v.modulus() != w.modulus())
        throw std::invalid_argument("grading moduli differ: " + std::to_string(v.modulus()) + " vs " +
                                    std::to_string(w.modulus()));
}

// Row operation y += a x restricted to the listed columns.
void row_axpy(std::vector<Scalar>& y, const Scalar& a, const std::vector<Scalar>& x,
              const std::vector<std::size_t>& support) {
    for (std::size_t j : support) y[j] += a * x[j];
}

std::vector<std::size_t> support_of(const std::vector<Scalar>& v) {
    std::vector<std::size_t> s;
    for (std::size_t j = 0; j < v.size(); ++j)
        if (!v[j].is_zero()) s.push_back(j);
    return s;
}

// Leading reduced row echelon form in place. Returns the pivot column of
// each nonzero row; rows beyond the rank are left zero and dropped.
std::vector<std::size_t> rref_rows(std::vector<Vec>& rows, std::size_t ncols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t col = 0; col < ncols && r < rows.size(); ++col) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][col].is_zero()) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[r]);
        const Scalar inv = rows[r][col].inverse();
        if (!inv.is_one())
            for (auto& x : rows[r])
                if (!x.is_zero()) x *= inv;
        const auto support = support_of(rows[r]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][col].is_zero()) continue;
            const Scalar f = -rows[i][col];
            row_axpy(rows[i], f, rows[r], support);
        }
        pivots.push_back(col);
        ++r;
    }
    rows.resize(r);
    return pivots;
}

// Trailing-pivot canonical form (see Subspace).
void canonical_rows(std::vector<Vec>& rows, std::size_t ncols, std::vector<std::size_t>& pivots) {
    pivots.clear();
    std::size_t r = 0;
    for (std::size_t c = ncols; c-- > 0 && r < rows.size();) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][c].is_zero()) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[r]);
        const Scalar inv = rows[r][c].inverse();
        if (!inv.is_one())
            for (auto& x : rows[r])
                if (!x.is_zero()) x *= inv;
        const auto support = support_of(rows[r]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c].is_zero()) continue;
            const Scalar f = -rows[i][c];
            row_axpy(rows[i], f, rows[r], support);
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    std::vector<std::size_t> order(r);
    for (std::size_t i = 0; i < r; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivots[a] < pivots[b]; });
    std::vector<Vec> sorted_rows;
    std::vector<std::size_t> sorted_pivots;
    sorted_rows.reserve(r);
    for (std::size_t i : order) {
        sorted_rows.push_back(std::move(rows[i]));
        sorted_pivots.push_back(pivots[i]);
    }
    rows = std::move(sorted_rows);
    pivots = std::move(sorted_pivots);
}

std::vector<Vec> matrix_rows(const Matrix& a) {
    std::vector<Vec> rows(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) rows[i] = a.row(i);
    return rows;
}

}  // namespace

bool is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vec add(const Vec& a, const Vec& b) {
    Vec r = a;
    for (std::size_t i = 0; i < b.size(); ++i)
        if (!b[i].is_zero()) r[i] += b[i];
    return r;
}

Vec sub(const Vec& a, const Vec& b) {
    Vec r = a;
    for (std::size_t i = 0; i < b.size(); ++i)
        if (!b[i].is_zero()) r[i] -= b[i];
    return r;
}

Vec scale(const Scalar& s, const Vec& v) {
    Vec r(v.size());
    if (s.is_zero()) return r;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) r[i] = s * v[i];
    return r;
}

void axpy(Vec& y, const Scalar& a, const Vec& x) {
    if (a.is_zero()) return;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!x[i].is_zero()) y[i] += a * x[i];
}

Vec apply_to_factor(const Matrix& f, const Vec& v, std::size_t left, std::size_t right) {
    const std::size_t mid = f.cols(), out = f.rows();
    if (v.size() != left * mid * right) throw std::invalid_argument("apply_to_factor: length mismatch");
    Vec r(left * out * right);
    for (std::size_t idx = 0; idx < v.size(); ++idx) {
        if (v[idx].is_zero()) continue;
        const std::size_t l = idx / (mid * right), m = (idx / right) % mid, t = idx % right;
        for (std::size_t k = 0; k < out; ++k) {
            const Scalar& c = f(k, m);
            if (!c.is_zero()) r[(l * out + k) * right + t] += c * v[idx];
        }
    }
    return r;
}

// ---------------------------------------------------------------- Matrix

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<Vec>& columns) {
    Matrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
        if (columns[j].size() != rows) throw std::invalid_argument("column length mismatch");
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
    }
    return m;
}

Vec Matrix::column(std::size_t j) const {
    Vec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

Vec Matrix::row(std::size_t i) const {
    return Vec(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
               data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vec Matrix::apply(const Vec& x) const {
    if (x.size() != cols_) throw std::invalid_argument("vector length does not match matrix columns");
    Vec y(rows_);
    for (std::size_t j = 0; j < cols_; ++j) {
        if (x[j].is_zero()) continue;
        for (std::size_t i = 0; i < rows_; ++i) {
            const Scalar& a = (*this)(i, j);
            if (!a.is_zero()) y[i] += a * x[j];
        }
    }
    return y;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product dimension mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& x = a(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const Scalar& y = b(k, j);
                if (!y.is_zero()) c(i, j) += x * y;
            }
        }
    }
    return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum dimension mismatch");
    Matrix c = a;
    for (std::size_t k = 0; k < c.data_.size(); ++k)
        if (!b.data_[k].is_zero()) c.data_[k] += b.data_[k];
    return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum dimension mismatch");
    Matrix c = a;
    for (std::size_t k = 0; k < c.data_.size(); ++k)
        if (!b.data_[k].is_zero()) c.data_[k] -= b.data_[k];
    return c;
}

Matrix operator*(const Scalar& s, const Matrix& a) {
    Matrix c = a;
    for (auto& x : c.data_)
        if (!x.is_zero()) x *= s;
    return c;
}

Matrix Matrix::kronecker(const Matrix& a, const Matrix& b) {
    Matrix c(a.rows_ * b.rows_, a.cols_ * b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t j = 0; j < a.cols_; ++j) {
            const Scalar& x = a(i, j);
            if (x.is_zero()) continue;
            for (std::size_t k = 0; k < b.rows_; ++k)
                for (std::size_t l = 0; l < b.cols_; ++l) {
                    const Scalar& y = b(k, l);
                    if (!y.is_zero()) c(i * b.rows_ + k, j * b.cols_ + l) = x * y;
                }
        }
    return c;
}

std::size_t rank(const Matrix& a) {
    auto rows = matrix_rows(a);
    return rref_rows(rows, a.cols()).size();
}

// ---------------------------------------------------------------- GradedSpace

GradedSpace::GradedSpace(int modulus, std::vector<BasisElement> basis) {
    if (modulus < 1) throw std::invalid_argument("grading modulus must be positive");
    auto data = std::make_shared<Data>();
    data->modulus = modulus;
    for (auto& b : basis) {
        b.degree = mod(b.degree, modulus);
        if (!data->index.emplace(b.name, data->basis.size()).second)
            throw std::invalid_argument("duplicate basis name: " + b.name);
        data->basis.push_back(std::move(b));
    }
    data_ = std::move(data);
}

GradedSpace GradedSpace::unit(int modulus) {
    GradedSpace s(modulus, {{"1", 0}});
    auto data = std::make_shared<Data>(*s.data_);
    data->is_unit = true;
    s.data_ = std::move(data);
    return s;
}

std::optional<std::size_t> GradedSpace::find(const std::string& name) const {
    auto it = data_->index.find(name);
    if (it == data_->index.end()) return std::nullopt;
    return it->second;
}

std::size_t GradedSpace::index_of(const std::string& name) const {
    auto i = find(name);
    if (!i) throw std::out_of_range("no basis element named '" + name + "'");
    return *i;
}

std::size_t GradedSpace::dim_in_degree(int d) const {
    const int dd = mod(d, modulus());
    return static_cast<std::size_t>(std::count_if(basis().begin(), basis().end(),
                                                  [dd](const BasisElement& b) { return b.degree == dd; }));
}

Vec GradedSpace::basis_vector(std::size_t i) const {
    Vec v(dim());
    v.at(i) = 1;
    return v;
}

std::optional<int> GradedSpace::homogeneous_degree(const Vec& v) const {
    std::optional<int> deg;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        if (!deg) deg = degree(i);
        else if (*deg != degree(i)) throw std::logic_error("vector is not homogeneous");
    }
    return deg;
}

bool operator==(const GradedSpace& a, const GradedSpace& b) {
    if (a.data_ == b.data_) return true;
    return a.modulus() == b.modulus() && a.basis() == b.basis() && a.is_unit() == b.is_unit();
}

GradedSpace tensor(const GradedSpace& v, const GradedSpace& w) {
    require_same_modulus(v, w);
    if (v.is_unit()) return w;
    if (w.is_unit()) return v;
    std::vector<BasisElement> basis;
    basis.reserve(v.dim() * w.dim());
    for (const auto& a : v.basis())
        for (const auto& b : w.basis()) basis.push_back({a.name + "." + b.name, a.degree + b.degree});
    return GradedSpace(v.modulus(), std::move(basis));
}

GradedSpace tensor_power(const GradedSpace& v, int k) {
    if (k < 1) throw std::invalid_argument("tensor power must be at least 1");
    GradedSpace r = v;
    for (int i = 1; i < k; ++i) r = tensor(r, v);
    return r;
}

std::string format_vector(const GradedSpace& space, const Vec& v) {
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        Scalar coef = v[i];
        const bool compound = coef.str().find_first_of("+-", 1) != std::string::npos;
        const bool negative = !compound && coef.str().front() == '-';
        if (negative) coef = -coef;
        if (first) out << (negative ? "-" : "");
        else out << (negative ? " - " : " + ");
        if (coef.is_one()) {
            out << space[i].name;
        } else if (compound) {
            out << "(" << coef.str() << ") " << space[i].name;
        } else {
            out << coef.str() << " " << space[i].name;
        }
        first = false;
    }
    if (first) out << "0";
    return out.str();
}

// ---------------------------------------------------------------- GradedMap

GradedMap::GradedMap(GradedSpace domain, GradedSpace codomain, Matrix matrix, int shift)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), matrix_(std::move(matrix)) {
    require_same_modulus(domain_, codomain_);
    shift_ = mod(shift, domain_.modulus());
    if (matrix_.rows() != codomain_.dim() || matrix_.cols() != domain_.dim())
        throw std::invalid_argument("matrix shape does not match domain and codomain");
    const int n = domain_.modulus();
    for (std::size_t i = 0; i < matrix_.rows(); ++i)
        for (std::size_t j = 0; j < matrix_.cols(); ++j)
            if (!matrix_(i, j).is_zero() && codomain_.degree(i) != mod(domain_.degree(j) + shift_, n))
                throw std::logic_error("degree violation: " + domain_[j].name + " -> " + codomain_[i].name);
}

GradedMap GradedMap::identity(const GradedSpace& v) { return GradedMap(v, v, Matrix::identity(v.dim())); }

GradedMap GradedMap::zero(const GradedSpace& domain, const GradedSpace& codomain, int shift) {
    return GradedMap(domain, codomain, Matrix(codomain.dim(), domain.dim()), shift);
}

GradedMap GradedMap::from_columns(const GradedSpace& domain, const GradedSpace& codomain,
                                  const std::vector<Vec>& columns, int shift) {
    if (columns.size() != domain.dim()) throw std::invalid_argument("one column per domain basis vector expected");
    return GradedMap(domain, codomain, Matrix::from_columns(codomain.dim(), columns), shift);
}

bool operator==(const GradedMap& a, const GradedMap& b) {
    // The shift of a zero map is not observable, so it does not take part.
    return a.domain_ == b.domain_ && a.codomain_ == b.codomain_ && a.matrix_ == b.matrix_;
}

GradedMap compose(const GradedMap& g, const GradedMap& f) {
    if (g.domain() != f.codomain()) throw std::invalid_argument("composition: codomain/domain mismatch");
    return GradedMap(f.domain(), g.codomain(), g.matrix() * f.matrix(), g.shift() + f.shift());
}

GradedMap operator+(const GradedMap& f, const GradedMap& g) {
    if (f.domain() != g.domain() || f.codomain() != g.codomain()) throw std::invalid_argument("sum of unlike maps");
    return GradedMap(f.domain(), f.codomain(), f.matrix() + g.matrix(), f.shift());
}

GradedMap operator-(const GradedMap& f, const GradedMap& g) {
    if (f.domain() != g.domain() || f.codomain() != g.codomain()) throw std::invalid_argument("difference of unlike maps");
    return GradedMap(f.domain(), f.codomain(), f.matrix() - g.matrix(), f.shift());
}

GradedMap operator*(const Scalar& s, const GradedMap& f) {
    return GradedMap(f.domain(), f.codomain(), s * f.matrix(), f.shift());
}

GradedMap tensor_map(const GradedMap& f, const GradedMap& g) {
    if (f.shift() != 0 || g.shift() != 0) throw std::invalid_argument("tensor_map requires degree-preserving maps");
    return GradedMap(tensor(f.domain(), g.domain()), tensor(f.codomain(), g.codomain()),
                     Matrix::kronecker(f.matrix(), g.matrix()));
}

namespace {

GradedMap braiding_power(const GradedSpace& v, const GradedSpace& w, int sign) {
    require_same_modulus(v, w);
    const int n = v.modulus();
    const GradedSpace vw = tensor(v, w);
    const GradedSpace wv = tensor(w, v);
    Matrix m(wv.dim(), vw.dim());
    for (std::size_t i = 0; i < v.dim(); ++i)
        for (std::size_t j = 0; j < w.dim(); ++j)
            m(j * v.dim() + i, i * w.dim() + j) = Scalar::q_power(n, static_cast<long>(sign) * v.degree(i) * w.degree(j));
    return GradedMap(vw, wv, std::move(m));
}

}  // namespace

GradedMap braiding(const GradedSpace& v, const GradedSpace& w) { return braiding_power(v, w, 1); }

GradedMap braiding_inverse(const GradedSpace& v, const GradedSpace& w) {
    // Psi^{-1}_{V,W} : W (x) V -> V (x) W
    auto m = braiding_power(w, v, -1);
    return m;
}

std::optional<GradedMap> inverse(const GradedMap& f) {
    const std::size_t n = f.domain().dim();
    if (f.codomain().dim() != n) return std::nullopt;
    std::vector<Vec> rows(n, Vec(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) rows[i][j] = f.matrix()(i, j);
        rows[i][n + i] = 1;
    }
    auto pivots = rref_rows(rows, 2 * n);
    if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = rows[i][n + j];
    return GradedMap(f.codomain(), f.domain(), std::move(inv), -f.shift());
}

// ---------------------------------------------------------------- Subspace

Subspace Subspace::span(const GradedSpace& ambient, std::vector<Vec> vectors) {
    Subspace s(ambient);
    std::erase_if(vectors, [](const Vec& v) { return is_zero(v); });
    for (const auto& v : vectors)
        if (v.size() != ambient.dim()) throw std::invalid_argument("span: vector length mismatch");
    canonical_rows(vectors, ambient.dim(), s.pivots_);
    s.rows_ = std::move(vectors);
    return s;
}

Subspace Subspace::whole(const GradedSpace& ambient) {
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < ambient.dim(); ++i) rows.push_back(ambient.basis_vector(i));
    return span(ambient, std::move(rows));
}

Vec Subspace::reduce(const Vec& v) const {
    if (v.size() != ambient_.dim()) throw std::invalid_argument("reduce: vector length mismatch");
    Vec r = v;
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        if (r[pivots_[k]].is_zero()) continue;
        const Scalar f = -r[pivots_[k]];
        axpy(r, f, rows_[k]);
    }
    return r;
}

bool Subspace::contains(const Vec& v) const { return is_zero(reduce(v)); }

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
    if (!contains(v)) return std::nullopt;
    Vec c(rows_.size());
    for (std::size_t k = 0; k < rows_.size(); ++k) c[k] = v[pivots_[k]];
    return c;
}

Vec Subspace::from_coordinates(const Vec& coords) const {
    if (coords.size() != rows_.size()) throw std::invalid_argument("coordinate length mismatch");
    Vec v(ambient_.dim());
    for (std::size_t k = 0; k < rows_.size(); ++k) axpy(v, coords[k], rows_[k]);
    return v;
}

GradedSpace Subspace::as_space() const {
    std::vector<BasisElement> basis;
    for (std::size_t k = 0; k < rows_.size(); ++k) basis.push_back(ambient_[pivots_[k]]);
    return GradedSpace(ambient_.modulus(), std::move(basis));
}

GradedMap Subspace::inclusion() const { return GradedMap::from_columns(as_space(), ambient_, rows_); }

bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.pivots_ == b.pivots_ && a.rows_ == b.rows_;
}

Subspace kernel(const GradedMap& f) {
    const std::size_t n = f.domain().dim();
    auto rows = matrix_rows(f.matrix());
    const auto pivots = rref_rows(rows, n);
    Subspace s(f.domain());
    std::vector<bool> is_pivot(n, false);
    for (auto p : pivots) is_pivot[p] = true;
    for (std::size_t j = 0; j < n; ++j) {
        if (is_pivot[j]) continue;
        Vec v(n);
        v[j] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            if (!rows[i][j].is_zero()) v[pivots[i]] = -rows[i][j];
        s.rows_.push_back(std::move(v));
        s.pivots_.push_back(j);
    }
    return s;
}

Subspace joint_kernel(const std::vector<GradedMap>& maps) {
    if (maps.empty()) throw std::invalid_argument("joint_kernel of no maps");
    const GradedSpace& dom = maps.front().domain();
    std::size_t total = 0;
    for (const auto& m : maps) {
        if (m.domain() != dom) throw std::invalid_argument("joint_kernel: domains differ");
        total += m.codomain().dim();
    }
    Matrix stacked(total, dom.dim());
    std::size_t off = 0;
    for (const auto& m : maps) {
        for (std::size_t i = 0; i < m.codomain().dim(); ++i)
            for (std::size_t j = 0; j < dom.dim(); ++j) stacked(off + i, j) = m.matrix()(i, j);
        off += m.codomain().dim();
    }
    // The stacked codomain carries no grading of its own; reuse the kernel routine on a plain map.
    std::vector<BasisElement> basis(total);
    for (std::size_t i = 0; i < total; ++i) basis[i] = {"r" + std::to_string(i), 0};
    off = 0;
    for (const auto& m : maps) {
        for (std::size_t i = 0; i < m.codomain().dim(); ++i)
            basis[off + i].degree = m.codomain().degree(i) - m.shift();
        off += m.codomain().dim();
    }
    return kernel(GradedMap(dom, GradedSpace(dom.modulus(), std::move(basis)), std::move(stacked)));
}

Subspace image(const GradedMap& f) {
    std::vector<Vec> cols;
    for (std::size_t j = 0; j < f.domain().dim(); ++j) cols.push_back(f.column(j));
    return Subspace::span(f.codomain(), std::move(cols));
}

Subspace intersect(const Subspace& s, const Subspace& t) {
    if (s.ambient() != t.ambient()) throw std::invalid_argument("intersect: different ambient spaces");
    if (s.dim() == 0 || t.dim() == 0) return Subspace(s.ambient());
    // a in ker of (coefficients -> class modulo t)
    std::vector<Vec> reduced;
    for (const auto& row : s.basis()) reduced.push_back(t.reduce(row));
    const std::size_t n = s.ambient().dim();
    Matrix m(n, s.dim());
    for (std::size_t j = 0; j < s.dim(); ++j)
        for (std::size_t i = 0; i < n; ++i) m(i, j) = reduced[j][i];
    auto rows = matrix_rows(m);
    const auto pivots = rref_rows(rows, s.dim());
    std::vector<bool> is_pivot(s.dim(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<Vec> out;
    for (std::size_t j = 0; j < s.dim(); ++j) {
        if (is_pivot[j]) continue;
        Vec coeffs(s.dim());
        coeffs[j] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            if (!rows[i][j].is_zero()) coeffs[pivots[i]] = -rows[i][j];
        out.push_back(s.from_coordinates(coeffs));
    }
    return Subspace::span(s.ambient(), std::move(out));
}

Subspace sum(const Subspace& s, const Subspace& t) {
    if (s.ambient() != t.ambient()) throw std::invalid_argument("sum: different ambient spaces");
    std::vector<Vec> all = s.basis();
    all.insert(all.end(), t.basis().begin(), t.basis().end());
    return Subspace::span(s.ambient(), std::move(all));
}

bool is_subspace_of(const Subspace& s, const Subspace& t) {
    return std::all_of(s.basis().begin(), s.basis().end(), [&](const Vec& v) { return t.contains(v); });
}

Quotient quotient(const Subspace& s) {
    const GradedSpace& amb = s.ambient();
    std::vector<bool> is_pivot(amb.dim(), false);
    for (auto p : s.pivots()) is_pivot[p] = true;
    std::vector<std::size_t> free;
    std::vector<BasisElement> basis;
    for (std::size_t j = 0; j < amb.dim(); ++j)
        if (!is_pivot[j]) {
            free.push_back(j);
            basis.push_back(amb[j]);
        }
    GradedSpace q(amb.modulus(), std::move(basis));
    std::vector<Vec> proj_cols;
    for (std::size_t j = 0; j < amb.dim(); ++j) {
        const Vec r = s.reduce(amb.basis_vector(j));
        Vec c(free.size());
        for (std::size_t k = 0; k < free.size(); ++k) c[k] = r[free[k]];
        proj_cols.push_back(std::move(c));
    }
    std::vector<Vec> sec_cols;
    for (std::size_t k = 0; k < free.size(); ++k) sec_cols.push_back(amb.basis_vector(free[k]));
    return Quotient{q, GradedMap::from_columns(amb, q, proj_cols), GradedMap::from_columns(q, amb, sec_cols)};
}

std::optional<Vec> solve(const Matrix& a, const Vec& y) {
    if (y.size() != a.rows()) throw std::invalid_argument("solve: right-hand side length mismatch");
    const std::size_t n = a.cols();
    std::vector<Vec> rows(a.rows(), Vec(n + 1));
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < n; ++j) rows[i][j] = a(i, j);
        rows[i][n] = y[i];
    }
    const auto pivots = rref_rows(rows, n + 1);
    if (!pivots.empty() && pivots.back() == n) return std::nullopt;
    Vec x(n);
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = rows[i][n];
    return x;
}

std::optional<Vec> solve(const GradedMap& f, const Vec& y) { return solve(f.matrix(), y); }

}  // namespace bgt
