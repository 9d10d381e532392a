#include "zmdirac/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace zmdirac {

namespace {

void check_dim(int dim) {
    if (dim < 1 || dim > Matrix::kMaxDim)
        throw std::invalid_argument("matrix dimension must be 1..4, got " +
                                    std::to_string(dim));
}

void check_same(int a, int b) {
    if (a != b)
        throw std::invalid_argument("dimension mismatch: " + std::to_string(a) +
                                    " vs " + std::to_string(b));
}

std::string fmt_sci(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", x);
    return buf;
}

}  // namespace

Matrix::Matrix(int dim) : dim_(dim) { check_dim(dim); }

Matrix Matrix::identity(int dim) {
    Matrix m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::zero(int dim) { return Matrix(dim); }

Matrix Matrix::operator+(const Matrix& o) const {
    check_same(dim_, o.dim_);
    Matrix r(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) r(i, j) = (*this)(i, j) + o(i, j);
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    check_same(dim_, o.dim_);
    Matrix r(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) r(i, j) = (*this)(i, j) - o(i, j);
    return r;
}

Matrix Matrix::operator-() const {
    Matrix r(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) r(i, j) = -(*this)(i, j);
    return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
    check_same(dim_, o.dim_);
    Matrix r(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int k = 0; k < dim_; ++k) {
            const cplx a = (*this)(i, k);
            if (a == cplx{}) continue;
            for (int j = 0; j < dim_; ++j) r(i, j) += a * o(k, j);
        }
    return r;
}

Matrix Matrix::operator*(cplx s) const {
    Matrix r(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) r(i, j) = (*this)(i, j) * s;
    return r;
}

Matrix& Matrix::operator+=(const Matrix& o) { return *this = *this + o; }
Matrix& Matrix::operator-=(const Matrix& o) { return *this = *this - o; }

Matrix Matrix::adjoint() const {
    Matrix r(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) r(i, j) = std::conj((*this)(j, i));
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) r(i, j) = (*this)(j, i);
    return r;
}

Matrix Matrix::conjugate() const {
    Matrix r(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) r(i, j) = std::conj((*this)(i, j));
    return r;
}

cplx Matrix::trace() const {
    cplx t = 0.0;
    for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

namespace {

// Laplace expansion along the first listed row; rows/cols hold the live
// index sets of the current minor.
cplx det_minor(const Matrix& m, const std::array<int, 4>& rows,
               const std::array<int, 4>& cols, int n) {
    if (n == 1) return m(rows[0], cols[0]);
    cplx sum = 0.0;
    double sign = 1.0;
    std::array<int, 4> sub_rows{};
    for (int i = 1; i < n; ++i) sub_rows[i - 1] = rows[i];
    for (int k = 0; k < n; ++k) {
        std::array<int, 4> sub_cols{};
        int t = 0;
        for (int j = 0; j < n; ++j)
            if (j != k) sub_cols[t++] = cols[j];
        sum += sign * m(rows[0], cols[k]) * det_minor(m, sub_rows, sub_cols, n - 1);
        sign = -sign;
    }
    return sum;
}

}  // namespace

cplx Matrix::det() const {
    std::array<int, 4> idx{0, 1, 2, 3};
    return det_minor(*this, idx, idx, dim_);
}

double Matrix::fnorm() const {
    double s = 0.0;
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) s += std::norm((*this)(i, j));
    return std::sqrt(s);
}

double Matrix::max_abs() const {
    double m = 0.0;
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) m = std::max(m, std::abs((*this)(i, j)));
    return m;
}

Matrix operator*(cplx s, const Matrix& m) { return m * s; }

Vec Vec::basis(int dim, int k) {
    check_dim(dim);
    if (k < 0 || k >= dim) throw std::invalid_argument("basis index out of range");
    Vec v(dim);
    v[k] = 1.0;
    return v;
}

double Vec::norm() const {
    double s = 0.0;
    for (int i = 0; i < dim; ++i) s += std::norm(v[i]);
    return std::sqrt(s);
}

Vec Vec::operator+(const Vec& o) const {
    check_same(dim, o.dim);
    Vec r(dim);
    for (int i = 0; i < dim; ++i) r[i] = v[i] + o.v[i];
    return r;
}

Vec Vec::operator-(const Vec& o) const {
    check_same(dim, o.dim);
    Vec r(dim);
    for (int i = 0; i < dim; ++i) r[i] = v[i] - o.v[i];
    return r;
}

Vec Vec::operator*(cplx s) const {
    Vec r(dim);
    for (int i = 0; i < dim; ++i) r[i] = v[i] * s;
    return r;
}

cplx dot(const Vec& a, const Vec& b) {
    check_same(a.dim, b.dim);
    cplx s = 0.0;
    for (int i = 0; i < a.dim; ++i) s += std::conj(a[i]) * b[i];
    return s;
}

Vec operator*(const Matrix& m, const Vec& x) {
    check_same(m.dim(), x.dim);
    Vec r(x.dim);
    for (int i = 0; i < x.dim; ++i) {
        cplx s = 0.0;
        for (int j = 0; j < x.dim; ++j) s += m(i, j) * x[j];
        r[i] = s;
    }
    return r;
}

Matrix outer(const Vec& a, const Vec& b) {
    check_same(a.dim, b.dim);
    Matrix r(a.dim);
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j) r(i, j) = a[i] * std::conj(b[j]);
    return r;
}

Matrix bracket(const Matrix& a, const Matrix& b, BracketSign sign) {
    return sign == BracketSign::commutator ? a * b - b * a : a * b + b * a;
}

double distance(const Matrix& a, const Matrix& b) { return (a - b).fnorm(); }

void fix_phase(Vec& v) {
    int imax = 0;
    double best = -1.0;
    for (int i = 0; i < v.dim; ++i) {
        const double m = std::abs(v[i]);
        if (m > best) {
            best = m;
            imax = i;
        }
    }
    if (best <= 1e-300) return;
    const cplx phase = v[imax] / best;
    for (int i = 0; i < v.dim; ++i) v[i] *= std::conj(phase);
}

std::vector<EigenPair> hermitian_eigen(const Matrix& a, double herm_tol) {
    const int n = a.dim();
    check_dim(n);
    const double scale = std::max(a.fnorm(), 1.0);
    const double herm_res = (a - a.adjoint()).fnorm();
    if (herm_res > herm_tol * scale)
        throw std::invalid_argument("hermitian_eigen: input not Hermitian, residual " +
                                    fmt_sci(herm_res));

    Matrix b = (a + a.adjoint()) * cplx(0.5, 0.0);
    Matrix v = Matrix::identity(n);
    const double off_tol = 1e-15 * std::max(b.fnorm(), 1e-300);
    bool converged = false;
    for (int sweep = 0; sweep < 60; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += std::norm(b(p, q));
        off = std::sqrt(2.0 * off);
        if (off <= off_tol) {
            converged = true;
            break;
        }
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const cplx bpq = b(p, q);
                const double abs_b = std::abs(bpq);
                if (abs_b <= 1e-300) continue;
                // Strip the phase of b(p,q), then apply the classic
                // two-sided rotation that zeroes the resulting real pair.
                const cplx u = bpq / abs_b;
                const double app = b(p, p).real();
                const double aqq = b(q, q).real();
                const double tau = (aqq - app) / (2.0 * abs_b);
                const double t = (tau >= 0.0)
                                     ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                     : -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                Matrix k = Matrix::identity(n);
                k(p, p) = c;
                k(p, q) = s;
                k(q, p) = -s * std::conj(u);
                k(q, q) = c * std::conj(u);
                b = k.adjoint() * b * k;
                b(p, q) = 0.0;
                b(q, p) = 0.0;
                b = (b + b.adjoint()) * cplx(0.5, 0.0);
                v = v * k;
            }
        }
    }
    if (!converged) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += std::norm(b(p, q));
        if (std::sqrt(2.0 * off) > 1e-10 * scale)
            throw std::runtime_error("hermitian_eigen: rotation sweeps failed to converge");
    }

    std::vector<EigenPair> out;
    for (int i = 0; i < n; ++i) {
        EigenPair e;
        e.value = b(i, i).real();
        e.vector = Vec(n);
        for (int r = 0; r < n; ++r) e.vector[r] = v(r, i);
        out.push_back(std::move(e));
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const EigenPair& x, const EigenPair& y) { return x.value < y.value; });
    for (auto& e : out) fix_phase(e.vector);
    return out;
}

double op_norm(const Matrix& m) {
    auto eig = hermitian_eigen(m.adjoint() * m, 1e-8);
    double mx = 0.0;
    for (const auto& e : eig) mx = std::max(mx, e.value);
    return std::sqrt(std::max(mx, 0.0));
}

Subspace::Subspace(int ambient_dim, std::vector<Vec> orthonormal_basis)
    : ambient_(ambient_dim), basis_(std::move(orthonormal_basis)) {
    check_dim(ambient_dim);
    if (static_cast<int>(basis_.size()) > ambient_)
        throw std::invalid_argument("subspace basis larger than ambient dimension");
    for (const auto& b : basis_) check_same(b.dim, ambient_);
    const double g = gram_residual();
    if (g > 1e-12)
        throw std::invalid_argument("subspace basis not orthonormal, gram residual " +
                                    fmt_sci(g));
}

Subspace Subspace::full(int ambient_dim) {
    check_dim(ambient_dim);
    std::vector<Vec> basis;
    for (int k = 0; k < ambient_dim; ++k) basis.push_back(Vec::basis(ambient_dim, k));
    return Subspace(ambient_dim, std::move(basis));
}

Subspace Subspace::empty(int ambient_dim) {
    check_dim(ambient_dim);
    return Subspace(ambient_dim, {});
}

Subspace Subspace::span(int ambient_dim, const std::vector<Vec>& vectors,
                        double drop_tol) {
    check_dim(ambient_dim);
    std::vector<Vec> basis;
    for (const Vec& v0 : vectors) {
        check_same(v0.dim, ambient_dim);
        const double orig = v0.norm();
        if (orig <= 1e-300) continue;
        Vec w = v0;
        for (int pass = 0; pass < 2; ++pass)
            for (const Vec& b : basis) w = w - b * dot(b, w);
        const double rem = w.norm();
        if (rem <= drop_tol * orig) continue;
        w = w * cplx(1.0 / rem, 0.0);
        basis.push_back(w);
    }
    return Subspace(ambient_dim, std::move(basis));
}

Matrix Subspace::projector() const {
    Matrix p(ambient_);
    for (const Vec& b : basis_) p += outer(b, b);
    return p;
}

double Subspace::gram_residual() const {
    double g = 0.0;
    const int d = dim();
    for (int i = 0; i < d; ++i)
        for (int j = i; j < d; ++j) {
            const cplx gij = dot(basis_[i], basis_[j]);
            const cplx expect = (i == j) ? cplx(1.0, 0.0) : cplx(0.0, 0.0);
            g = std::max(g, std::abs(gij - expect));
        }
    return g;
}

Subspace kernel_basis(const Matrix& a, double tol) {
    const int n = a.dim();
    check_dim(n);
    // A Hermitian input is diagonalized directly: null eigenvalues then carry
    // rounding noise of order machine epsilon relative to the norm.  Anything
    // else goes through the normal matrix, where squaring limits the usable
    // threshold to about the square root of machine epsilon.
    const bool hermitian = distance(a, a.adjoint()) <= 1e-12 * std::max(a.fnorm(), 1.0);
    auto eig = hermitian_eigen(hermitian ? a : a.adjoint() * a, 1e-8);
    double smax = 0.0;
    std::vector<double> sv;
    for (const auto& e : eig) {
        sv.push_back(hermitian ? std::abs(e.value) : std::sqrt(std::max(e.value, 0.0)));
        smax = std::max(smax, sv.back());
    }
    if (smax <= 0.0) return Subspace::full(n);
    const double cut = hermitian ? tol * smax : std::max(tol, 3e-7) * smax;
    std::vector<Vec> keep;
    for (size_t i = 0; i < eig.size(); ++i)
        if (sv[i] <= cut) keep.push_back(eig[i].vector);
    return Subspace(n, std::move(keep));
}

bool subspace_equal(const Subspace& a, const Subspace& b, double tol) {
    if (a.ambient() != b.ambient())
        throw std::invalid_argument("subspace_equal: ambient dimensions differ");
    if (a.dim() != b.dim()) return false;
    return distance(a.projector(), b.projector()) <= tol;
}

JointEigen joint_eigenbasis(const std::vector<Matrix>& ops, double tol) {
    if (ops.empty()) throw std::invalid_argument("joint_eigenbasis: empty operator list");
    const int n = ops[0].dim();
    for (const auto& o : ops) check_same(o.dim(), n);
    for (size_t i = 0; i < ops.size(); ++i)
        for (size_t j = i + 1; j < ops.size(); ++j) {
            const double r = bracket(ops[i], ops[j], BracketSign::commutator).fnorm();
            const double scale = std::max(1.0, ops[i].fnorm() * ops[j].fnorm());
            if (r > tol * scale)
                throw std::invalid_argument("joint_eigenbasis: operators " + std::to_string(i) +
                                            " and " + std::to_string(j) +
                                            " do not commute, residual " + fmt_sci(r));
        }

    struct Cluster {
        std::vector<Vec> vecs;
        std::vector<double> labels;
    };
    std::vector<Cluster> clusters;
    {
        Cluster c0;
        for (int k = 0; k < n; ++k) c0.vecs.push_back(Vec::basis(n, k));
        clusters.push_back(std::move(c0));
    }

    const double cluster_tol = 1e-6;
    for (const Matrix& op : ops) {
        std::vector<Cluster> next;
        for (const Cluster& cl : clusters) {
            const int r = static_cast<int>(cl.vecs.size());
            Matrix m(r);
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < r; ++j) m(i, j) = dot(cl.vecs[i], op * cl.vecs[j]);
            auto eig = hermitian_eigen(m, 1e-6);
            std::vector<Vec> rotated;
            for (int k = 0; k < r; ++k) {
                Vec w(n);
                for (int i = 0; i < r; ++i) w = w + cl.vecs[i] * eig[k].vector[i];
                rotated.push_back(std::move(w));
            }
            int start = 0;
            while (start < r) {
                int stop = start + 1;
                while (stop < r && eig[stop].value - eig[stop - 1].value <= cluster_tol)
                    ++stop;
                Cluster sub;
                double mean = 0.0;
                for (int k = start; k < stop; ++k) mean += eig[k].value;
                mean /= (stop - start);
                for (int k = start; k < stop; ++k) sub.vecs.push_back(rotated[k]);
                sub.labels = cl.labels;
                sub.labels.push_back(mean);
                next.push_back(std::move(sub));
                start = stop;
            }
        }
        clusters = std::move(next);
    }

    struct Entry {
        std::vector<double> labels;
        Vec v;
    };
    std::vector<Entry> entries;
    for (auto& cl : clusters)
        for (auto& v : cl.vecs) entries.push_back({cl.labels, v});
    std::stable_sort(entries.begin(), entries.end(),
                     [](const Entry& a, const Entry& b) { return a.labels < b.labels; });

    std::vector<double> op_norms;
    for (const auto& o : ops) op_norms.push_back(o.fnorm());

    JointEigen out;
    for (auto& e : entries) {
        fix_phase(e.v);
        for (size_t i = 0; i < ops.size(); ++i) {
            const Vec resid = ops[i] * e.v - e.v * cplx(e.labels[i], 0.0);
            if (resid.norm() > 1e-6 * std::max(1.0, op_norms[i]))
                throw std::runtime_error("joint_eigenbasis: refined vector fails eigen residual " +
                                         fmt_sci(resid.norm()));
        }
        out.vectors.push_back(e.v);
        out.values.push_back(e.labels);
    }
    return out;
}

}  // namespace zmdirac
