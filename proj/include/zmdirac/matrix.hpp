#pragma once

#include <array>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace zmdirac {

using cplx = std::complex<double>;

// Dense square complex matrix, dimension 1..4, value type.  Storage is a
// fixed 4x4 row-major block so instances are cheap to copy and never touch
// the heap.
class Matrix {
public:
    static constexpr int kMaxDim = 4;

    Matrix() = default;
    explicit Matrix(int dim);

    static Matrix identity(int dim);
    static Matrix zero(int dim);

    int dim() const { return dim_; }

    cplx& operator()(int i, int j) { return e_[i * kMaxDim + j]; }
    const cplx& operator()(int i, int j) const { return e_[i * kMaxDim + j]; }

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator-() const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator*(cplx s) const;
    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);

    Matrix adjoint() const;
    Matrix transpose() const;
    Matrix conjugate() const;

    cplx trace() const;
    cplx det() const;
    double fnorm() const;    // Frobenius norm
    double max_abs() const;  // largest entry magnitude

private:
    int dim_ = 0;
    std::array<cplx, kMaxDim * kMaxDim> e_{};
};

Matrix operator*(cplx s, const Matrix& m);

// Column vector companion to Matrix, same fixed storage.
struct Vec {
    int dim = 0;
    std::array<cplx, Matrix::kMaxDim> v{};

    Vec() = default;
    explicit Vec(int d) : dim(d) {}
    static Vec basis(int dim, int k);

    cplx& operator[](int i) { return v[i]; }
    const cplx& operator[](int i) const { return v[i]; }

    double norm() const;
    Vec operator+(const Vec& o) const;
    Vec operator-(const Vec& o) const;
    Vec operator*(cplx s) const;
};

// Inner product, conjugate-linear in the first argument.
cplx dot(const Vec& a, const Vec& b);

Vec operator*(const Matrix& m, const Vec& x);

// Rank-one product a b-adjoint.
Matrix outer(const Vec& a, const Vec& b);

enum class BracketSign { commutator, anticommutator };

Matrix bracket(const Matrix& a, const Matrix& b, BracketSign sign);

// Frobenius distance between two matrices.
double distance(const Matrix& a, const Matrix& b);

// Spectral (largest-singular-value) norm.
double op_norm(const Matrix& m);

// Rotate the largest-magnitude entry (first index on ties) to the positive
// real axis and normalize; fixes the overall phase of an eigenvector.
void fix_phase(Vec& v);

struct EigenPair {
    double value = 0.0;
    Vec vector;
};

// Full eigensystem of a Hermitian matrix by cyclic complex Jacobi sweeps.
// Deterministic: fixed pivot order, fixed sweep count cap, eigenvalues
// sorted ascending with stable order, eigenvector phases fixed.  Throws
// std::invalid_argument (naming the Hermiticity residual) if the input is
// not Hermitian to within `herm_tol` relative to its norm.
std::vector<EigenPair> hermitian_eigen(const Matrix& a, double herm_tol = 1e-10);

// Orthonormal-basis view of a subspace of C^dim.  Construction validates
// orthonormality of the supplied columns and throws if it fails.
class Subspace {
public:
    Subspace(int ambient_dim, std::vector<Vec> orthonormal_basis);

    static Subspace full(int ambient_dim);
    static Subspace empty(int ambient_dim);
    // Orthonormalizes the given spanning vectors (modified Gram-Schmidt,
    // dropping near-dependent ones) before constructing.
    static Subspace span(int ambient_dim, const std::vector<Vec>& vectors,
                         double drop_tol = 1e-10);

    int ambient() const { return ambient_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<Vec>& basis() const { return basis_; }

    // Orthogonal projector onto the subspace.
    Matrix projector() const;

    // Largest deviation of the basis Gram matrix from the identity.
    double gram_residual() const;

private:
    int ambient_;
    std::vector<Vec> basis_;
};

// Orthonormal basis of the (numerical) kernel of `a`: singular vectors of
// a with singular value at most `tol` times the largest singular value.
// The zero matrix yields the full space.
Subspace kernel_basis(const Matrix& a, double tol = 1e-10);

// True when the subspaces have equal dimension and their orthogonal
// projectors agree to Frobenius distance `tol`.  Ambient mismatch throws.
bool subspace_equal(const Subspace& a, const Subspace& b, double tol = 1e-8);

struct JointEigen {
    std::vector<Vec> vectors;
    // values[k][i] = eigenvalue of operator i on vectors[k].
    std::vector<std::vector<double>> values;
};

// Simultaneous eigenbasis of a family of commuting Hermitian operators.
// Throws std::invalid_argument if some pair fails to commute to within
// `tol` (relative to norms) or a refined vector fails its eigen residual.
JointEigen joint_eigenbasis(const std::vector<Matrix>& ops, double tol = 1e-8);

}  // namespace zmdirac
