// Dense complex matrix kernel: construction, algebra, tensor structure,
// Hermitian spectral routines and qubit Bloch-vector conversions.
// Everything here is value-semantic and immutable after construction.
#ifndef NAQC_QMATRIX_HPP
#define NAQC_QMATRIX_HPP

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

namespace naqc {

using cx = std::complex<double>;

// Global default tolerance for Hermiticity / trace / positivity validation.
// Settable once at startup (e.g. from a config file); defaults to 1e-9.
double& validation_tolerance();

class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);
    ComplexMatrix(std::initializer_list<std::initializer_list<cx>> init);

    static ComplexMatrix identity(std::size_t d);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    cx& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const cx& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    ComplexMatrix operator+(const ComplexMatrix& other) const;
    ComplexMatrix operator-(const ComplexMatrix& other) const;
    ComplexMatrix operator*(const ComplexMatrix& other) const;  // matrix product
    ComplexMatrix operator*(cx scalar) const;
    friend ComplexMatrix operator*(cx scalar, const ComplexMatrix& m) { return m * scalar; }

    ComplexMatrix dagger() const;
    cx trace() const;
    double frobenius_norm() const;

    // max_{r,c} |this - other| entrywise; dimensions must match
    double max_abs_diff(const ComplexMatrix& other) const;
    // max entrywise |M - M^dagger|
    double hermiticity_defect() const;
    bool is_hermitian(double tol) const { return hermiticity_defect() <= tol; }
    bool is_square() const { return rows_ == cols_ && rows_ > 0; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cx> data_;
};

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Outer product |psi><psi| from a state vector (not required normalized;
// caller normalizes if a density matrix is wanted).
ComplexMatrix outer(const std::vector<cx>& psi);

struct EigResult {
    std::vector<double> values;  // descending
    ComplexMatrix vectors;       // orthonormal columns, matching order
};

// Cyclic Jacobi diagonalization of a complex Hermitian matrix.
// Throws std::invalid_argument if the input fails the Hermiticity check.
EigResult eig_hermitian(const ComplexMatrix& m, double herm_tol = 1e-9);

struct BlochVector {
    double r1 = 0.0;
    double r2 = 0.0;
    double r3 = 0.0;
    double norm() const;
};

// Hermitian PSD unit-trace matrix, optionally tagged with bipartite
// subsystem dimensions (d_A, d_B). Validates on construction.
class DensityMatrix {
public:
    explicit DensityMatrix(ComplexMatrix m, std::optional<double> tol = std::nullopt);
    DensityMatrix(ComplexMatrix m, std::size_t dim_a, std::size_t dim_b,
                  std::optional<double> tol = std::nullopt);

    const ComplexMatrix& mat() const { return mat_; }
    std::size_t dim() const { return mat_.rows(); }
    bool has_dims() const { return dims_.has_value(); }
    std::pair<std::size_t, std::size_t> dims() const;

    // same matrix re-tagged with subsystem dimensions
    DensityMatrix with_dims(std::size_t dim_a, std::size_t dim_b) const;

    double purity() const;  // Tr(rho^2)

private:
    ComplexMatrix mat_;
    std::optional<std::pair<std::size_t, std::size_t>> dims_;
};

enum class Subsystem { A, B };

// Reduced state of the kept subsystem; requires declared dims.
DensityMatrix partial_trace(const DensityMatrix& rho, Subsystem keep);

// von Neumann entropy in bits, -sum lambda log2 lambda with 0 log 0 := 0.
double vn_entropy(const DensityMatrix& rho);

// Binary entropy H(x) = -x log2 x - (1-x) log2(1-x) for x in [0,1].
double binary_entropy(double x);

DensityMatrix bloch_to_state(const BlochVector& r);
BlochVector state_to_bloch(const DensityMatrix& rho);

// Pauli matrix sigma_k, k in {1,2,3}
const ComplexMatrix& pauli(int k);

// Werner family (1-p)/4 I_4 + p |psi-><psi-| with the Bell singlet,
// tagged as a 2x2 bipartite state.
DensityMatrix werner_state(double p_w);

// |0><0| (x) |+><+| tagged bipartite; the canonical unsteerable product state.
DensityMatrix product_zero_plus_state();

}  // namespace naqc

#endif  // NAQC_QMATRIX_HPP
