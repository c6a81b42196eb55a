#include "naqc/qmatrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace naqc {

double& validation_tolerance() {
    static double tol = 1e-9;
    return tol;
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, cx{0.0, 0.0}) {
    if (rows == 0 || cols == 0) {
        throw std::invalid_argument("ComplexMatrix: dimensions must be >= 1");
    }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<cx>> init) {
    rows_ = init.size();
    if (rows_ == 0) throw std::invalid_argument("ComplexMatrix: empty initializer");
    cols_ = init.begin()->size();
    if (cols_ == 0) throw std::invalid_argument("ComplexMatrix: empty row");
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
        if (row.size() != cols_) {
            throw std::invalid_argument("ComplexMatrix: ragged initializer");
        }
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t d) {
    ComplexMatrix m(d, d);
    for (std::size_t i = 0; i < d; ++i) m(i, i) = 1.0;
    return m;
}

namespace {
void check_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument(std::string("ComplexMatrix: shape mismatch in ") + op);
    }
}
}  // namespace

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix& other) const {
    check_same_shape(*this, other, "+");
    ComplexMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + other.data_[i];
    return out;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& other) const {
    check_same_shape(*this, other, "-");
    ComplexMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - other.data_[i];
    return out;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& other) const {
    if (cols_ != other.rows_) {
        throw std::invalid_argument("ComplexMatrix: inner dimension mismatch in *");
    }
    ComplexMatrix out(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const cx aik = (*this)(i, k);
            if (aik == cx{0.0, 0.0}) continue;
            for (std::size_t j = 0; j < other.cols_; ++j) {
                out(i, j) += aik * other(k, j);
            }
        }
    }
    return out;
}

ComplexMatrix ComplexMatrix::operator*(cx scalar) const {
    ComplexMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] * scalar;
    return out;
}

ComplexMatrix ComplexMatrix::dagger() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            out(c, r) = std::conj((*this)(r, c));
        }
    }
    return out;
}

cx ComplexMatrix::trace() const {
    if (!is_square()) throw std::invalid_argument("ComplexMatrix: trace of non-square matrix");
    cx t{0.0, 0.0};
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const cx& v : data_) s += std::norm(v);
    return std::sqrt(s);
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& other) const {
    check_same_shape(*this, other, "max_abs_diff");
    double m = 0.0;
    for (std::size_t i = 0; i < data_.size(); ++i) {
        m = std::max(m, std::abs(data_[i] - other.data_[i]));
    }
    return m;
}

double ComplexMatrix::hermiticity_defect() const {
    if (!is_square()) return std::numeric_limits<double>::infinity();
    double m = 0.0;
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = r; c < cols_; ++c) {
            m = std::max(m, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
        }
    }
    return m;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const cx aij = a(i, j);
            if (aij == cx{0.0, 0.0}) continue;
            for (std::size_t k = 0; k < b.rows(); ++k) {
                for (std::size_t l = 0; l < b.cols(); ++l) {
                    out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
                }
            }
        }
    }
    return out;
}

ComplexMatrix outer(const std::vector<cx>& psi) {
    if (psi.empty()) throw std::invalid_argument("outer: empty vector");
    ComplexMatrix out(psi.size(), psi.size());
    for (std::size_t r = 0; r < psi.size(); ++r) {
        for (std::size_t c = 0; c < psi.size(); ++c) {
            out(r, c) = psi[r] * std::conj(psi[c]);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Hermitian eigensolve: cyclic Jacobi with complex rotations.
// ---------------------------------------------------------------------------

EigResult eig_hermitian(const ComplexMatrix& m, double herm_tol) {
    if (!m.is_square()) throw std::invalid_argument("eig_hermitian: matrix not square");
    if (!m.is_hermitian(herm_tol)) {
        throw std::invalid_argument("eig_hermitian: matrix not Hermitian within tolerance");
    }
    const std::size_t n = m.rows();

    // work on the exactly-Hermitian part
    ComplexMatrix a(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            a(r, c) = 0.5 * (m(r, c) + std::conj(m(c, r)));
        }
    }
    ComplexMatrix v = ComplexMatrix::identity(n);

    const double scale = std::max(1.0, a.frobenius_norm());
    constexpr int kMaxSweeps = 64;
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) off += 2.0 * std::norm(a(p, q));
        }
        if (std::sqrt(off) <= 1e-12 * scale) break;

        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const cx apq = a(p, q);
                const double mag = std::abs(apq);
                if (mag <= 1e-300) continue;
                const cx phase = apq / mag;  // e^{i beta}
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double tau = (aqq - app) / (2.0 * mag);
                // smaller-magnitude root of t^2 - 2 tau t - 1 = 0
                double t;
                if (tau >= 0.0) {
                    t = -1.0 / (tau + std::sqrt(tau * tau + 1.0));
                } else {
                    t = 1.0 / (-tau + std::sqrt(tau * tau + 1.0));
                }
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                // unitary J = I except J(p,p)=c, J(p,q)=-s*phase,
                // J(q,p)=s*conj(phase), J(q,q)=c; apply a <- J^dag a J, v <- v J
                for (std::size_t r = 0; r < n; ++r) {
                    const cx arp = a(r, p);
                    const cx arq = a(r, q);
                    a(r, p) = arp * c + arq * s * std::conj(phase);
                    a(r, q) = -arp * s * phase + arq * c;
                }
                for (std::size_t col = 0; col < n; ++col) {
                    const cx apc = a(p, col);
                    const cx aqc = a(q, col);
                    a(p, col) = apc * c + aqc * s * phase;
                    a(q, col) = -apc * s * std::conj(phase) + aqc * c;
                }
                for (std::size_t r = 0; r < n; ++r) {
                    const cx vrp = v(r, p);
                    const cx vrq = v(r, q);
                    v(r, p) = vrp * c + vrq * s * std::conj(phase);
                    v(r, q) = -vrp * s * phase + vrq * c;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::vector<double> diag(n);
    for (std::size_t i = 0; i < n; ++i) diag[i] = a(i, i).real();
    std::sort(order.begin(), order.end(),
              [&](std::size_t x, std::size_t y) { return diag[x] > diag[y]; });

    EigResult res;
    res.values.resize(n);
    res.vectors = ComplexMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        res.values[i] = diag[order[i]];
        for (std::size_t r = 0; r < n; ++r) res.vectors(r, i) = v(r, order[i]);
    }
    return res;
}

// ---------------------------------------------------------------------------
// Density matrices
// ---------------------------------------------------------------------------

namespace {
void validate_density(const ComplexMatrix& m, double tol) {
    if (!m.is_square()) throw std::invalid_argument("DensityMatrix: matrix not square");
    const double herm = m.hermiticity_defect();
    if (herm > tol) {
        throw std::invalid_argument("DensityMatrix: not Hermitian (defect " +
                                    std::to_string(herm) + ")");
    }
    const cx tr = m.trace();
    if (std::abs(tr - cx{1.0, 0.0}) > tol) {
        throw std::invalid_argument("DensityMatrix: trace != 1 (got " +
                                    std::to_string(tr.real()) + ")");
    }
    const EigResult eig = eig_hermitian(m, std::max(tol, 1e-9));
    if (eig.values.back() < -tol) {
        throw std::invalid_argument("DensityMatrix: negative eigenvalue " +
                                    std::to_string(eig.values.back()));
    }
}
}  // namespace

DensityMatrix::DensityMatrix(ComplexMatrix m, std::optional<double> tol)
    : mat_(std::move(m)) {
    validate_density(mat_, tol.value_or(validation_tolerance()));
}

DensityMatrix::DensityMatrix(ComplexMatrix m, std::size_t dim_a, std::size_t dim_b,
                             std::optional<double> tol)
    : mat_(std::move(m)), dims_(std::make_pair(dim_a, dim_b)) {
    if (dim_a * dim_b != mat_.rows()) {
        throw std::invalid_argument("DensityMatrix: subsystem dims do not factor dimension");
    }
    validate_density(mat_, tol.value_or(validation_tolerance()));
}

std::pair<std::size_t, std::size_t> DensityMatrix::dims() const {
    if (!dims_) throw std::invalid_argument("DensityMatrix: no subsystem dims declared");
    return *dims_;
}

DensityMatrix DensityMatrix::with_dims(std::size_t dim_a, std::size_t dim_b) const {
    return DensityMatrix(mat_, dim_a, dim_b);
}

double DensityMatrix::purity() const {
    // Tr(rho^2) = sum |rho_{rc}|^2 for Hermitian rho
    double s = 0.0;
    for (std::size_t r = 0; r < mat_.rows(); ++r) {
        for (std::size_t c = 0; c < mat_.cols(); ++c) s += std::norm(mat_(r, c));
    }
    return s;
}

DensityMatrix partial_trace(const DensityMatrix& rho, Subsystem keep) {
    const auto [da, db] = rho.dims();
    const ComplexMatrix& m = rho.mat();
    if (keep == Subsystem::A) {
        ComplexMatrix out(da, da);
        for (std::size_t i = 0; i < da; ++i) {
            for (std::size_t j = 0; j < da; ++j) {
                cx s{0.0, 0.0};
                for (std::size_t b = 0; b < db; ++b) s += m(i * db + b, j * db + b);
                out(i, j) = s;
            }
        }
        return DensityMatrix(std::move(out));
    }
    ComplexMatrix out(db, db);
    for (std::size_t i = 0; i < db; ++i) {
        for (std::size_t j = 0; j < db; ++j) {
            cx s{0.0, 0.0};
            for (std::size_t a = 0; a < da; ++a) s += m(a * db + i, a * db + j);
            out(i, j) = s;
        }
    }
    return DensityMatrix(std::move(out));
}

double binary_entropy(double x) {
    if (x < 0.0 || x > 1.0) throw std::invalid_argument("binary_entropy: x outside [0,1]");
    double h = 0.0;
    if (x > 0.0) h -= x * std::log2(x);
    if (x < 1.0) h -= (1.0 - x) * std::log2(1.0 - x);
    return h;
}

double vn_entropy(const DensityMatrix& rho) {
    const EigResult eig = eig_hermitian(rho.mat(), 1e-8);
    double h = 0.0;
    for (double lam : eig.values) {
        if (lam > 0.0) h -= lam * std::log2(lam);
    }
    return h;
}

double BlochVector::norm() const { return std::sqrt(r1 * r1 + r2 * r2 + r3 * r3); }

DensityMatrix bloch_to_state(const BlochVector& r) {
    if (r.norm() > 1.0 + 1e-9) {
        throw std::invalid_argument("bloch_to_state: |r| > 1");
    }
    ComplexMatrix m(2, 2);
    m(0, 0) = cx{0.5 * (1.0 + r.r3), 0.0};
    m(1, 1) = cx{0.5 * (1.0 - r.r3), 0.0};
    m(0, 1) = cx{0.5 * r.r1, -0.5 * r.r2};
    m(1, 0) = cx{0.5 * r.r1, 0.5 * r.r2};
    return DensityMatrix(std::move(m));
}

BlochVector state_to_bloch(const DensityMatrix& rho) {
    if (rho.dim() != 2) throw std::invalid_argument("state_to_bloch: not a qubit state");
    const ComplexMatrix& m = rho.mat();
    BlochVector r;
    r.r1 = 2.0 * m(0, 1).real();
    r.r2 = -2.0 * m(0, 1).imag();
    r.r3 = (m(0, 0) - m(1, 1)).real();
    return r;
}

const ComplexMatrix& pauli(int k) {
    static const ComplexMatrix s1{{cx{0, 0}, cx{1, 0}}, {cx{1, 0}, cx{0, 0}}};
    static const ComplexMatrix s2{{cx{0, 0}, cx{0, -1}}, {cx{0, 1}, cx{0, 0}}};
    static const ComplexMatrix s3{{cx{1, 0}, cx{0, 0}}, {cx{0, 0}, cx{-1, 0}}};
    switch (k) {
        case 1: return s1;
        case 2: return s2;
        case 3: return s3;
        default: throw std::invalid_argument("pauli: index must be 1, 2 or 3");
    }
}

DensityMatrix werner_state(double p_w) {
    if (p_w < 0.0 || p_w > 1.0) throw std::invalid_argument("werner_state: p_w outside [0,1]");
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    const std::vector<cx> singlet{cx{0, 0}, cx{inv_sqrt2, 0}, cx{-inv_sqrt2, 0}, cx{0, 0}};
    ComplexMatrix m = outer(singlet) * cx{p_w, 0.0};
    for (std::size_t i = 0; i < 4; ++i) m(i, i) += (1.0 - p_w) / 4.0;
    return DensityMatrix(std::move(m), 2, 2);
}

DensityMatrix product_zero_plus_state() {
    const ComplexMatrix zero{{cx{1, 0}, cx{0, 0}}, {cx{0, 0}, cx{0, 0}}};
    const ComplexMatrix plus{{cx{0.5, 0}, cx{0.5, 0}}, {cx{0.5, 0}, cx{0.5, 0}}};
    return DensityMatrix(kron(zero, plus), 2, 2);
}

}  // namespace naqc
