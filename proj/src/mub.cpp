#include "naqc/mub.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>

#include "naqc/gf.hpp"

namespace naqc {

namespace {

// Phase-exponent tables for the even prime-power dimensions, generated from
// the Galois-ring construction over GR(4,2) with modulus x^2+x+1 and GR(4,3)
// with modulus x^3+2x^2+x+3 (Klappenecker & Roetteler, "Constructions of
// mutually unbiased bases", 2004). Component m of vector a in basis b is
// i^exp[b][a][m] / sqrt(d); the computational basis is prepended at runtime.
constexpr std::uint8_t kGaloisRingExpDim4[4][4][4] = {
    {{0, 0, 0, 0}, {0, 0, 2, 2}, {0, 2, 2, 0}, {0, 2, 0, 2}},
    {{0, 2, 3, 3}, {0, 2, 1, 1}, {0, 0, 1, 3}, {0, 0, 3, 1}},
    {{0, 3, 3, 2}, {0, 3, 1, 0}, {0, 1, 1, 2}, {0, 1, 3, 0}},
    {{0, 3, 2, 3}, {0, 3, 0, 1}, {0, 1, 0, 3}, {0, 1, 2, 1}},
};

constexpr std::uint8_t kGaloisRingExpDim8[8][8][8] = {
    {{0,0,0,0,0,0,0,0},{0,2,0,0,2,0,2,2},{0,0,0,2,0,2,2,2},{0,0,2,0,2,2,2,0},
     {0,2,0,2,2,2,0,0},{0,0,2,2,2,0,0,2},{0,2,2,2,0,0,2,0},{0,2,2,0,0,2,0,2}},
    {{0,3,2,2,1,2,1,1},{0,1,2,2,3,2,3,3},{0,3,2,0,1,0,3,3},{0,3,0,2,3,0,3,1},
     {0,1,2,0,3,0,1,1},{0,3,0,0,3,2,1,3},{0,1,0,0,1,2,3,1},{0,1,0,2,1,0,1,3}},
    {{0,2,2,1,2,1,1,3},{0,0,2,1,0,1,3,1},{0,2,2,3,2,3,3,1},{0,2,0,1,0,3,3,3},
     {0,0,2,3,0,3,1,3},{0,2,0,3,0,1,1,1},{0,0,0,3,2,1,3,3},{0,0,0,1,2,3,1,1}},
    {{0,2,1,2,1,1,3,2},{0,0,1,2,3,1,1,0},{0,2,1,0,1,3,1,0},{0,2,3,2,3,3,1,2},
     {0,0,1,0,3,3,3,2},{0,2,3,0,3,1,3,0},{0,0,3,0,1,1,1,2},{0,0,3,2,1,3,3,0}},
    {{0,1,2,1,1,3,2,2},{0,3,2,1,3,3,0,0},{0,1,2,3,1,1,0,0},{0,1,0,1,3,1,0,2},
     {0,3,2,3,3,1,2,2},{0,1,0,3,3,3,2,0},{0,3,0,3,1,3,0,2},{0,3,0,1,1,1,2,0}},
    {{0,2,1,1,3,2,2,1},{0,0,1,1,1,2,0,3},{0,2,1,3,3,0,0,3},{0,2,3,1,1,0,0,1},
     {0,0,1,3,1,0,2,1},{0,2,3,3,1,2,2,3},{0,0,3,3,3,2,0,1},{0,0,3,1,3,0,2,3}},
    {{0,1,1,3,2,2,1,2},{0,3,1,3,0,2,3,0},{0,1,1,1,2,0,3,0},{0,1,3,3,0,0,3,2},
     {0,3,1,1,0,0,1,2},{0,1,3,1,0,2,1,0},{0,3,3,1,2,2,3,2},{0,3,3,3,2,0,1,0}},
    {{0,1,3,2,2,1,2,1},{0,3,3,2,0,1,0,3},{0,1,3,0,2,3,0,3},{0,1,1,2,0,3,0,1},
     {0,3,3,0,0,3,2,1},{0,1,1,0,0,1,2,3},{0,3,1,0,2,1,0,1},{0,3,1,2,2,3,2,3}},
};

Basis computational_basis(std::size_t d) {
    Basis b;
    b.dim = d;
    b.vectors.assign(d, std::vector<cx>(d, cx{0.0, 0.0}));
    for (std::size_t i = 0; i < d; ++i) b.vectors[i][i] = 1.0;
    return b;
}

cx unit_phase(double angle) { return cx{std::cos(angle), std::sin(angle)}; }

MubFamily mubs_from_exponent_table(std::size_t d, const std::uint8_t* table) {
    static const cx i_pow[4] = {cx{1, 0}, cx{0, 1}, cx{-1, 0}, cx{0, -1}};
    const double scale = 1.0 / std::sqrt(static_cast<double>(d));
    MubFamily fam;
    fam.dim = d;
    fam.bases.push_back(computational_basis(d));
    for (std::size_t b = 0; b < d; ++b) {
        Basis basis;
        basis.dim = d;
        basis.vectors.assign(d, std::vector<cx>(d));
        for (std::size_t a = 0; a < d; ++a) {
            for (std::size_t m = 0; m < d; ++m) {
                basis.vectors[a][m] = scale * i_pow[table[(b * d + a) * d + m]];
            }
        }
        canonicalize_phases(basis);
        fam.bases.push_back(std::move(basis));
    }
    return fam;
}

// Weyl-Heisenberg family over GF(p^k), odd characteristic: component at m
// of vector a in basis b is omega_p^{tr(b m^2 + a m)} / sqrt(q).
MubFamily mubs_odd_prime_power(int p, int k) {
    const FieldSpec spec = FieldSpec::make(p, k);
    const int q = spec.order();
    const double scale = 1.0 / std::sqrt(static_cast<double>(q));
    const double step = 2.0 * std::numbers::pi / p;

    std::vector<FieldElement> elems;
    elems.reserve(q);
    for (int i = 0; i < q; ++i) elems.push_back(gf_from_index(spec, i));

    MubFamily fam;
    fam.dim = static_cast<std::size_t>(q);
    fam.bases.push_back(computational_basis(fam.dim));
    for (int b = 0; b < q; ++b) {
        Basis basis;
        basis.dim = fam.dim;
        basis.vectors.assign(q, std::vector<cx>(q));
        for (int a = 0; a < q; ++a) {
            for (int m = 0; m < q; ++m) {
                const FieldElement mm = gf_mul(elems[m], elems[m]);
                const FieldElement arg =
                    gf_add(gf_mul(elems[b], mm), gf_mul(elems[a], elems[m]));
                basis.vectors[a][m] = scale * unit_phase(step * gf_trace(arg));
            }
        }
        canonicalize_phases(basis);
        fam.bases.push_back(std::move(basis));
    }
    return fam;
}

}  // namespace

double Basis::orthonormality_defect() const {
    double worst = 0.0;
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        for (std::size_t j = i; j < vectors.size(); ++j) {
            cx ip{0.0, 0.0};
            for (std::size_t m = 0; m < dim; ++m) {
                ip += std::conj(vectors[i][m]) * vectors[j][m];
            }
            const cx target = (i == j) ? cx{1.0, 0.0} : cx{0.0, 0.0};
            worst = std::max(worst, std::abs(ip - target));
        }
    }
    return worst;
}

ComplexMatrix Basis::projector(std::size_t a) const { return outer(vectors.at(a)); }

ComplexMatrix Basis::as_unitary() const {
    ComplexMatrix u(dim, dim);
    for (std::size_t col = 0; col < dim; ++col) {
        for (std::size_t row = 0; row < dim; ++row) u(row, col) = vectors[col][row];
    }
    return u;
}

MubFamily rotated_qubit_mubs(double theta, double phi) {
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    const cx eip = unit_phase(phi);
    const std::vector<cx> zero{cx{c, 0.0}, eip * s};
    const std::vector<cx> one{cx{s, 0.0}, eip * (-c)};

    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    const cx iu{0.0, 1.0};
    MubFamily fam;
    fam.dim = 2;
    fam.bases.resize(3);
    for (int k = 0; k < 3; ++k) {
        fam.bases[k].dim = 2;
        fam.bases[k].vectors.assign(2, std::vector<cx>(2));
    }
    for (std::size_t m = 0; m < 2; ++m) {
        fam.bases[0].vectors[0][m] = inv_sqrt2 * (zero[m] + one[m]);        // x+
        fam.bases[0].vectors[1][m] = inv_sqrt2 * (zero[m] - one[m]);        // x-
        fam.bases[1].vectors[0][m] = inv_sqrt2 * (zero[m] + iu * one[m]);   // y+
        fam.bases[1].vectors[1][m] = inv_sqrt2 * (zero[m] - iu * one[m]);   // y-
        fam.bases[2].vectors[0][m] = zero[m];
        fam.bases[2].vectors[1][m] = one[m];
    }
    return fam;
}

MubFamily mubs_prime_power(std::size_t d) {
    switch (d) {
        case 2: {
            // canonical Pauli eigenbases reordered to (z, x, y): computational first
            MubFamily rot = rotated_qubit_mubs(0.0, 0.0);
            MubFamily fam;
            fam.dim = 2;
            fam.bases.push_back(computational_basis(2));
            fam.bases.push_back(rot.bases[0]);
            fam.bases.push_back(rot.bases[1]);
            canonicalize_phases(fam);
            return fam;
        }
        case 3: return mubs_odd_prime_power(3, 1);
        case 4: return mubs_from_exponent_table(4, &kGaloisRingExpDim4[0][0][0]);
        case 5: return mubs_odd_prime_power(5, 1);
        case 7: return mubs_odd_prime_power(7, 1);
        case 8: return mubs_from_exponent_table(8, &kGaloisRingExpDim8[0][0][0]);
        case 9: return mubs_odd_prime_power(3, 2);
        case 25: return mubs_odd_prime_power(5, 2);
        default:
            throw std::invalid_argument(
                "mubs_prime_power: unsupported dimension " + std::to_string(d) +
                " (supported: 2, 3, 4, 5, 7, 8, 9, 25)");
    }
}

UnbiasednessReport verify_unbiased(const MubFamily& fam, double tol) {
    const double target = 1.0 / static_cast<double>(fam.dim);
    UnbiasednessReport rep;
    for (std::size_t b1 = 0; b1 < fam.bases.size(); ++b1) {
        for (std::size_t b2 = b1 + 1; b2 < fam.bases.size(); ++b2) {
            for (const auto& u : fam.bases[b1].vectors) {
                for (const auto& v : fam.bases[b2].vectors) {
                    cx ip{0.0, 0.0};
                    for (std::size_t m = 0; m < fam.dim; ++m) {
                        ip += std::conj(u[m]) * v[m];
                    }
                    rep.max_deviation =
                        std::max(rep.max_deviation, std::abs(std::norm(ip) - target));
                }
            }
        }
    }
    rep.ok = rep.max_deviation <= tol;
    return rep;
}

void canonicalize_phases(Basis& basis) {
    for (auto& v : basis.vectors) {
        for (const cx& amp : v) {
            const double mag = std::abs(amp);
            if (mag > 1e-12) {
                const cx rot = std::conj(amp) / mag;
                for (cx& a : v) a *= rot;
                break;
            }
        }
    }
}

void canonicalize_phases(MubFamily& fam) {
    for (Basis& b : fam.bases) canonicalize_phases(b);
}

}  // namespace naqc
