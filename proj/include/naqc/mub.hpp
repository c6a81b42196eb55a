// Mutually unbiased bases: rotated qubit triples and full d+1 families in
// prime-power dimensions, plus the unbiasedness verifier.
#ifndef NAQC_MUB_HPP
#define NAQC_MUB_HPP

#include <cstddef>
#include <vector>

#include "naqc/qmatrix.hpp"

namespace naqc {

struct Basis {
    std::size_t dim = 0;
    std::vector<std::vector<cx>> vectors;  // dim vectors, each of length dim

    // max |<v_i|v_j> - delta_ij|
    double orthonormality_defect() const;
    ComplexMatrix projector(std::size_t a) const;  // |v_a><v_a|
    ComplexMatrix as_unitary() const;              // columns are the vectors
};

struct MubFamily {
    std::size_t dim = 0;
    std::vector<Basis> bases;
};

// Eigenbases of the rotated Pauli triple, ordered (x, y, z). The frame is
// set by |0(theta,phi)> = cos(theta/2)|0> + e^{i phi} sin(theta/2)|1> and
// |1(theta,phi)> = sin(theta/2)|0> - e^{i phi} cos(theta/2)|1>; the x and y
// bases are the usual +/- and +/-i superpositions of the pair. Vectors are
// kept in this analytic form (smooth in theta, phi); serialization applies
// canonicalize_phases for reproducible output.
MubFamily rotated_qubit_mubs(double theta, double phi);

// Full d+1 family for d in {2, 3, 4, 5, 7, 8, 9, 25}; first basis is
// computational, the rest follow construction order. Odd prime powers use
// the Weyl-Heisenberg phases omega_p^tr(b m^2 + a m) over GF(p^k); d = 4, 8
// come from fixed Galois-ring phase tables (Klappenecker & Roetteler 2004).
MubFamily mubs_prime_power(std::size_t d);

struct UnbiasednessReport {
    double max_deviation = 0.0;  // max | |<u|v>|^2 - 1/d | over cross-basis pairs
    bool ok = false;
};

UnbiasednessReport verify_unbiased(const MubFamily& fam, double tol = 1e-9);

// Multiply each vector by a global phase making its first nonzero
// amplitude real nonnegative.
void canonicalize_phases(Basis& basis);
void canonicalize_phases(MubFamily& fam);

}  // namespace naqc

#endif  // NAQC_MUB_HPP
