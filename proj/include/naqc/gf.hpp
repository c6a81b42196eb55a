// Arithmetic in small finite fields GF(p^k) of odd characteristic, as needed
// by the prime-power MUB construction. Elements are polynomials over GF(p)
// reduced by an irreducible modulus.
#ifndef NAQC_GF_HPP
#define NAQC_GF_HPP

#include <cstddef>
#include <vector>

namespace naqc {

struct FieldSpec {
    int p = 3;                    // odd prime characteristic
    int k = 1;                    // extension degree, 1..3
    std::vector<int> modulus;     // k+1 coefficients over GF(p), low to high, monic

    // Validates primality, degree and irreducibility (root check, k <= 3).
    FieldSpec(int p, int k, std::vector<int> modulus);

    // Default modulus: x for k = 1, x^2+1 for GF(9), x^2+2 for GF(25).
    static FieldSpec make(int p, int k);

    int order() const;  // p^k
    bool operator==(const FieldSpec& other) const = default;
};

struct FieldElement {
    const FieldSpec* spec = nullptr;
    std::vector<int> coeffs;  // k entries in [0, p)
};

// Element from coefficients (reduced mod p) or from its index in [0, p^k),
// base-p digits low to high.
FieldElement gf_element(const FieldSpec& spec, std::vector<int> coeffs);
FieldElement gf_from_index(const FieldSpec& spec, int index);
int gf_index(const FieldElement& a);

FieldElement gf_add(const FieldElement& a, const FieldElement& b);
FieldElement gf_sub(const FieldElement& a, const FieldElement& b);
FieldElement gf_mul(const FieldElement& a, const FieldElement& b);
FieldElement gf_pow(const FieldElement& a, long long e);
FieldElement gf_inverse(const FieldElement& a);  // throws on zero
bool gf_is_zero(const FieldElement& a);

// Field trace tr(a) = sum_{m=0}^{k-1} a^{p^m}, an element of the prime
// subfield returned as an integer in [0, p).
int gf_trace(const FieldElement& a);

}  // namespace naqc

#endif  // NAQC_GF_HPP
