#include "naqc/gf.hpp"

#include <stdexcept>
#include <string>

namespace naqc {

namespace {

bool is_odd_prime(int p) {
    if (p < 3 || p % 2 == 0) return false;
    for (int d = 3; d * d <= p; d += 2) {
        if (p % d == 0) return false;
    }
    return true;
}

int mod_p(long long v, int p) {
    long long r = v % p;
    if (r < 0) r += p;
    return static_cast<int>(r);
}

// Evaluate the modulus polynomial at x in GF(p).
int eval_poly(const std::vector<int>& poly, int x, int p) {
    long long acc = 0;
    for (std::size_t i = poly.size(); i-- > 0;) {
        acc = mod_p(acc * x + poly[i], p);
    }
    return static_cast<int>(acc);
}

// Schoolbook multiply then reduce by the monic modulus.
std::vector<int> poly_mul_mod(const std::vector<int>& a, const std::vector<int>& b,
                              const std::vector<int>& modulus, int p) {
    const int k = static_cast<int>(modulus.size()) - 1;
    std::vector<long long> prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            prod[i + j] += static_cast<long long>(a[i]) * b[j];
        }
    }
    // x^k == -(modulus[0..k-1]) since the modulus is monic
    for (std::size_t deg = prod.size(); deg-- > static_cast<std::size_t>(k);) {
        const long long top = mod_p(prod[deg], p);
        prod[deg] = 0;
        for (int i = 0; i < k; ++i) {
            prod[deg - k + i] = mod_p(prod[deg - k + i] - top * modulus[i], p);
        }
    }
    std::vector<int> out(k, 0);
    for (int i = 0; i < k; ++i) out[i] = mod_p(prod[i], p);
    return out;
}

void check_same_spec(const FieldElement& a, const FieldElement& b) {
    if (a.spec == nullptr || b.spec == nullptr || !(*a.spec == *b.spec)) {
        throw std::invalid_argument("gf: operands belong to different fields");
    }
}

}  // namespace

FieldSpec::FieldSpec(int p_, int k_, std::vector<int> modulus_)
    : p(p_), k(k_), modulus(std::move(modulus_)) {
    if (!is_odd_prime(p)) {
        throw std::invalid_argument("FieldSpec: characteristic must be an odd prime >= 3");
    }
    if (k < 1 || k > 3) {
        throw std::invalid_argument("FieldSpec: extension degree must be 1..3");
    }
    if (modulus.size() != static_cast<std::size_t>(k) + 1) {
        throw std::invalid_argument("FieldSpec: modulus must have degree k");
    }
    for (int& c : modulus) c = mod_p(c, p);
    if (modulus.back() != 1) {
        throw std::invalid_argument("FieldSpec: modulus must be monic");
    }
    // degree <= 3 is irreducible over GF(p) iff it has no root there
    if (k >= 2) {
        for (int x = 0; x < p; ++x) {
            if (eval_poly(modulus, x, p) == 0) {
                throw std::invalid_argument("FieldSpec: modulus has root " +
                                            std::to_string(x) + ", not irreducible");
            }
        }
    }
}

FieldSpec FieldSpec::make(int p, int k) {
    if (k == 1) return FieldSpec(p, 1, {0, 1});
    if (p == 3 && k == 2) return FieldSpec(3, 2, {1, 0, 1});  // x^2 + 1
    if (p == 5 && k == 2) return FieldSpec(5, 2, {2, 0, 1});  // x^2 + 2
    throw std::invalid_argument("FieldSpec::make: no default modulus for GF(" +
                                std::to_string(p) + "^" + std::to_string(k) + ")");
}

int FieldSpec::order() const {
    int q = 1;
    for (int i = 0; i < k; ++i) q *= p;
    return q;
}

FieldElement gf_element(const FieldSpec& spec, std::vector<int> coeffs) {
    if (coeffs.size() != static_cast<std::size_t>(spec.k)) {
        throw std::invalid_argument("gf_element: coefficient count != k");
    }
    for (int& c : coeffs) c = mod_p(c, spec.p);
    return FieldElement{&spec, std::move(coeffs)};
}

FieldElement gf_from_index(const FieldSpec& spec, int index) {
    if (index < 0 || index >= spec.order()) {
        throw std::invalid_argument("gf_from_index: index outside [0, p^k)");
    }
    std::vector<int> coeffs(spec.k);
    for (int i = 0; i < spec.k; ++i) {
        coeffs[i] = index % spec.p;
        index /= spec.p;
    }
    return FieldElement{&spec, std::move(coeffs)};
}

int gf_index(const FieldElement& a) {
    int idx = 0;
    for (int i = a.spec->k; i-- > 0;) idx = idx * a.spec->p + a.coeffs[i];
    return idx;
}

FieldElement gf_add(const FieldElement& a, const FieldElement& b) {
    check_same_spec(a, b);
    std::vector<int> out(a.coeffs.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = mod_p(a.coeffs[i] + b.coeffs[i], a.spec->p);
    }
    return FieldElement{a.spec, std::move(out)};
}

FieldElement gf_sub(const FieldElement& a, const FieldElement& b) {
    check_same_spec(a, b);
    std::vector<int> out(a.coeffs.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = mod_p(a.coeffs[i] - b.coeffs[i], a.spec->p);
    }
    return FieldElement{a.spec, std::move(out)};
}

FieldElement gf_mul(const FieldElement& a, const FieldElement& b) {
    check_same_spec(a, b);
    return FieldElement{a.spec, poly_mul_mod(a.coeffs, b.coeffs, a.spec->modulus, a.spec->p)};
}

bool gf_is_zero(const FieldElement& a) {
    for (int c : a.coeffs) {
        if (c != 0) return false;
    }
    return true;
}

FieldElement gf_pow(const FieldElement& a, long long e) {
    if (e < 0) throw std::invalid_argument("gf_pow: negative exponent");
    FieldElement base = a;
    std::vector<int> one(a.spec->k, 0);
    one[0] = 1;
    FieldElement acc{a.spec, std::move(one)};
    while (e > 0) {
        if (e & 1) acc = gf_mul(acc, base);
        base = gf_mul(base, base);
        e >>= 1;
    }
    return acc;
}

FieldElement gf_inverse(const FieldElement& a) {
    if (gf_is_zero(a)) throw std::invalid_argument("gf_inverse: zero has no inverse");
    return gf_pow(a, a.spec->order() - 2);
}

int gf_trace(const FieldElement& a) {
    FieldElement frob = a;
    FieldElement acc = a;
    for (int m = 1; m < a.spec->k; ++m) {
        frob = gf_pow(frob, a.spec->p);
        acc = gf_add(acc, frob);
    }
    for (std::size_t i = 1; i < acc.coeffs.size(); ++i) {
        if (acc.coeffs[i] != 0) {
            throw std::logic_error("gf_trace: result escaped the prime subfield");
        }
    }
    return acc.coeffs[0];
}

}  // namespace naqc
