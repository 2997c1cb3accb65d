#ifndef KUMMER_CORE_HPP
#define KUMMER_CORE_HPP

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kummer {

// Degree d and number of tensor factors n.  d=4 is the fully supported
// graph-theory case; the Kummer predicate and the search accept any d >= 2.
struct AlgebraShape {
    int degree;
    int factors;

    AlgebraShape(int d, int n) : degree(d), factors(n) {
        if (d < 2) throw std::invalid_argument("AlgebraShape: degree must be >= 2");
        if (n < 1) throw std::invalid_argument("AlgebraShape: factors must be >= 1");
    }

    int vector_length() const { return 2 * factors; }
};

// A monomial up to scalar: residues (a_1, b_1, ..., a_n, b_n) mod d,
// where a_k is the exponent of x_k and b_k the exponent of y_k.
struct ExponentVector {
    std::vector<int> entries;

    ExponentVector() = default;
    explicit ExponentVector(std::vector<int> e) : entries(std::move(e)) {}
    ExponentVector(std::initializer_list<int> e) : entries(e) {}

    bool is_zero() const {
        for (int v : entries)
            if (v != 0) return false;
        return true;
    }

    auto operator<=>(const ExponentVector&) const = default;
};

inline void check_vector(const AlgebraShape& shape, const ExponentVector& v) {
    if (static_cast<int>(v.entries.size()) != shape.vector_length())
        throw std::invalid_argument("exponent vector length does not match shape");
    for (int e : v.entries)
        if (e < 0 || e >= shape.degree)
            throw std::invalid_argument("exponent entry out of [0, d)");
}

inline ExponentVector zero_vector(const AlgebraShape& shape) {
    return ExponentVector(std::vector<int>(shape.vector_length(), 0));
}

// The residue t with uv = rho^t vu:  sum_k (a_k b'_k - b_k a'_k) mod d.
int symplectic_phase(const AlgebraShape& shape, const ExponentVector& u,
                     const ExponentVector& v);

// Exponent of v_1^{d_1} ... v_m^{d_m}: sum of d_j * e_j, entrywise mod d.
ExponentVector product_exponent(
    const AlgebraShape& shape,
    const std::vector<std::pair<ExponentVector, int>>& items);

// Signed integer combination of exponent vectors, reduced mod d.  Used for
// quotients like v_1 v_2^{-1} which are additive in the exponent model.
ExponentVector combine(const AlgebraShape& shape,
                       const std::vector<std::pair<int, ExponentVector>>& terms);

// Symplectic transvection centered at c:  u |-> u + phase(u, c) * c.
// Preserves the symplectic phase for every center; products of transvections
// supply the phase-preserving maps used for symmetry reduction and testing.
ExponentVector transvect(const AlgebraShape& shape, const ExponentVector& u,
                         const ExponentVector& center);

std::string to_string(const ExponentVector& v);

}  // namespace kummer

#endif
