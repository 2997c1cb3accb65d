#include "kummer/core.hpp"

#include <sstream>

namespace kummer {

namespace {
int mod(long long v, int d) {
    long long r = v % d;
    return static_cast<int>(r < 0 ? r + d : r);
}
}  // namespace

int symplectic_phase(const AlgebraShape& shape, const ExponentVector& u,
                     const ExponentVector& v) {
    check_vector(shape, u);
    check_vector(shape, v);
    long long t = 0;
    for (int k = 0; k < shape.factors; ++k) {
        const int a = u.entries[2 * k], b = u.entries[2 * k + 1];
        const int ap = v.entries[2 * k], bp = v.entries[2 * k + 1];
        t += static_cast<long long>(a) * bp - static_cast<long long>(b) * ap;
    }
    return mod(t, shape.degree);
}

ExponentVector product_exponent(
    const AlgebraShape& shape,
    const std::vector<std::pair<ExponentVector, int>>& items) {
    ExponentVector out = zero_vector(shape);
    for (const auto& [vec, mult] : items) {
        check_vector(shape, vec);
        if (mult < 0) throw std::invalid_argument("multiplicity must be >= 0");
        for (int i = 0; i < shape.vector_length(); ++i)
            out.entries[i] = mod(out.entries[i] +
                                     static_cast<long long>(mult) * vec.entries[i],
                                 shape.degree);
    }
    return out;
}

ExponentVector combine(const AlgebraShape& shape,
                       const std::vector<std::pair<int, ExponentVector>>& terms) {
    ExponentVector out = zero_vector(shape);
    for (const auto& [coef, vec] : terms) {
        check_vector(shape, vec);
        for (int i = 0; i < shape.vector_length(); ++i)
            out.entries[i] = mod(out.entries[i] +
                                     static_cast<long long>(coef) * vec.entries[i],
                                 shape.degree);
    }
    return out;
}

ExponentVector transvect(const AlgebraShape& shape, const ExponentVector& u,
                         const ExponentVector& center) {
    const int t = symplectic_phase(shape, u, center);
    ExponentVector out = u;
    for (int i = 0; i < shape.vector_length(); ++i)
        out.entries[i] = mod(out.entries[i] +
                                 static_cast<long long>(t) * center.entries[i],
                             shape.degree);
    return out;
}

std::string to_string(const ExponentVector& v) {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < v.entries.size(); ++i) {
        if (i) os << ',';
        os << v.entries[i];
    }
    os << ')';
    return os.str();
}

}  // namespace kummer
