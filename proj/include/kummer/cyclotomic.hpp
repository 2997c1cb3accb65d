#ifndef KUMMER_CYCLOTOMIC_HPP
#define KUMMER_CYCLOTOMIC_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace kummer {

// Coefficients of the d-th cyclotomic polynomial Phi_d, lowest degree first,
// computed by exact division of x^d - 1 by the product of Phi_e over proper
// divisors e of d.
std::vector<long long> cyclotomic_polynomial(int d);

// An exact element of Z[zeta_d] in the power basis 1, zeta, ...,
// zeta^{deg(Phi_d)-1}, reduced mod Phi_d.  The representation is canonical:
// equality of elements is equality of coefficient vectors.  For d=4 these are
// the Gaussian integers, for d=3 the Eisenstein integers, for d=2 plain
// integers.
class CyclotomicInteger {
  public:
    static CyclotomicInteger zero(int d);
    static CyclotomicInteger from_integer(int d, long long value);
    // zeta_d^k, k reduced mod d.
    static CyclotomicInteger root_power(int d, long long k);
    // sum_t counts[t] * zeta_d^t  (counts indexed by residue, size d).
    static CyclotomicInteger from_root_counts(int d,
                                              const std::vector<long long>& counts);

    int order() const { return d_; }
    const std::vector<long long>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    CyclotomicInteger operator+(const CyclotomicInteger& rhs) const;
    CyclotomicInteger operator-(const CyclotomicInteger& rhs) const;
    CyclotomicInteger operator*(const CyclotomicInteger& rhs) const;
    CyclotomicInteger operator-() const;
    bool operator==(const CyclotomicInteger& rhs) const;

    // "a+bi" style for d=4, otherwise the coefficient vector.
    std::string to_string() const;

  private:
    CyclotomicInteger(int d, std::vector<long long> coeffs);
    void require_same_order(const CyclotomicInteger& rhs) const;

    int d_;
    std::vector<long long> coeffs_;
};

}  // namespace kummer

#endif
