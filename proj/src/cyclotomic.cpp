#include "kummer/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace kummer {

namespace {

using Poly = std::vector<long long>;  // lowest degree first, no trailing zeros

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly multiply(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

// Exact division by a monic divisor; throws if the division leaves a remainder.
Poly divide_exact(Poly num, const Poly& den) {
    if (den.empty() || den.back() != 1)
        throw std::logic_error("divide_exact: divisor must be monic");
    trim(num);
    if (num.size() < den.size()) {
        for (long long c : num)
            if (c != 0) throw std::logic_error("divide_exact: inexact division");
        return {};
    }
    Poly quot(num.size() - den.size() + 1, 0);
    for (size_t i = num.size(); i-- >= den.size();) {
        const long long c = num[i];
        if (c == 0) {
            if (i + 1 == den.size()) break;
            continue;
        }
        const size_t shift = i - (den.size() - 1);
        quot[shift] = c;
        for (size_t j = 0; j < den.size(); ++j) num[shift + j] -= c * den[j];
        if (i + 1 == den.size()) break;
    }
    for (long long c : num)
        if (c != 0) throw std::logic_error("divide_exact: inexact division");
    return quot;
}

std::map<int, Poly> g_phi_cache;
std::mutex g_phi_mutex;

// Assumes the cache lock is held.  Fills the cache for all divisors of d.
const Poly& phi_locked(int d) {
    auto it = g_phi_cache.find(d);
    if (it != g_phi_cache.end()) return it->second;
    Poly num(d + 1, 0);  // x^d - 1
    num[0] = -1;
    num[d] = 1;
    Poly den{1};
    for (int e = 1; e < d; ++e)
        if (d % e == 0) den = multiply(den, phi_locked(e));
    return g_phi_cache.emplace(d, divide_exact(std::move(num), den)).first->second;
}

}  // namespace

std::vector<long long> cyclotomic_polynomial(int d) {
    if (d < 1) throw std::invalid_argument("cyclotomic_polynomial: d must be >= 1");
    std::lock_guard<std::mutex> lock(g_phi_mutex);
    return phi_locked(d);
}

namespace {

// Reduce a polynomial (any degree) mod the monic Phi_d, in place, and resize
// to deg(Phi_d) coefficients.
void reduce_mod_phi(std::vector<long long>& p, const Poly& phi) {
    const size_t deg = phi.size() - 1;
    for (size_t i = p.size(); i-- > deg;) {
        const long long c = p[i];
        if (c == 0) continue;
        p[i] = 0;
        const size_t shift = i - deg;
        for (size_t j = 0; j < deg; ++j) p[shift + j] -= c * phi[j];
    }
    p.resize(deg);
}

}  // namespace

CyclotomicInteger::CyclotomicInteger(int d, std::vector<long long> coeffs)
    : d_(d), coeffs_(std::move(coeffs)) {}

CyclotomicInteger CyclotomicInteger::zero(int d) {
    const size_t deg = cyclotomic_polynomial(d).size() - 1;
    return CyclotomicInteger(d, std::vector<long long>(deg, 0));
}

CyclotomicInteger CyclotomicInteger::from_integer(int d, long long value) {
    auto z = zero(d);
    z.coeffs_[0] = value;
    return z;
}

CyclotomicInteger CyclotomicInteger::root_power(int d, long long k) {
    const Poly phi = cyclotomic_polynomial(d);
    long long r = k % d;
    if (r < 0) r += d;
    std::vector<long long> p(static_cast<size_t>(r) + 1, 0);
    p[static_cast<size_t>(r)] = 1;
    if (p.size() < phi.size() - 1) p.resize(phi.size() - 1, 0);
    reduce_mod_phi(p, phi);
    return CyclotomicInteger(d, std::move(p));
}

CyclotomicInteger CyclotomicInteger::from_root_counts(
    int d, const std::vector<long long>& counts) {
    if (static_cast<int>(counts.size()) != d)
        throw std::invalid_argument("from_root_counts: counts must have size d");
    const Poly phi = cyclotomic_polynomial(d);
    std::vector<long long> p(counts);
    if (p.size() < phi.size() - 1) p.resize(phi.size() - 1, 0);
    reduce_mod_phi(p, phi);
    return CyclotomicInteger(d, std::move(p));
}

void CyclotomicInteger::require_same_order(const CyclotomicInteger& rhs) const {
    if (d_ != rhs.d_)
        throw std::invalid_argument("cyclotomic integers of different order");
}

bool CyclotomicInteger::is_zero() const {
    for (long long c : coeffs_)
        if (c != 0) return false;
    return true;
}

CyclotomicInteger CyclotomicInteger::operator+(const CyclotomicInteger& rhs) const {
    require_same_order(rhs);
    auto out = coeffs_;
    for (size_t i = 0; i < out.size(); ++i) out[i] += rhs.coeffs_[i];
    return CyclotomicInteger(d_, std::move(out));
}

CyclotomicInteger CyclotomicInteger::operator-(const CyclotomicInteger& rhs) const {
    require_same_order(rhs);
    auto out = coeffs_;
    for (size_t i = 0; i < out.size(); ++i) out[i] -= rhs.coeffs_[i];
    return CyclotomicInteger(d_, std::move(out));
}

CyclotomicInteger CyclotomicInteger::operator*(const CyclotomicInteger& rhs) const {
    require_same_order(rhs);
    const Poly phi = cyclotomic_polynomial(d_);
    std::vector<long long> prod(coeffs_.size() + rhs.coeffs_.size() - 1, 0);
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < rhs.coeffs_.size(); ++j)
            prod[i + j] += coeffs_[i] * rhs.coeffs_[j];
    if (prod.size() < phi.size() - 1) prod.resize(phi.size() - 1, 0);
    reduce_mod_phi(prod, phi);
    return CyclotomicInteger(d_, std::move(prod));
}

CyclotomicInteger CyclotomicInteger::operator-() const {
    auto out = coeffs_;
    for (auto& c : out) c = -c;
    return CyclotomicInteger(d_, std::move(out));
}

bool CyclotomicInteger::operator==(const CyclotomicInteger& rhs) const {
    return d_ == rhs.d_ && coeffs_ == rhs.coeffs_;
}

std::string CyclotomicInteger::to_string() const {
    std::ostringstream os;
    if (d_ == 4) {
        const long long a = coeffs_[0], b = coeffs_[1];
        os << a;
        if (b >= 0)
            os << "+" << b << "i";
        else
            os << "-" << -b << "i";
        return os.str();
    }
    os << '[';
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) os << ',';
        os << coeffs_[i];
    }
    os << ']';
    return os.str();
}

}  // namespace kummer
