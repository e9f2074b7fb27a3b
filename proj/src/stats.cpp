#include "opal/stats.hpp"

#include <stdexcept>

namespace opal {

std::int64_t oversize(const Overpartition& a) {
    std::int64_t total = 0;
    for (const auto& e : a.entries())
        total = detail::checked_add(total, detail::checked_mul(e.part, e.mult));
    return total;
}

std::int64_t overlength(const Overpartition& a) {
    std::int64_t total = 0;
    for (const auto& e : a.entries()) total = detail::checked_add(total, e.mult);
    return total;
}

BigRat overnorm(const Overpartition& a) {
    BigNat num = 1;
    BigNat den = 1;
    for (const auto& e : a.entries()) {
        BigNat base = e.part;
        BigNat power;
        mpz_pow_ui(power.get_mpz_t(), base.get_mpz_t(),
                   static_cast<unsigned long>(detail::checked_abs(e.mult)));
        (e.mult > 0 ? num : den) *= power;
    }
    // Distinct parts share prime factors (2 and 4, say), so reduction here
    // does real work.
    return make_rational(num, den);
}

Mult multiplicity_of(Part k, const Overpartition& a) { return a.multiplicity(k); }

std::int64_t overlength_mod(std::int64_t m, const Overpartition& a) {
    if (m < 1) throw std::invalid_argument("modulus must be positive");
    std::int64_t r = overlength(a) % m;
    return r < 0 ? r + m : r;
}

}  // namespace opal
