#include "opal/supernorm.hpp"

#include <stdexcept>
#include <vector>

namespace opal {

namespace {

BigNat prime_power(std::int64_t index, Mult exponent, PrimeTable& table) {
    BigNat base = table.nth(index);
    BigNat out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exponent));
    return out;
}

// Appends (index, exponent) entries for the full factorization of n.
void factor_into(const BigNat& n, Mult sign, PrimeTable& table, std::vector<PartEntry>& entries) {
    BigNat remaining = n;
    for (std::int64_t i = 1; remaining > 1; ++i) {
        BigNat p = table.nth(i);
        if (p * p > remaining) {
            // No divisor up to its square root, so the remainder is prime.
            if (!remaining.fits_slong_p())
                throw std::length_error("prime factor beyond the table ceiling");
            auto idx = table.index_of(remaining.get_si());
            entries.push_back({idx.value(), sign});
            return;
        }
        unsigned long exp =
            mpz_remove(remaining.get_mpz_t(), remaining.get_mpz_t(), p.get_mpz_t());
        if (exp > 0) entries.push_back({i, sign * static_cast<Mult>(exp)});
    }
}

}  // namespace

BigNat supernorm(const Partition& p, PrimeTable& table) {
    BigNat out = 1;
    for (const auto& e : p.entries()) out *= prime_power(e.part, e.mult, table);
    return out;
}

BigRat supernorm(const Overpartition& a, PrimeTable& table) {
    BigNat num = 1;
    BigNat den = 1;
    for (const auto& e : a.entries()) {
        if (e.mult > 0)
            num *= prime_power(e.part, e.mult, table);
        else
            den *= prime_power(e.part, detail::checked_negate(e.mult), table);
    }
    // num and den are built from disjoint prime sets, so this is already in
    // lowest terms.
    return make_rational(num, den);
}

Partition factor_to_partition(const BigNat& n, PrimeTable& table) {
    if (n < 1) throw std::domain_error("only positive integers factor to partitions");
    std::vector<PartEntry> entries;
    factor_into(n, 1, table, entries);
    return Partition::from_multiplicities(entries);
}

Overpartition factor_to_overpartition(const BigRat& q, PrimeTable& table) {
    if (q <= 0) throw std::domain_error("only positive rationals factor to overpartitions");
    BigRat canon = q;
    canon.canonicalize();
    std::vector<PartEntry> entries;
    factor_into(canon.get_num(), 1, table, entries);
    factor_into(canon.get_den(), -1, table, entries);
    return Overpartition::from_multiplicities(entries);
}

}  // namespace opal
