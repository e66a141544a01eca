#include "pisot/crystal.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace pisot {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 pow_mod(u64 base, u64 e, u64 m) {
    u64 r = 1 % m;
    base %= m;
    while (e) {
        if (e & 1) r = mul_mod(r, base, m);
        base = mul_mod(base, base, m);
        e >>= 1;
    }
    return r;
}

void check_input(u64 n) {
    if (n == 0) {
        throw std::invalid_argument("argument must be positive");
    }
    if (n > kMaxCrystalInput) {
        throw std::out_of_range("argument exceeds 2^63 - 1");
    }
}

u64 pollard_rho(u64 n) {
    if (n % 2 == 0) return 2;
    for (u64 c = 1;; ++c) {
        auto f = [&](u64 x) { return (mul_mod(x, x, n) + c) % n; };
        u64 x = 2, y = 2, d = 1;
        while (d == 1) {
            x = f(x);
            y = f(f(y));
            d = std::gcd(x > y ? x - y : y - x, n);
        }
        if (d != n) return d;
    }
}

void factor_into(u64 n, std::vector<u64> &primes) {
    if (n == 1) return;
    if (is_prime(n)) {
        primes.push_back(n);
        return;
    }
    u64 d = pollard_rho(n);
    factor_into(d, primes);
    factor_into(n / d, primes);
}

}  // namespace

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    unsigned s = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++s;
    }
    // These bases are deterministic for all 64-bit n.
    for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        u64 x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<FactorizationEntry> factorize(u64 n) {
    check_input(n);
    std::vector<u64> primes;
    for (u64 p = 2; p < 1000 && p * p <= n; ++p) {
        while (n % p == 0) {
            primes.push_back(p);
            n /= p;
        }
    }
    factor_into(n, primes);
    std::sort(primes.begin(), primes.end());
    std::vector<FactorizationEntry> out;
    for (u64 p : primes) {
        if (!out.empty() && out.back().prime == p) {
            ++out.back().exponent;
        } else {
            out.push_back({p, 1});
        }
    }
    return out;
}

static u64 prime_power_phi(const FactorizationEntry &e) {
    u64 r = e.prime - 1;
    for (unsigned k = 1; k < e.exponent; ++k) r *= e.prime;
    return r;
}

u64 euler_phi(u64 n) {
    u64 r = 1;
    for (const auto &e : factorize(n)) r *= prime_power_phi(e);
    return r;
}

u64 hiller(u64 n) {
    check_input(n);
    if (n <= 2) return 0;
    u64 sum = 0;
    for (const auto &e : factorize(n)) {
        if (e.prime == 2 && e.exponent == 1) continue;
        sum += prime_power_phi(e);
    }
    return sum;
}

std::set<u64> allowed_orders(u64 d, u64 n_max) {
    std::set<u64> out;
    for (u64 n = 1; n <= n_max; ++n) {
        if (hiller(n) <= d) out.insert(n);
    }
    return out;
}

bool is_crystallographic_order(u64 n, u64 dimension) { return hiller(n) <= dimension; }

}  // namespace pisot
