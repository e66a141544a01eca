#ifndef PISOT_CRYSTAL_H
#define PISOT_CRYSTAL_H

#include <cstdint>
#include <set>
#include <vector>

namespace pisot {

struct FactorizationEntry {
    std::uint64_t prime = 0;
    unsigned exponent = 0;

    bool operator==(const FactorizationEntry &other) const = default;
};

/// Largest accepted input for the number-theoretic functions below.
inline constexpr std::uint64_t kMaxCrystalInput = (std::uint64_t{1} << 63) - 1;

bool is_prime(std::uint64_t n);

/// Prime factorization in increasing prime order; empty for n = 1.
std::vector<FactorizationEntry> factorize(std::uint64_t n);

/// Euler's totient, with phi(1) = 1.
std::uint64_t euler_phi(std::uint64_t n);

/// Hiller's function: the sum of phi(p^a) over the prime powers p^a exactly
/// dividing n, leaving out the prime power 2 itself. Hil(1) = Hil(2) = 0.
std::uint64_t hiller(std::uint64_t n);

/// {n <= n_max : Hil(n) <= d}.
std::set<std::uint64_t> allowed_orders(std::uint64_t d, std::uint64_t n_max);

/// A rotation of order n can be a lattice symmetry in dimension d iff
/// Hil(n) <= d; otherwise it can only occur for a quasicrystal.
bool is_crystallographic_order(std::uint64_t n, std::uint64_t dimension);

}  // namespace pisot

#endif
