#pragma once

#include <cstdint>
#include <stdexcept>

namespace homalg {

struct bad_input : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct invariant_violation : std::logic_error {
    using std::logic_error::logic_error;
};

/// Prime field GF(p), 2 <= p <= 97. Elements are canonical residues in [0, p).
struct Field {
    std::uint32_t p = 2;

    Field() = default;
    explicit Field(std::uint32_t prime) : p(prime) {
        if (p < 2 || p > 97 || !is_prime(p))
            throw bad_input("field characteristic must be a prime in [2, 97]");
    }

    static bool is_prime(std::uint32_t n) {
        if (n < 2) return false;
        for (std::uint32_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return (a + b) % p; }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return (a + p - b) % p; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return a * b % p; }
    std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p - a; }

    std::uint32_t reduce(long long v) const {
        long long r = v % static_cast<long long>(p);
        return static_cast<std::uint32_t>(r < 0 ? r + p : r);
    }

    std::uint32_t inv(std::uint32_t a) const {
        if (a == 0) throw invariant_violation("inverse of zero");
        // Fermat: a^(p-2), p is prime and tiny.
        std::uint32_t result = 1, base = a % p, e = p - 2;
        while (e) {
            if (e & 1) result = result * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return result;
    }

    bool operator==(const Field&) const = default;
};

}  // namespace homalg
