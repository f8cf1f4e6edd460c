// Independent reference implementations the tests compare against. These
// deliberately share no code with the library: multiplication is carryless
// shift-and-reduce on raw bits, inversion is exhaustive search, and the
// uniformity recount walks the defining equation directly.
#pragma once

#include <cstdint>
#include <vector>

namespace oracle {

inline std::uint32_t slow_mul(int n, std::uint32_t modulus, std::uint32_t x,
                              std::uint32_t y) {
    std::uint64_t acc = 0;
    for (int i = 0; i < n; ++i)
        if (y >> i & 1u) acc ^= static_cast<std::uint64_t>(x) << i;
    for (int d = 2 * n - 2; d >= n; --d)
        if (acc >> d & 1u) acc ^= static_cast<std::uint64_t>(modulus) << (d - n);
    return static_cast<std::uint32_t>(acc);
}

inline std::uint32_t slow_inv(int n, std::uint32_t modulus, std::uint32_t x) {
    if (x == 0) return 0;
    const std::uint32_t size = 1u << n;
    for (std::uint32_t y = 1; y < size; ++y)
        if (slow_mul(n, modulus, x, y) == 1) return y;
    return 0; // unreachable for an irreducible modulus
}

inline std::uint32_t slow_pow(int n, std::uint32_t modulus, std::uint32_t x,
                              std::uint64_t k) {
    std::uint32_t acc = 1;
    for (std::uint64_t i = 0; i < k; ++i) acc = slow_mul(n, modulus, acc, x);
    return acc;
}

inline int slow_trace(int n, std::uint32_t modulus, std::uint32_t x) {
    std::uint32_t acc = 0, p = x;
    for (int i = 0; i < n; ++i) {
        acc ^= p;
        p = slow_mul(n, modulus, p, p);
    }
    return static_cast<int>(acc); // always 0 or 1 for a valid modulus
}

// Direct recount of max_(a,b) #{x : f(x+a) + c f(x) = b}, a = 0 skipped
// exactly when c = 1.
inline int naive_uniformity(const std::vector<std::uint16_t>& f, int n,
                            std::uint32_t modulus, std::uint32_t c) {
    const std::uint32_t size = 1u << n;
    int best = 0;
    std::vector<int> hist(size);
    for (std::uint32_t a = 0; a < size; ++a) {
        if (c == 1 && a == 0) continue;
        std::fill(hist.begin(), hist.end(), 0);
        for (std::uint32_t x = 0; x < size; ++x) {
            const std::uint32_t b = f[x ^ a] ^ slow_mul(n, modulus, c, f[x]);
            best = std::max(best, ++hist[b]);
        }
    }
    return best;
}

} // namespace oracle
