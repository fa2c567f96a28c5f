#pragma once

// Exact matrix rank over Q (fraction-free elimination) and over F_p.

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "depthforge/error.hpp"

namespace depthforge {

/// Base field: characteristic 0 (the rationals) or a prime p.
class FieldSpec {
public:
    constexpr FieldSpec() = default;
    explicit FieldSpec(std::uint32_t characteristic) : characteristic_(characteristic) {
        if (characteristic != 0 && !is_prime(characteristic))
            throw InvariantViolation("field characteristic " + std::to_string(characteristic) + " is not prime");
    }

    static FieldSpec rationals() { return FieldSpec(); }

    std::uint32_t characteristic() const noexcept { return characteristic_; }

    static bool is_prime(std::uint64_t p) {
        if (p < 2) return false;
        for (std::uint64_t d = 2; d * d <= p; ++d)
            if (p % d == 0) return false;
        return true;
    }

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

private:
    std::uint32_t characteristic_ = 0;
};

/// Dense integer matrix, row-major. Entries are reduced mod p for prime fields.
using IntMatrix = std::vector<std::vector<std::int64_t>>;

namespace detail {

struct Overflow {};

// a*b - c*d, throwing Overflow instead of wrapping.
inline std::int64_t det2(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    std::int64_t ab = 0;
    std::int64_t cd = 0;
    std::int64_t diff = 0;
    if (__builtin_mul_overflow(a, b, &ab) || __builtin_mul_overflow(c, d, &cd) || __builtin_sub_overflow(ab, cd, &diff))
        throw Overflow{};
    return diff;
}

inline boost::multiprecision::cpp_int det2(const boost::multiprecision::cpp_int& a,
                                           const boost::multiprecision::cpp_int& b,
                                           const boost::multiprecision::cpp_int& c,
                                           const boost::multiprecision::cpp_int& d) {
    return a * b - c * d;
}

// Bareiss elimination. Every intermediate entry is a minor of the input, so
// the division by the previous pivot is exact. Pivots are the first nonzero
// entry in row-major order among the unreduced rows.
template <class Int>
std::size_t bareiss_rank(std::vector<std::vector<Int>> a) {
    const std::size_t rows = a.size();
    if (rows == 0) return 0;
    const std::size_t cols = a.front().size();
    Int prev = 1;
    std::size_t rank = 0;
    while (rank < rows) {
        std::size_t prow = rows;
        std::size_t pcol = cols;
        for (std::size_t i = rank; i < rows && prow == rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                if (a[i][j] != 0) {
                    prow = i;
                    pcol = j;
                    break;
                }
        if (prow == rows) break;
        std::swap(a[rank], a[prow]);
        const Int pivot = a[rank][pcol];
        for (std::size_t i = rank + 1; i < rows; ++i) {
            const Int lead = a[i][pcol];
            for (std::size_t j = 0; j < cols; ++j) {
                if (j == pcol) continue;
                a[i][j] = det2(pivot, a[i][j], lead, a[rank][j]) / prev;
            }
            a[i][pcol] = 0;
        }
        prev = pivot;
        ++rank;
    }
    return rank;
}

inline std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
    // Fermat: a^(p-2) mod p
    std::uint64_t result = 1;
    std::uint64_t base = a % p;
    for (std::uint64_t e = p - 2; e > 0; e >>= 1) {
        if (e & 1) result = static_cast<std::uint64_t>(static_cast<unsigned __int128>(result) * base % p);
        base = static_cast<std::uint64_t>(static_cast<unsigned __int128>(base) * base % p);
    }
    return result;
}

inline std::size_t modular_rank(const IntMatrix& m, std::uint64_t p) {
    const std::size_t rows = m.size();
    if (rows == 0) return 0;
    const std::size_t cols = m.front().size();
    std::vector<std::vector<std::uint64_t>> a(rows, std::vector<std::uint64_t>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            const auto r = m[i][j] % static_cast<std::int64_t>(p);
            a[i][j] = static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(p) : r);
        }
    std::size_t rank = 0;
    while (rank < rows) {
        std::size_t prow = rows;
        std::size_t pcol = cols;
        for (std::size_t i = rank; i < rows && prow == rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                if (a[i][j] != 0) {
                    prow = i;
                    pcol = j;
                    break;
                }
        if (prow == rows) break;
        std::swap(a[rank], a[prow]);
        const std::uint64_t inv = inverse_mod(a[rank][pcol], p);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            if (a[i][pcol] == 0) continue;
            const auto factor = static_cast<std::uint64_t>(static_cast<unsigned __int128>(a[i][pcol]) * inv % p);
            for (std::size_t j = 0; j < cols; ++j)
                a[i][j] = static_cast<std::uint64_t>(
                    (a[i][j] + static_cast<unsigned __int128>(p - factor) * a[rank][j]) % p);
        }
        ++rank;
    }
    return rank;
}

}  // namespace detail

/// Rank of m over the given field.
inline std::size_t rank(const IntMatrix& m, const FieldSpec& field) {
    if (m.empty() || m.front().empty()) return 0;
    if (field.characteristic() != 0) return detail::modular_rank(m, field.characteristic());
    try {
        return detail::bareiss_rank(m);
    } catch (const detail::Overflow&) {
        std::vector<std::vector<boost::multiprecision::cpp_int>> big(m.size());
        for (std::size_t i = 0; i < m.size(); ++i) big[i].assign(m[i].begin(), m[i].end());
        return detail::bareiss_rank(std::move(big));
    }
}

}  // namespace depthforge
