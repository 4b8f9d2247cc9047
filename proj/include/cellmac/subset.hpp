#ifndef CELLMAC_SUBSET_HPP
#define CELLMAC_SUBSET_HPP

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace cellmac {

/// A set of vertices, bit v set iff vertex v (in input order) is a member.
using Subset = std::uint32_t;

/// Largest vertex count for which subset enumeration is supported.
inline constexpr int kMaxVertices = 24;

inline int cardinality(Subset s) { return std::popcount(s); }
inline Subset full_set(int n) { return n >= 32 ? ~Subset(0) : (Subset(1) << n) - 1; }
inline Subset complement(Subset s, int n) { return full_set(n) & ~s; }
inline bool contains(Subset big, Subset small) { return (big & small) == small; }
inline bool has(Subset s, int v) { return (s >> v) & 1u; }
inline Subset singleton(int v) { return Subset(1) << v; }

/// '1' at position v iff v is in the subset; position 0 is the first vertex.
inline std::string to_bitstring(Subset s, int n)
{
    std::string out(std::size_t(n), '0');
    for (int v = 0; v < n; ++v)
        if (has(s, v)) out[std::size_t(v)] = '1';
    return out;
}

inline std::vector<int> members(Subset s)
{
    std::vector<int> out;
    for (int v = 0; s != 0; ++v, s >>= 1)
        if (s & 1u) out.push_back(v);
    return out;
}

/// All subsets of an n-set ordered by cardinality, then numerically.
inline std::vector<Subset> subsets_by_size(int n)
{
    std::vector<Subset> out;
    out.reserve(std::size_t(1) << n);
    for (int k = 0; k <= n; ++k)
        for (Subset s = 0; s <= full_set(n); ++s)
        {
            if (cardinality(s) == k) out.push_back(s);
            if (s == full_set(n)) break;
        }
    return out;
}

} // namespace cellmac

#endif
