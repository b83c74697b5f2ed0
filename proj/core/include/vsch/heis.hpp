#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace vsch {

// Element of H = (Z/2Z)^g (g = 2 or 3), or of its character group via the
// bit-dot-product pairing.  Elements index the theta coordinates: the bit
// string read as a binary number is the coordinate's lexicographic index,
// e.g. for g = 2 the variables y_00, y_01, y_10, y_11 have indices 0..3.
struct HElem {
    uint8_t bits = 0;
    uint8_t g = 2;

    HElem() = default;
    HElem(unsigned b, unsigned genus) : bits(static_cast<uint8_t>(b)), g(static_cast<uint8_t>(genus)) {}

    unsigned index() const { return bits; }
    bool is_zero() const { return bits == 0; }

    HElem operator+(const HElem& o) const { return HElem(bits ^ o.bits, g); }
    bool operator==(const HElem& o) const { return bits == o.bits && g == o.g; }
    bool operator!=(const HElem& o) const { return !(*this == o); }
    bool operator<(const HElem& o) const { return bits < o.bits; }

    std::string str() const {
        std::string s;
        for (int i = g - 1; i >= 0; --i) s += char('0' + ((bits >> i) & 1));
        return s;
    }
};

// Character evaluation: alpha* applied to beta is (-1)^(alpha* . beta).
// Returns +1 or -1.
inline int pairing(const HElem& astar, const HElem& beta) {
    return __builtin_popcount(astar.bits & beta.bits) % 2 == 0 ? 1 : -1;
}

inline std::vector<HElem> all_of_h(int g) {
    std::vector<HElem> v;
    for (unsigned b = 0; b < (1u << g); ++b) v.emplace_back(b, g);
    return v;
}
inline std::vector<HElem> nonzero_of_h(int g) {
    std::vector<HElem> v;
    for (unsigned b = 1; b < (1u << g); ++b) v.emplace_back(b, g);
    return v;
}

// Kernel of the character alpha* (a subgroup of index 2 for alpha* != 0),
// in increasing lexicographic order.
inline std::vector<HElem> character_kernel(const HElem& astar) {
    std::vector<HElem> v;
    for (unsigned b = 0; b < (1u << astar.g); ++b)
        if (pairing(astar, HElem(b, astar.g)) == 1) v.emplace_back(b, astar.g);
    return v;
}

inline bool is_subgroup(const std::vector<HElem>& s) {
    for (const auto& a : s)
        for (const auto& b : s) {
            HElem c = a + b;
            bool found = false;
            for (const auto& x : s)
                if (x == c) { found = true; break; }
            if (!found) return false;
        }
    return !s.empty() && s[0].g > 0;
}

} // namespace vsch
