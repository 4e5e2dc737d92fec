#include "dcolor/coloring.hpp"

#include <algorithm>

namespace dcolor {

bool ListAssignment::contains(NodeId v, Color c) const {
    const auto& l = lists[v];
    return std::binary_search(l.begin(), l.end(), c);
}

bool ListAssignment::valid() const {
    for (const auto& l : lists) {
        for (size_t i = 0; i < l.size(); ++i) {
            if (l[i] < space_lo || l[i] >= space_hi) return false;
            if (i > 0 && l[i] <= l[i - 1]) return false;
        }
    }
    return true;
}

ColorSpacePartition ColorSpacePartition::make(long long lo, long long hi, const Rat& eta) {
    if (hi <= lo) throw PreconditionError("color space partition: empty space");
    if (eta.num <= eta.den) throw PreconditionError("color space partition: eta > 1 required");
    ColorSpacePartition p;
    p.lo = lo;
    p.hi = hi;
    long long size = hi - lo;
    p.chunk = std::max<long long>(1, (size * eta.den) / eta.num);  // floor(size / eta)
    p.parts = static_cast<int>((size + p.chunk - 1) / p.chunk);
    return p;
}

ListAssignment make_random_lists(const Graph& g, const std::vector<long long>& sizes,
                                 long long space_lo, long long space_size, std::uint64_t seed) {
    ListAssignment la;
    la.space_lo = space_lo;
    la.space_hi = space_lo + space_size;
    la.lists.resize(g.n());
    for (NodeId v = 0; v < g.n(); ++v) {
        long long want = std::min(sizes[v], space_size);
        SplitMix64 rng(seed * 0x100000001B3ULL + static_cast<std::uint64_t>(v) + 1);
        std::vector<Color> l;
        std::vector<bool> used(space_size, false);
        while (static_cast<long long>(l.size()) < want) {
            long long c = static_cast<long long>(rng.next_below(static_cast<std::uint64_t>(space_size)));
            if (!used[c]) {
                used[c] = true;
                l.push_back(space_lo + c);
            }
        }
        std::sort(l.begin(), l.end());
        la.lists[v] = std::move(l);
    }
    return la;
}

ListAssignment make_full_lists(const Graph& g, long long space_lo, long long space_size) {
    ListAssignment la;
    la.space_lo = space_lo;
    la.space_hi = space_lo + space_size;
    la.lists.resize(g.n());
    for (auto& l : la.lists) {
        l.resize(space_size);
        for (long long i = 0; i < space_size; ++i) l[i] = space_lo + i;
    }
    return la;
}

} // namespace dcolor
