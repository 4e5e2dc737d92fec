#pragma once

#include "dcolor/graph.hpp"
#include "dcolor/types.hpp"

#include <vector>

namespace dcolor {

struct ProperColoring {
    std::vector<Color> color;
    long long palette_size = 0;
};

struct DefectiveColoring {
    std::vector<Color> bucket;   // in [0, q)
    long long q = 0;
    Rat lambda;                  // relative defect parameter
};

// Per-node value in {kNoColor} u colors.
struct PartialColoring {
    std::vector<Color> value;

    explicit PartialColoring(int n = 0) : value(n, kNoColor) {}
    bool colored(NodeId v) const { return value[v] != kNoColor; }
    long long uncolored_count() const {
        long long c = 0;
        for (Color x : value)
            if (x == kNoColor) ++c;
        return c;
    }
    bool total() const { return uncolored_count() == 0; }
};

// Per-node sorted color lists over a contiguous color space [lo, hi).
struct ListAssignment {
    long long space_lo = 0;
    long long space_hi = 0;
    std::vector<std::vector<Color>> lists;

    long long space_size() const { return space_hi - space_lo; }
    long long list_size(NodeId v) const { return static_cast<long long>(lists[v].size()); }
    bool contains(NodeId v, Color c) const;
    bool valid() const;  // sorted, deduped, inside the space
};

// A color space split into contiguous chunks of size `chunk` (the last chunk
// possibly smaller). Every part has size <= chunk.
struct ColorSpacePartition {
    long long lo = 0;
    long long hi = 0;
    long long chunk = 1;
    int parts = 1;

    // chunk = max(1, floor(size / eta)); parts = ceil(size / chunk).
    static ColorSpacePartition make(long long lo, long long hi, const Rat& eta);

    int part_of(Color c) const { return static_cast<int>((c - lo) / chunk); }
    std::pair<long long, long long> part_range(int i) const {
        long long a = lo + static_cast<long long>(i) * chunk;
        return {a, std::min(a + chunk, hi)};
    }
};

// Deterministic list construction for tests and the CLI: `size` distinct
// colors per node drawn from [lo, lo+space) via SplitMix64.
ListAssignment make_random_lists(const Graph& g, const std::vector<long long>& sizes,
                                 long long space_lo, long long space_size, std::uint64_t seed);

ListAssignment make_full_lists(const Graph& g, long long space_lo, long long space_size);

} // namespace dcolor
