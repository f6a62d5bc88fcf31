#include "wdist/weight_distribution.hpp"

#include <sstream>

namespace wdist {

std::uint64_t WeightDistribution::total() const noexcept {
    std::uint64_t s = 0;
    for (const auto& [w, a] : counts) s += a;
    return s;
}

std::uint64_t WeightDistribution::count(std::uint64_t weight) const noexcept {
    auto it = counts.find(weight);
    return it == counts.end() ? 0 : it->second;
}

std::optional<std::uint64_t> WeightDistribution::min_weight() const noexcept {
    for (const auto& [w, a] : counts)
        if (w > 0 && a > 0) return w;
    return std::nullopt;
}

std::uint64_t WeightDistribution::checksum() const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ull;
    auto feed = [&h](std::uint64_t v) {
        for (int i = 0; i < 8; ++i) {
            h ^= (v >> (8 * i)) & 0xffu;
            h *= 0x100000001b3ull;
        }
    };
    for (const auto& [w, a] : counts) {
        feed(w);
        feed(a);
    }
    return h;
}

std::string to_string(const WeightDistribution& wd) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [w, a] : wd.counts) {
        if (!first) os << ", ";
        os << w << ": " << a;
        first = false;
    }
    os << "}";
    return os.str();
}

}  // namespace wdist
