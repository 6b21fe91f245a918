#ifndef PCFE_RNG_HPP
#define PCFE_RNG_HPP

#include <cstdint>

namespace pcfe {

// Counter-based generator: the i-th variate is a pure function of (seed,
// stream, i), so any index range can be handed to any worker and the
// sequence never depends on call order. Output mixing is the splitmix64
// finalizer applied to key + i * golden-gamma.
class CounterRng {
public:
    static constexpr const char* kAlgorithm = "splitmix64-counter";

    explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
        : key_(mix(mix(seed + 0x9E3779B97F4A7C15ull) ^ mix(stream + 0xD1B54A32D192ED03ull))) {}

    std::uint64_t bits(std::uint64_t index) const {
        return mix(key_ + (index + 1) * 0x9E3779B97F4A7C15ull);
    }

    // Uniform on (0,1), centered on 2^53 dyadic bins so 0 and 1 never occur.
    double uniform(std::uint64_t index) const {
        return (static_cast<double>(bits(index) >> 11) + 0.5) * 0x1.0p-53;
    }

    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t key_;
};

}  // namespace pcfe

#endif
