#include "qsearch/random.hpp"

namespace qsearch {

namespace {

std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace

RandomSource::RandomSource(std::uint64_t seed) : state_(seed) {}

std::uint64_t RandomSource::next_u64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix64(state_);
}

double RandomSource::next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

RandomSource RandomSource::substream(std::uint64_t seed, std::uint64_t index) {
    return RandomSource(mix64(mix64(seed) ^ (index + 0x632BE59BD9B4E019ULL)));
}

}  // namespace qsearch
