#include "pao/random.hpp"

namespace pao {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t combine(std::uint64_t seed, std::uint64_t value) {
    return splitmix64(seed ^ (splitmix64(value) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2)));
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t base_seed, std::uint64_t optimizer_index,
                          std::uint64_t problem_index, std::uint64_t repetition) {
    std::uint64_t h = splitmix64(base_seed);
    h = combine(h, optimizer_index);
    h = combine(h, problem_index);
    h = combine(h, repetition);
    return h;
}

}  // namespace pao
