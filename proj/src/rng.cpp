#include "swarmfire/rng.hpp"

namespace swarmfire {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t run_seed(std::uint64_t base_seed, std::uint64_t run_index) {
  return mix64(mix64(base_seed) ^ (run_index * 0xd1b54a32d192ed03ULL + 0x632be59bd9b4e019ULL));
}

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_id)
    : seed_(seed), stream_id_(stream_id) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream_id), static_cast<std::uint32_t>(stream_id >> 32),
                    static_cast<std::uint32_t>(mix64(seed ^ mix64(stream_id)))};
  engine_.seed(seq);
}

}  // namespace swarmfire
