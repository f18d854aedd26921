#ifndef SCLD_SEED_HPP
#define SCLD_SEED_HPP

#include <cstdint>
#include <string_view>

namespace scld {

/// Independent stream seed for a named consumer of one global seed.
std::uint64_t derive_seed(std::uint64_t global, std::string_view label);

/// derive_seed with an integer label (trial numbers and the like).
std::uint64_t derive_seed(std::uint64_t global, std::string_view label, std::uint64_t index);

}  // namespace scld

#endif  // SCLD_SEED_HPP
