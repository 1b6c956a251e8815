#include "grk/cli/catalog.hpp"

#include <stdexcept>

namespace grk::cli {

namespace {

SingularityEntry make(std::string tag, std::optional<long> n, std::size_t rank, const IntMatrix& relations,
                      Integer expected, std::string expected_text) {
  GroupElement r{IntVector(rank)};
  r.coordinates[0] = 1;
  return {std::move(tag), n, FgAbelianGroup(rank, relations), std::move(r), std::move(expected),
          std::move(expected_text)};
}

}  // namespace

std::string SingularityEntry::label() const {
  if (type_tag == "a_n") return "a_" + std::to_string(*parameter);
  if (type_tag == "d_n_even" || type_tag == "d_n_odd") return "d_" + std::to_string(*parameter);
  return type_tag;
}

SingularityEntry singularity(const std::string& type, std::optional<long> n) {
  auto need = [&](long lo) {
    if (!n) throw std::invalid_argument("type " + type + " needs --n");
    if (*n < lo) throw std::invalid_argument("type " + type + " needs n >= " + std::to_string(lo));
  };
  if (type == "a_n") {
    need(1);
    const long m = *n + 1;
    return make("a_n", n, 2, IntMatrix{{0, m}}, count_divisors(m), "d(" + std::to_string(m) + ")");
  }
  if (type == "d_n" || type == "d_n_even" || type == "d_n_odd") {
    need(4);
    const bool even = *n % 2 == 0;
    if ((type == "d_n_even" && !even) || (type == "d_n_odd" && even))
      throw std::invalid_argument("type " + type + " does not match the parity of n = " + std::to_string(*n));
    if (even) return make("d_n_even", n, 3, IntMatrix{{0, 2, 0}, {0, 0, 2}}, 5, "5");
    return make("d_n_odd", n, 2, IntMatrix{{0, 4}}, 3, "3");
  }
  if (type == "e6" || type == "e7" || type == "e8") {
    if (n) throw std::invalid_argument("type " + type + " takes no --n");
    if (type == "e6") return make("e6", std::nullopt, 2, IntMatrix{{0, 3}}, 2, "2");
    if (type == "e7") return make("e7", std::nullopt, 2, IntMatrix{{0, 2}}, 2, "2");
    return make("e8", std::nullopt, 1, IntMatrix(0, 1), 1, "1");
  }
  throw std::invalid_argument("unknown singularity type '" + type + "' (expected a_n, d_n, e6, e7 or e8)");
}

std::vector<SingularityEntry> singularity_table(long max_n) {
  std::vector<SingularityEntry> out;
  for (long n = 1; n <= max_n; ++n) out.push_back(singularity("a_n", n));
  for (long n = 4; n <= max_n; ++n) out.push_back(singularity("d_n", n));
  for (const char* e : {"e6", "e7", "e8"}) out.push_back(singularity(e, std::nullopt));
  return out;
}

Integer recompute(const SingularityEntry& e) {
  const GroupElement gens[] = {e.designated};
  const Subgroup r = subgroup_generated(e.k0, gens);
  return static_cast<unsigned long>(subgroups_containing(e.k0, r).size());
}

}  // namespace grk::cli
