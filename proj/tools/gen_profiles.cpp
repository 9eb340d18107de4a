// Regenerates data/family_profiles.json: multiplicity profiles of each family built
// with large prime parameters, which avoid every accidental concurrency at these sizes.
#include <iostream>

#include <json.hpp>

#include "logder/catalog.hpp"

int main() {
  using namespace logder;
  const long primes[] = {101, 103, 107, 109, 113, 127, 131, 137};
  nlohmann::ordered_json out;
  out["format"] = "logder-family-profiles";
  out["version"] = 1;
  out["profiles"] = nlohmann::ordered_json::object();
  for (FamilyId id : all_families()) {
    const auto [lo, hi] = s_range(id);
    for (int s = lo; s <= hi; ++s) {
      FamilyParams p;
      p.s = s;
      for (int j = 0; j < t_count(id, s); ++j) p.t.emplace_back(primes[j]);
      if (uses_a(id)) p.a = Scalar(211);
      if (uses_b(id)) p.b = Scalar(223);
      out["profiles"][std::string(to_string(id))][std::to_string(s)] = stats(family_unchecked(id, p)).multiplicities;
    }
  }
  std::cout << out.dump(2) << '\n';
}
