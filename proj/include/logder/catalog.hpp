#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "logder/arrangement.hpp"
#include "logder/derlog.hpp"

namespace logder {

enum class FamilyId { I, II, III, Ia, Ib, Ic, Id, IIa, IIb, IIIa, IIIb, IIIc, IV, Va, Vb };

std::string_view to_string(FamilyId id);
/// Throws InvalidParams on an unknown name.
FamilyId parse_family(std::string_view name);
const std::vector<FamilyId>& all_families();
bool is_quadratic(FamilyId id);
/// 2 for I-III, 3 otherwise.
int expected_mdr(FamilyId id);

/// s is the line count for the cubic families and the upper product index for I and II
/// (whose line count is s + 1). Fixed-size families ignore s when it is 0.
struct FamilyParams {
  int s = 0;
  std::vector<Scalar> t;
  std::optional<Scalar> a;
  std::optional<Scalar> b;
  std::string to_string() const;
};

/// Smallest and largest s accepted for the family (equal for fixed-size families).
std::pair<int, int> s_range(FamilyId id);
/// Number of t_j the family expects for this s.
int t_count(FamilyId id, int s);
bool uses_a(FamilyId id);
bool uses_b(FamilyId id);

/// The defining forms without the multiplicity-profile check. Throws InvalidParams
/// for violated stated constraints or repeated lines.
Arrangement family_unchecked(FamilyId id, const FamilyParams& p);
/// family_unchecked plus comparison with the stored multiplicity profile for (id, s).
Arrangement family(FamilyId id, const FamilyParams& p);

/// Stored multiplicity multiset (descending) for (id, s); nullopt when none is stored.
std::optional<std::vector<std::size_t>> golden_profile(FamilyId id, int s);
/// Text of the embedded profile table.
std::string_view profile_table_json();

/// First valid parameter choice from the sampling grid for this s (s = 0: smallest s).
FamilyParams default_params(FamilyId id, int s = 0);

/// Sampling grid t_j in {1,2,3,5,-1}, a,b in {2,3,-1,1/2} (minus forbidden values)
/// for every s in [min, s_max], keeping only instances that pass family().
std::vector<FamilyParams> parameter_grid(FamilyId id, int s_max);

/// Closed-form quadratic derivations: one, or two for type I with s = 4.
/// Throws WrongFamily for cubic families.
std::vector<NormalizedDerivation> expected_quadratic_derivation(FamilyId id, const FamilyParams& p);

/// The family's arrangement minus its last-listed extra line, and that line; for the
/// families built by adding one line to a quadratic family (Ia-IIIc).
std::pair<Arrangement, LinearForm> base_and_added_line(FamilyId id, const FamilyParams& p);

struct FamilyReport {
  FamilyId id{};
  FamilyParams params;
  Arrangement arrangement;
  int r = 0;
  int expected = 0;
  std::size_t quotient_dim = 0;
  /// Quadratic families: the closed-form derivations span Derlog_2 modulo theta_E.
  /// Vb: the displayed cubic derivation lies in Derlog_3. Always true otherwise.
  bool derivation_ok = true;
  bool ok() const { return r == expected && derivation_ok; }
};

FamilyReport verify_family(FamilyId id, const FamilyParams& p);
/// Same checks on an arrangement already built (e.g. after a change of coordinates).
FamilyReport verify_instance(FamilyId id, const FamilyParams& p, const Arrangement& a);

struct DecompositionHints {
  std::optional<std::vector<Derivation>> rho2;  // quadratic derivations of the base
  std::optional<std::vector<Derivation>> rho3;  // cubic derivations of the base
};

struct Decomposition {
  bool pure = false;                 // theta = l' rho2 mod theta_E
  std::vector<Derivation> rho2;
  std::vector<HomPoly> lprime;       // one linear form per rho2
  std::vector<Derivation> rho3_basis;
  std::vector<Scalar> rho3_coeffs;   // scaled so the first nonzero one is 1
  Derivation rho3;                   // sum of rho3_coeffs * rho3_basis
  bool hypothesis = false;           // rho2(l) not in <l> for every rho2
  bool reconstructed_logarithmic = false;
  std::vector<std::size_t> multiplicities;  // profile of base + l
};

/// Writes a cubic derivation theta of base + l as l' rho2 + rho3 modulo Euler multiples.
/// rho2 defaults to the degree-2 quotient basis of the base, rho3 to a complement of
/// S_1 rho2 + S_2 theta_E in the base's cubic derivations. Throws NotDecomposable when
/// no such expression exists, InvalidArgument when the preconditions fail.
Decomposition cubic_shape_decomposition(const Arrangement& base, const LinearForm& l, const Derivation& theta,
                                        const DecompositionHints& hints = {});

}  // namespace logder
