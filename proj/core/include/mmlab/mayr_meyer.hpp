#ifndef MMLAB_MAYR_MEYER_HPP
#define MMLAB_MAYR_MEYER_HPP

#include <optional>
#include <string>
#include <vector>

#include "mmlab/ideal.hpp"
#include "mmlab/report.hpp"

namespace mmlab {

// d = d_prime * i with i a power of char(K) and gcd(d_prime, char) = 1;
// over Q this is (d, 1).
std::pair<int, int> char_split(int d, const FieldSpec& field);

// The fixed 12-variable ring, plus the 10-variable profile without the
// s1, f1 pair (the two generators s1 - s*c1, f1 - s*c4 split off; every
// equality below reduces to this subring).
struct MayrMeyerInstance {
  int d = 1;
  FieldSpec field = FieldSpec::rationals();
  int d_prime = 1;
  int i = 1;
  RingPtr ring;
  RingPtr ring_short;
};

MayrMeyerInstance make_instance(int d, const FieldSpec& field);

enum class ComponentMode { Combined, Split };
enum class RingProfile { Full, Shortened };

struct ComponentSpec {
  int row = 0;                  // 1..6
  std::optional<Scalar> alpha;  // Split row 2 only
  Ideal ideal;
};

// The d_prime-th roots of unity in F_p, ascending; throws if the field
// does not contain all of them.
std::vector<Scalar> roots_of_unity(const FieldSpec& field, int n);

// The 11 defining generators (9 in the shortened profile).
Ideal build_J(const MayrMeyerInstance& inst,
              RingProfile profile = RingProfile::Full);
// The six decomposition rows; Split expands row 2 into d_prime ideals.
std::vector<ComponentSpec> build_components(
    const MayrMeyerInstance& inst, ComponentMode mode,
    RingProfile profile = RingProfile::Full);
// The five minimal-prime rows (row 2 to first powers / alpha-linear form).
std::vector<ComponentSpec> build_radical_rows(
    const MayrMeyerInstance& inst, ComponentMode mode,
    RingProfile profile = RingProfile::Full);
// J + (s*c2*(b1^d - b2^d)).
Ideal build_minimal_intersection(const MayrMeyerInstance& inst,
                                 RingProfile profile = RingProfile::Full);
// J(1,d') + f*b3*(c3 - c2) + f*b3*c2*(b1^d' - b2^d').
Ideal build_radical(const MayrMeyerInstance& inst,
                    RingProfile profile = RingProfile::Full);
// The six associated primes at a given root alpha, full ring.
std::vector<Ideal> associated_primes(const MayrMeyerInstance& inst,
                                     const Scalar& alpha);

enum class Claim {
  Theorem1,
  Prop4,
  Prop5,
  Lemma2,
  Lemma3,
  Prop6,
  Heights,
  Identities,
};

const std::vector<Claim>& all_claims();
std::string claim_name(Claim c);
std::optional<Claim> claim_from_name(const std::string& name);

struct VerifyOptions {
  ComponentMode mode = ComponentMode::Combined;
  // Degree cap for the prop6 search; defaults to 2d-1 when negative.
  int d_max = -1;
  // Also run the full 12-variable checks (default: only for d <= 2).
  std::optional<bool> full_ring_check;
};

ClaimResult verify(Claim claim, const MayrMeyerInstance& inst,
                   const VerifyOptions& opts = {});

// Runs claims (optionally in parallel) and assembles the report.
VerificationReport verify_claims(const std::vector<Claim>& claims,
                                 const MayrMeyerInstance& inst,
                                 const VerifyOptions& opts = {},
                                 unsigned jobs = 1);

}  // namespace mmlab

#endif
