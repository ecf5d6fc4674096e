#ifndef ORB_LATTES_HPP
#define ORB_LATTES_HPP

#include <optional>
#include <utility>
#include <vector>

#include "orb/orbimap.hpp"

namespace orb {

enum class GLTag {
    not_generalized_lattes,
    generalized_lattes,
    ordinary_lattes,
    power_conjugate,
    chebyshev_conjugate,
};

const char* gl_tag_name(GLTag t);

/// A verified conjugation to a canonical form: mu^(-1) . A . mu equals
/// canonical, which is z^(sign*d) or sign * T_d.  The witness may live over
/// an extension of the input field when a normalizing radical was needed.
struct ConjugacyWitness {
    RatMap mu;
    int sign; // +1 or -1
    long d;
    RatMap canonical;
};

struct Classification {
    GLTag tag;
    std::optional<Orbifold> o0;
    std::optional<Rational> chi0;
    std::optional<ConjugacyWitness> witness;
    bool complete = true; // false marks the heuristic low-degree search
    std::vector<Orbifold> passing;
};

std::optional<ConjugacyWitness> detect_power_conjugacy(const RatMap& A);
std::optional<ConjugacyWitness> detect_chebyshev_conjugacy(const RatMap& A);

struct CandidateSet {
    std::vector<Orbifold> candidates;
    bool complete;
};

/// All orbifolds supported on critical-value classes of A (extended by
/// preimage classes to depth two below degree five) whose signature is
/// admissible for a minimal holomorphic self-map.
CandidateSet candidate_orbifolds(const RatMap& A);

/// The maximal orbifold classification.  Conjugacy to z^(+-d) / +-T_d short
/// circuits; otherwise candidates are filtered by the self-map condition and
/// their LCM is returned with the verdict of a final re-verification.
Classification find_O0(const RatMap& A, int jobs = 1);

/// Whether find_O0(A) and find_O0(A^l) agree.
bool iterate_stability_check(const RatMap& A, long l, int jobs = 1);

struct FamilyParams {
    long r;
    long n;
    RatMap R;
    FieldElement epsilon;
};

/// Theorem-5.1 family: A = z^r R(z)^n, F = z^r R(z^n) with gcd(r, n) = 1;
/// verifies A . z^n = z^n . F and the self-map condition on {0:n, inf:n}.
std::pair<RatMap, RatMap> gen_nn(const FamilyParams& p);

/// Theorem-5.2 family for signature {2,2,n}: F = eps z^r R(z^n) with R
/// commuting with 1/z and eps^(2n) = 1; A is obtained by descending through
/// (z^n + z^-n)/2 and verified against {-1:2, 1:2, inf:n}.
std::pair<RatMap, RatMap> gen_22n(const FamilyParams& p);

/// Good solutions of A . T_n = T_n . B: both sides descend through (z+1/z)/2.
std::pair<RatMap, RatMap> gen_chebyshev_pair(const FamilyParams& p);

/// T_n via the recurrence T_{n+1} = 2 z T_n - T_{n-1}.
RatMap chebyshev(long n, const FieldPtr& field);

struct ElementaryTransform {
    RatMap transformed;  // U . V
    RatMap right_factor; // V with B = V . U
};

ElementaryTransform elementary_transform(const RatMap& B, const RatMap& U);

struct ChainCertificate {
    RatMap U, V, last;
    long s;
};

/// Runs the chain B -> B_1 -> ... -> B_s of elementary transformations and
/// verifies U.B = B_s.U, B.V = V.B_s, V.U = B^s, U.V = B_s^s exactly.
ChainCertificate verify_chain(const RatMap& B, const std::vector<RatMap>& chain);

enum class PolyFamily { z_r_R_n, chebyshev_type };

struct PolynomialClassification {
    PolyFamily family;
    std::optional<RatMap> mu; // affine normalization for the z^r R^n family
    long r = 0;
    long n = 0;
    std::optional<RatMap> R;
    std::optional<Orbifold> witness_orbifold;
};

/// Theorem-7.2 dichotomy for polynomial generalized Lattes maps.
PolynomialClassification classify_polynomial(const RatMap& A);

} // namespace orb

#endif
