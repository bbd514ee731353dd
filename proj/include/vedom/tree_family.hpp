#ifndef VEDOM_TREE_FAMILY_HPP
#define VEDOM_TREE_FAMILY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "vedom/graph.hpp"
#include "vedom/oracles.hpp"

namespace vedom {

// Tree of >= 3 vertices whose designated center has eccentricity <= 2.
struct Atom {
    Graph tree;
    int center = 0;
};

bool is_atom(const Graph& t, int c);

// Join kinds: the (i-j) distance pattern between the attachment points and
// their centers, with the clause variant from the family definition.
enum class JoinKind { zero_one_a, zero_one_b, zero_one_c, one_zero_a, one_zero_b, one_one, two_one };
const char* join_kind_name(JoinKind k);
std::optional<JoinKind> join_kind_from_name(const std::string& name);
int join_kind_i(JoinKind k);
int join_kind_j(JoinKind k);

struct JoinSpec {
    JoinKind kind;
    int x_existing = -1; // vertex of the existing tree
    int x_new = -1;      // vertex of the incoming atom (atom-local id)
};

// How a certificate step was admitted: by the literal join clauses, or by
// directly checking that the atom centers remain a minimum independent
// ve-dominating set after the join (exact, oracle-backed).
enum class JoinRoute { definition, minimality };
const char* join_route_name(JoinRoute r);

struct CertStep {
    Atom atom;
    JoinSpec spec;
    int attach_atom_index = -1; // atom of x_existing at application time
    JoinRoute route = JoinRoute::definition;
};

// Ordered construction witness: base atom plus joins, replayable
// deterministically (atom vertices are appended in atom-local order).
struct FamilyCertificate {
    Atom base;
    std::vector<CertStep> steps;
    int atom_count() const { return 1 + static_cast<int>(steps.size()); }
    std::string to_json() const;
};
FamilyCertificate certificate_from_json(const std::string& text);

// Replayed certificate: the tree it builds plus vertex->atom bookkeeping.
struct BuiltFamily {
    Graph tree;
    std::vector<int> atom_of;
    std::vector<int> centers; // per atom index
};

// Edges ve-dominated by v and by no other member of S. With distance1_only,
// only edges whose nearer endpoint is at distance exactly 1 from v.
std::vector<std::pair<int, int>> private_edges(const Graph& t, const std::vector<int>& S, int v,
                                               bool distance1_only);

struct JoinValidation {
    bool ok = false;
    std::string reason;
};

// Literal clause check for the given kind, with distances and privacy
// evaluated on the existing tree and the incoming atom.
JoinValidation validate_join(const BuiltFamily& existing, const Atom& atom, const JoinSpec& spec);
// Convenience overload matching the certificate-so-far phrasing.
JoinValidation validate_join(const Graph& t_existing, const FamilyCertificate& cert_so_far,
                             const Atom& atom, const JoinSpec& spec);

// Oracle-backed route: after the join the centers must still be a minimum
// independent ve-dominating set. Exact; needs the joined tree under the cap.
JoinValidation validate_join_minimality(const BuiltFamily& existing, const Atom& atom,
                                        const JoinSpec& spec, const OracleOptions& opts = {});

// Applies a clause-validated join; throws errc::validation when it fails.
void apply_join(BuiltFamily& existing, const Atom& atom, const JoinSpec& spec);

// Replays base + steps, validating every join along its recorded route.
// Throws on an invalid witness.
BuiltFamily replay_certificate(const FamilyCertificate& cert);

std::vector<int> atom_centers(const FamilyCertificate& cert);

struct FamilyGenParams {
    int min_atom_size = 3;
    int max_atom_size = 9;
    int retry_budget_per_atom = 400;
    int max_vertices = 24; // keeps the per-join minimality check exact and fast
};

struct GeneratedFamilyMember {
    Graph tree;
    FamilyCertificate certificate;
};

GeneratedFamilyMember generate_family_member(uint64_t seed, int atoms,
                                             const FamilyGenParams& params = {});

// Leaf members are swapped for their supports, then members one level above
// the deepest with no other member within distance 2 move to their parents,
// to a fixed point. Input must be an independent ve-dominating set.
std::vector<int> normalize_ive_set(const Graph& t, int root, std::vector<int> S);

struct RecognizeRejection {
    int gamma_ve = 0;
    int i_ve = 0;
    std::string stage;
};

using RecognizeResult = std::variant<FamilyCertificate, RecognizeRejection>;

// Accepts exactly the trees whose minimum ve-dominating and independent
// ve-dominating sets have equal size, returning a construction witness.
// Equality is decided by the exact oracles; the witness is found by peeling
// atoms deepest-first with full backtracking over peel boundaries and kinds.
RecognizeResult recognize(const Graph& t, const OracleOptions& opts = {});

} // namespace vedom

#endif
