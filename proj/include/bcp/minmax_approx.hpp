#pragma once

#include <optional>
#include <vector>

#include "bcp/graph.hpp"
#include "bcp/partition.hpp"

namespace bcp {

/// Class of an ordered 3-partition that receives pulled vertices (V1 or V2).
enum class PullTarget { First = 1, Second = 2 };

/// Moves `moved` from V3 into the target class.
struct PullMove {
    VertexSet moved;
    PullTarget target = PullTarget::First;
};

/// True iff `u` is pull-admissible for `target`: a nonempty proper subset of
/// V3 such that V_target + U and V3 - U stay connected and
/// w(V_target + U) < w(V3).
bool is_pull_admissible(const WeightedGraph& g, const OrderedPartition3& p, PullTarget target, const VertexSet& u);

/// Joins V1 and V2 and splits V3 in two. Requires 2 w(V3) > W, |V3| >= 2 and
/// V1 adjacent to V2.
OrderedPartition3 merge(const WeightedGraph& g, const OrderedPartition3& p);

/// Finds a pull-admissible set for `target`, or nothing if none exists.
/// Requires 2 w(V3) > W.
std::optional<VertexSet> pull_check(const WeightedGraph& g, const OrderedPartition3& p, PullTarget target);

OrderedPartition3 pull(const WeightedGraph& g, const OrderedPartition3& p, const PullMove& move);

/// Deterministic starting point: two leaves peeled off a DFS spanning tree of
/// G (the last-discovered leaf, then the last-discovered leaf of what remains)
/// become singleton classes.
OrderedPartition3 initial_partition3(const WeightedGraph& g);

enum class Bcp3Step { Merge, Pull };

struct Bcp3Result {
    OrderedPartition3 partition;
    std::size_t iterations = 0;
    /// w(V3) before the first step and after each step.
    std::vector<Weight> heaviest_trace;
    std::vector<Bcp3Step> steps;
};

/// Merge/Pull improvement loop for three classes. Requires n >= 3.
Bcp3Result minmax_bcp3(const WeightedGraph& g);

/// Locates the star-center of a terminal 3-partition with 2 w(V3) > W and
/// |V3| >= 2, and checks the structure the loop guarantees. A mismatch throws
/// ContractViolation.
StarCenterCertificate star_center(const WeightedGraph& g, const OrderedPartition3& p);

/// Structural checks on a certificate against the terminal partition it came
/// from. Returns the failed assertion names; empty means all hold:
/// "v1-v2-nonadjacent", "v1-below-quarter", "cut-vertex-with-v1-v2",
/// "others-at-most-v1", "three-components-heavy-center".
std::vector<std::string> check_star_certificate(const WeightedGraph& g, const OrderedPartition3& p,
                                                const StarCenterCertificate& cert);

/// Splits off q singletons, each time from the heaviest class with at least
/// two vertices (ties to the lowest member id). Requires |P| + q <= n.
Partition get_singletons(const WeightedGraph& g, Partition p, std::size_t q);

/// RatioHalfW: w+ <= W/2. SingletonTop: V3 was a single vertex, so the result
/// is optimal. StarOptimal: the loop stopped at a star-center, which the
/// result carries.
enum class CertificateKind { RatioHalfW, SingletonTop, StarOptimal };

const char* to_string(CertificateKind kind);

struct BcpkResult {
    Partition partition;  // sorted by (weight, lowest id)
    CertificateKind certificate = CertificateKind::RatioHalfW;
    std::optional<StarCenterCertificate> star;
    Bcp3Result bcp3;
    /// Weight of the class holding the star-center and its t lightest
    /// components, set when ell >= k-1.
    std::optional<Weight> center_class_weight;
    /// Optimality is proven (SingletonTop, or StarOptimal with the center
    /// class being a heaviest class). Otherwise w+ <= W/2 is what is known.
    bool proven_optimal = false;
};

/// k/2-approximation for min-max connected k-partition, 3 <= k <= n.
BcpkResult minmax_bcpk(const WeightedGraph& g, std::size_t k);

}  // namespace bcp
