#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mcx/multigraph.hpp"
#include "mcx/sphere_calculus.hpp"
#include "mcx/tilings.hpp"

namespace mcx {

/// Rewrite rules, declared in the order the auto strategy tries them:
/// cheap strict reductions first, ContractPath4 late because it mints edges,
/// ParallelEdge last since only contraction produces parallel edges.
enum class Rule {
    BaseEdgeless,
    BaseSingleEdges,
    SplitComponents,
    OpenDominate,
    PendantPath3,
    ClosedDominate,
    SimplicialEdge,
    ContractPath4,
    ParallelEdge,
};

const char* rule_name(Rule r);
std::optional<Rule> rule_from_name(const std::string& name);

enum class Combinator {
    Leaf,
    Identity,
    Wedge,
    SuspendThenWedge,
    SuspendEach,
    Join,
};

const char* combinator_name(Combinator c);
std::optional<Combinator> combinator_from_name(const std::string& name);

/// One applicable rule together with the edges/vertices instantiating it.
struct RuleInstance {
    Rule rule;
    std::string e;                 // dominated / simplicial / kept-parallel edge
    std::string h;                 // dominating / deleted edge
    std::string x;                 // duplicate edge (ParallelEdge)
    std::vector<std::string> path; // vertices (PendantPath3: 4, ContractPath4: 5)

    bool operator==(const RuleInstance&) const = default;
};

/// Complete, deterministically ordered enumeration of every rule instance:
/// rule priority first, then lexicographic witness (domination instances by
/// (h, e)).
std::vector<RuleInstance> applicable_rules(const Multigraph& g);

/// Children and the combinator reassembling the parent's homotopy type:
/// parent = combine over suspension(child_i, shifts[i]).
struct RuleApplication {
    std::vector<Multigraph> children;
    Combinator combinator = Combinator::Identity;
    std::vector<int> shifts;
};

/// Re-checks the witness on g (stale witnesses are an error), then builds
/// the children via graph operations.
RuleApplication apply_rule(const Multigraph& g, const RuleInstance& r);

/// True iff the witness precondition holds on g.
bool rule_applicable(const Multigraph& g, const RuleInstance& r);

/// Replayable proof tree. Each node stores its graph (and canonical key) so
/// verification can re-check witnesses; children recorded up to isomorphism
/// (compared by canonical key), which lets scripted reductions recurse on
/// regenerated family graphs.
struct TraceNode {
    Multigraph graph;
    std::string graph_key;
    RuleInstance rule;
    Combinator combinator = Combinator::Leaf;
    std::vector<int> shifts;
    std::vector<std::shared_ptr<const TraceNode>> children;
    std::optional<HomotopyClass> leaf; // base cases only
    HomotopyClass cls;                 // replayed value, cached
};

using CertPtr = std::shared_ptr<const TraceNode>;

enum class Strategy {
    Auto,
    ScriptedTriangle,
    ScriptedPentagon,
    ScriptedExtended,
};

const char* strategy_name(Strategy s);
std::optional<Strategy> strategy_from_name(const std::string& name);

struct Reduced {
    HomotopyClass cls;
    CertPtr trace;
    std::size_t nodes = 0;
};

/// Not an error: budget ran out or no rule applied; carries the graph the
/// engine was stuck on.
struct Partial {
    Multigraph stuck;
    bool budget_exhausted = false;
    std::size_t nodes = 0;
};

using ReduceOutcome = std::variant<Reduced, Partial>;

constexpr std::size_t kDefaultReduceBudget = 1'000'000;
constexpr std::size_t kMemoEdgeLimit = 16;

/// Reduces g to a homotopy class with a replayable certificate. Auto is
/// depth-first over the first applicable rule, memoized on canonical keys
/// for graphs of at most kMemoEdgeLimit edges. Scripted strategies replay
/// the family-specific reduction sequences and require the matching input
/// graph (parameters inferred from it).
ReduceOutcome reduce(const Multigraph& g, Strategy strategy = Strategy::Auto,
                     std::size_t budget = kDefaultReduceBudget);

/// Same, but with the generator parameters known up front (the scripted
/// extended reduction wants them; everything else generates and delegates).
ReduceOutcome reduce_spec(const tilings::TilingSpec& spec,
                          Strategy strategy = Strategy::Auto,
                          std::size_t budget = kDefaultReduceBudget);

/// Re-checks every witness precondition on the recorded graphs, re-applies
/// every rule (children matched by canonical key), and replays every
/// combinator. True iff the recorded root class is reproduced.
bool verify_certificate(const TraceNode& root);

/// Bottom-up combinator replay of a trace.
HomotopyClass replay_trace(const TraceNode& node);

} // namespace mcx
