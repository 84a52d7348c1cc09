#pragma once

// Shared machinery between the auto strategy and the scripted reductions.

#include <map>
#include <string>

#include "mcx/reduction.hpp"

namespace mcx::detail {

struct BudgetExhausted {
    Multigraph at;
};

struct StuckGraph {
    Multigraph at;
};

struct ReduceContext {
    std::size_t budget = kDefaultReduceBudget;
    std::size_t used = 0;
    std::map<std::string, CertPtr> memo; // canonical key -> subtree, small graphs only

    void charge(const Multigraph& g) {
        if (used >= budget) throw BudgetExhausted{g};
        ++used;
    }
};

HomotopyClass combine_children(Combinator comb, const std::vector<int>& shifts,
                               const std::vector<CertPtr>& children);

CertPtr make_leaf(const Multigraph& g, Rule rule, ReduceContext& ctx);

CertPtr make_step(const Multigraph& g, const RuleInstance& r,
                  const std::vector<CertPtr>& children, ReduceContext& ctx);

CertPtr auto_reduce_node(const Multigraph& g, ReduceContext& ctx);

CertPtr scripted_triangle_node(int t, ReduceContext& ctx);
CertPtr scripted_pentagon_node(int t, ReduceContext& ctx);
CertPtr scripted_pendant_node(int t, ReduceContext& ctx);
CertPtr scripted_extended_node(const tilings::TilingSpec& spec, ReduceContext& ctx);

// Bounded parameter search used when a bare graph is handed to the scripted
// extended strategy (default offsets only).
tilings::TilingSpec infer_extended_spec(const Multigraph& g);

} // namespace mcx::detail
