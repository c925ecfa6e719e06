#include "crnv/explorer.hpp"

#include <ostream>

namespace crnv {

void write_states_csv(std::ostream& out, const Network& network, const ReachGraph& graph)
{
    out << "index";
    for (const auto& s : network.species()) {
        out << ',' << s.name;
    }
    out << '\n';
    for (StateIndex i = 0; i < graph.state_count(); ++i) {
        out << i;
        const State state = graph.state(i);
        for (const auto& c : state.counts()) {
            out << ',' << c;
        }
        out << '\n';
    }
}

void write_edges_csv(std::ostream& out, const Network& network, const ReachGraph& graph)
{
    out << "source_index,reaction_label,target_index\n";
    for (const auto& e : graph.edges()) {
        out << e.source << ',' << network.reaction(e.reaction).label << ',' << e.target << '\n';
    }
}

} // namespace crnv
