#include "gis/event.hpp"

namespace gis {

void replay_event(graph& g, const reduction_event& ev) {
    for (const edge_edit& e : ev.edge_edits) {
        switch (e.kind) {
            case edge_edit_kind::rem_delete:
                g.delete_removable_edge(e.u, e.v);
                break;
            case edge_edit_kind::rem_to_perm:
                g.removable_to_permanent(e.u, e.v);
                break;
            case edge_edit_kind::rem_insert:
                g.add_removable_edge(e.u, e.v, e.amount);
                break;
            case edge_edit_kind::rem_penalty_delta: {
                auto p = g.removable_penalty(e.u, e.v);
                if (!p) throw internal_error("replay: penalty delta on missing edge");
                g.set_penalty(e.u, e.v, *p + e.amount);
                break;
            }
        }
    }
    for (const weight_delta& d : ev.weight_deltas) g.add_profit(d.v, d.delta);
    for (const removed_vertex& r : ev.removed) g.remove_vertex(r.v);
    if (ev.fold) {
        vertex_id id = g.add_vertex(ev.fold->profit);
        if (id != ev.fold->id) throw internal_error("replay: fold id mismatch");
        for (vertex_id x : ev.fold->perm) g.add_permanent_edge(id, x);
        for (const rem_entry& e : ev.fold->rem) g.add_removable_edge(id, e.to, e.penalty);
    }
}

}  // namespace gis
