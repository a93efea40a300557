#include <algorithm>

#include "nbhd/invariants.hpp"

namespace nbhd {

namespace {

class CliqueSearch {
public:
    explicit CliqueSearch(const Graph& g) : g_(g), n_(static_cast<std::size_t>(g.order())), adj_(n_ * n_, 0) {
        for (auto [u, v] : g.edges()) {
            adj_[static_cast<std::size_t>(u) * n_ + v] = 1;
            adj_[static_cast<std::size_t>(v) * n_ + u] = 1;
        }
    }

    std::vector<Vertex> run() {
        std::vector<Vertex> order = degeneracy_order();
        std::reverse(order.begin(), order.end());
        std::vector<Vertex> current;
        expand(current, order);
        std::sort(best_.begin(), best_.end());
        return best_;
    }

private:
    bool adjacent(Vertex u, Vertex v) const { return adj_[static_cast<std::size_t>(u) * n_ + v] != 0; }

    // Repeatedly strip a minimum-degree vertex (lowest id on ties).
    std::vector<Vertex> degeneracy_order() const {
        std::vector<std::size_t> deg(n_);
        std::vector<char> gone(n_, 0);
        for (std::size_t v = 0; v < n_; ++v) deg[v] = g_.degree(static_cast<Vertex>(v));
        std::vector<Vertex> order;
        order.reserve(n_);
        for (std::size_t step = 0; step < n_; ++step) {
            std::size_t pick = n_;
            for (std::size_t v = 0; v < n_; ++v)
                if (!gone[v] && (pick == n_ || deg[v] < deg[pick])) pick = v;
            gone[pick] = 1;
            order.push_back(static_cast<Vertex>(pick));
            for (Vertex w : g_.neighbors(static_cast<Vertex>(pick)))
                if (!gone[w]) --deg[w];
        }
        return order;
    }

    void expand(std::vector<Vertex>& current, const std::vector<Vertex>& candidates) {
        // Greedy coloring of the candidates: color classes bound any clique inside.
        std::vector<std::vector<Vertex>> classes;
        for (Vertex v : candidates) {
            auto it = std::find_if(classes.begin(), classes.end(), [&](const std::vector<Vertex>& cls) {
                return std::none_of(cls.begin(), cls.end(), [&](Vertex u) { return adjacent(u, v); });
            });
            if (it == classes.end())
                classes.push_back({v});
            else
                it->push_back(v);
        }
        std::vector<Vertex> order;
        std::vector<std::size_t> bound;
        for (std::size_t c = 0; c < classes.size(); ++c)
            for (Vertex v : classes[c]) {
                order.push_back(v);
                bound.push_back(c + 1);
            }

        std::vector<char> removed(n_, 0);
        for (std::size_t idx = order.size(); idx-- > 0;) {
            if (current.size() + bound[idx] <= best_.size()) return;
            const Vertex v = order[idx];
            current.push_back(v);
            std::vector<Vertex> next;
            for (Vertex u : candidates)
                if (u != v && !removed[u] && adjacent(u, v)) next.push_back(u);
            if (next.empty()) {
                if (current.size() > best_.size()) best_ = current;
            } else {
                expand(current, next);
            }
            current.pop_back();
            removed[v] = 1;
        }
    }

    const Graph& g_;
    std::size_t n_;
    std::vector<char> adj_;
    std::vector<Vertex> best_;
};

}  // namespace

CliqueWitness max_clique(const Graph& g) {
    if (g.order() == 0) return {};
    return {CliqueSearch(g).run()};
}

}  // namespace nbhd
