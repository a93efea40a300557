#include <algorithm>
#include <numeric>

#include "nbhd/invariants.hpp"

namespace nbhd {

namespace {

// Incremental saturation bookkeeping shared by the greedy and exact searches.
class SaturationState {
public:
    SaturationState(const Graph& g, int k)
        : g_(g), k_(static_cast<std::size_t>(k)), color_(static_cast<std::size_t>(g.order()), -1),
          count_(static_cast<std::size_t>(g.order()) * k_, 0), sat_(static_cast<std::size_t>(g.order()), 0) {}

    int color(Vertex v) const { return color_[v]; }
    const std::vector<int>& colors() const { return color_; }
    bool allowed(Vertex v, int c) const { return count_[static_cast<std::size_t>(v) * k_ + c] == 0; }

    void assign(Vertex v, int c) {
        color_[v] = c;
        for (Vertex w : g_.neighbors(v))
            if (count_[static_cast<std::size_t>(w) * k_ + c]++ == 0) ++sat_[w];
    }

    void unassign(Vertex v) {
        const int c = color_[v];
        color_[v] = -1;
        for (Vertex w : g_.neighbors(v))
            if (--count_[static_cast<std::size_t>(w) * k_ + c] == 0) --sat_[w];
    }

    // Uncolored vertex of maximum saturation, then maximum degree, then lowest id.
    Vertex select() const {
        Vertex best = -1;
        for (Vertex v = 0; v < g_.order(); ++v) {
            if (color_[v] >= 0) continue;
            if (best < 0 || sat_[v] > sat_[best] || (sat_[v] == sat_[best] && g_.degree(v) > g_.degree(best)))
                best = v;
        }
        return best;
    }

private:
    const Graph& g_;
    std::size_t k_;
    std::vector<int> color_;
    std::vector<int> count_;
    std::vector<int> sat_;
};

class ExactColorer {
public:
    ExactColorer(const Graph& g, int k) : g_(g), k_(k), state_(g, k) {}

    std::optional<std::vector<int>> run(const CliqueWitness& clique) {
        if (static_cast<int>(clique.size()) > k_) return std::nullopt;
        int used = 0;
        for (Vertex v : clique.vertices) state_.assign(v, used++);
        if (search(static_cast<Vertex>(clique.size()), used - 1)) return state_.colors();
        return std::nullopt;
    }

private:
    bool search(Vertex colored, int max_used) {
        if (colored == g_.order()) return true;
        const Vertex v = state_.select();
        // Unused colors are interchangeable: only the first one is tried.
        const int top = std::min(k_ - 1, max_used + 1);
        for (int c = 0; c <= top; ++c) {
            if (!state_.allowed(v, c)) continue;
            state_.assign(v, c);
            if (search(colored + 1, std::max(max_used, c))) return true;
            state_.unassign(v);
        }
        return false;
    }

    const Graph& g_;
    int k_;
    SaturationState state_;
};

// Glues per-block colorings along the block-cut tree: each block joins the
// colored region through a single cut vertex, so one color transposition
// makes it agree there.
std::vector<int> glue_blocks(const Graph& g, const std::vector<std::vector<Vertex>>& blocks,
                             const std::vector<std::vector<int>>& block_colors, int palette) {
    std::vector<int> color(static_cast<std::size_t>(g.order()), -1);
    std::vector<char> done(blocks.size(), 0);
    std::size_t remaining = blocks.size();
    while (remaining > 0) {
        std::size_t pick = blocks.size();
        Vertex shared = -1;
        for (std::size_t b = 0; b < blocks.size() && pick == blocks.size(); ++b) {
            if (done[b]) continue;
            for (Vertex v : blocks[b])
                if (color[v] >= 0) {
                    pick = b;
                    shared = v;
                    break;
                }
        }
        if (pick == blocks.size())  // start a new connected component
            pick = static_cast<std::size_t>(std::find(done.begin(), done.end(), 0) - done.begin());

        const auto& vs = blocks[pick];
        std::vector<int> perm(static_cast<std::size_t>(palette));
        std::iota(perm.begin(), perm.end(), 0);
        if (shared >= 0) {
            auto pos = static_cast<std::size_t>(std::lower_bound(vs.begin(), vs.end(), shared) - vs.begin());
            std::swap(perm[block_colors[pick][pos]], perm[color[shared]]);
        }
        for (std::size_t i = 0; i < vs.size(); ++i) color[vs[i]] = perm[block_colors[pick][i]];
        done[pick] = 1;
        --remaining;
    }
    return color;
}

ColoringWitness compact(std::vector<int> assignment) {
    std::vector<int> used = assignment;
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    for (int& c : assignment)
        c = static_cast<int>(std::lower_bound(used.begin(), used.end(), c) - used.begin());
    return {static_cast<int>(used.size()), std::move(assignment)};
}

// Optimal coloring of one block together with its color count.
std::pair<int, std::vector<int>> color_block_optimally(const Graph& block) {
    const CliqueWitness clique = max_clique(block);
    const ColoringWitness greedy = greedy_dsatur(block);
    for (int k = static_cast<int>(clique.size()); k < greedy.k; ++k)
        if (auto found = ExactColorer(block, k).run(clique)) return {k, std::move(*found)};
    return {greedy.k, greedy.assignment};
}

}  // namespace

ColoringWitness greedy_dsatur(const Graph& g) {
    const Vertex n = g.order();
    if (n == 0) return {};
    int palette = 1;
    for (Vertex v = 0; v < n; ++v) palette = std::max(palette, static_cast<int>(g.degree(v)) + 1);
    SaturationState state(g, palette);
    int k = 0;
    for (Vertex step = 0; step < n; ++step) {
        const Vertex v = state.select();
        int c = 0;
        while (!state.allowed(v, c)) ++c;
        state.assign(v, c);
        k = std::max(k, c + 1);
    }
    return {k, state.colors()};
}

std::optional<ColoringWitness> is_k_colorable(const Graph& g, int k) {
    if (g.order() == 0) return ColoringWitness{};
    if (k <= 0) return std::nullopt;

    const auto blocks = biconnected_blocks(g);
    std::vector<std::vector<int>> block_colors;
    for (const auto& vs : blocks) {
        const Graph block = induced_subgraph(g, vs);
        auto found = ExactColorer(block, k).run(max_clique(block));
        if (!found) return std::nullopt;
        block_colors.push_back(std::move(*found));
    }
    return compact(glue_blocks(g, blocks, block_colors, k));
}

ColoringWitness chromatic_number(const Graph& g) {
    if (g.order() == 0) return {};
    const auto blocks = biconnected_blocks(g);
    std::vector<std::vector<int>> block_colors;
    int chi = 0;
    for (const auto& vs : blocks) {
        auto [k, colors] = color_block_optimally(induced_subgraph(g, vs));
        chi = std::max(chi, k);
        block_colors.push_back(std::move(colors));
    }
    return compact(glue_blocks(g, blocks, block_colors, chi));
}

}  // namespace nbhd
