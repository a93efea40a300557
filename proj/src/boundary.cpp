#include "nbhd/boundary.hpp"

#include <atomic>
#include <map>
#include <string>

#include "nbhd/errors.hpp"

namespace nbhd {

namespace {

void check_dimension(const FaceTable& table, int i) {
    if (i < 1) throw ParameterError("boundary dimension must be >= 1");
    if (i > table.max_dim())
        throw ParameterError("face table missing dimension " + std::to_string(i));
}

}  // namespace

IntegerMatrix boundary_matrix(const FaceTable& table, int i) {
    check_dimension(table, i);
    const FaceList& faces = table.by_dim[static_cast<std::size_t>(i)];
    const FaceList& sub = table.by_dim[static_cast<std::size_t>(i - 1)];
    const std::size_t w = faces.width();
    const std::size_t cols = faces.size();

    // Row index of the facet obtained by dropping vertex t of column j.
    std::vector<std::size_t> hit(cols * w);
    std::atomic<bool> missing = false;

#pragma omp parallel for schedule(static)
    for (std::size_t j = 0; j < cols; ++j) {
        auto face = faces[j];
        std::vector<Vertex> drop(w - 1);
        for (std::size_t t = 0; t < w; ++t) {
            for (std::size_t s = 0, k = 0; s < w; ++s)
                if (s != t) drop[k++] = face[s];
            auto idx = sub.index_of(drop);
            if (!idx) missing = true;
            hit[j * w + t] = idx.value_or(0);
        }
    }
    if (missing) throw ParameterError("face table not closed under taking faces");

    std::vector<std::size_t> row_len(sub.size(), 0);
    for (std::size_t r : hit) ++row_len[r];
    std::vector<IntegerMatrix::Row> rows(sub.size());
    for (std::size_t r = 0; r < rows.size(); ++r) rows[r].reserve(row_len[r]);
    for (std::size_t j = 0; j < cols; ++j)
        for (std::size_t t = 0; t < w; ++t) rows[hit[j * w + t]].push_back({j, Integer(t % 2 == 0 ? 1 : -1)});
    return IntegerMatrix::from_rows(cols, std::move(rows));
}

namespace serial {

IntegerMatrix boundary_matrix(const FaceTable& table, int i) {
    check_dimension(table, i);
    const FaceList& faces = table.by_dim[static_cast<std::size_t>(i)];
    const FaceList& sub = table.by_dim[static_cast<std::size_t>(i - 1)];
    std::map<std::pair<std::size_t, std::size_t>, int> entries;
    for (std::size_t j = 0; j < faces.size(); ++j) {
        Face face(faces[j].begin(), faces[j].end());
        for (std::size_t t = 0; t < face.size(); ++t) {
            Face drop = face;
            drop.erase(drop.begin() + static_cast<std::ptrdiff_t>(t));
            auto idx = sub.index_of(drop);
            if (!idx) throw ParameterError("face table not closed under taking faces");
            entries[{*idx, j}] += (t % 2 == 0) ? 1 : -1;
        }
    }
    std::vector<IntegerMatrix::Row> rows(sub.size());
    for (auto [key, v] : entries) rows[key.first].push_back({key.second, Integer(v)});
    return IntegerMatrix::from_rows(faces.size(), std::move(rows));
}

}  // namespace serial

}  // namespace nbhd
