// Times the OpenMP kernels against their serial references.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include <omp.h>

#include "nbhd/boundary.hpp"
#include "nbhd/complex.hpp"
#include "nbhd/constructions.hpp"

using namespace nbhd;

static double time_ms(const std::function<void()>& fn, int reps) {
    auto start = std::chrono::steady_clock::now();
    for (int i = 0; i < reps; ++i) fn();
    std::chrono::duration<double, std::milli> dt = std::chrono::steady_clock::now() - start;
    return dt.count() / reps;
}

static void bench(const std::string& name, const Graph& g, int dim, int reps) {
    SimplicialComplex c = neighborhood_complex(g);
    FaceTable table = faces_up_to(c, dim);
    std::size_t faces = 0;
    for (const auto& level : table.by_dim) faces += level.size();

    double par_faces = time_ms([&] { faces_up_to(c, dim); }, reps);
    double ser_faces = time_ms([&] { serial::faces_up_to(c, dim); }, reps);
    double par_bd = time_ms([&] { for (int i = 1; i <= dim; ++i) boundary_matrix(table, i); }, reps);
    double ser_bd = time_ms([&] { for (int i = 1; i <= dim; ++i) serial::boundary_matrix(table, i); }, reps);

    bool same = true;
    for (int i = 1; i <= dim; ++i) same = same && boundary_matrix(table, i).to_dense() ==
                                                      serial::boundary_matrix(table, i).to_dense();

    std::printf("%-22s dim=%d faces=%-8zu faces_up_to %8.2f ms (serial %8.2f)  boundary %8.2f ms (serial %8.2f)  %s\n",
                name.c_str(), dim, faces, par_faces, ser_faces, par_bd, ser_bd, same ? "agree" : "MISMATCH");
}

int main() {
    std::printf("threads=%d\n", omp_get_max_threads());
    bench("kneser(7,2)", kneser_graph(7, 2), 3, 5);
    bench("kneser(8,2)", kneser_graph(8, 2), 3, 3);
    bench("corollary l2m2p3q5", build_corollary_graph({2, 2, 3, 5}).graph, 3, 5);
    bench("trianglefree q=5", triangle_free_chromatic(5), 3, 5);
    return 0;
}
