// Serial reference kernels against their OpenMP counterparts.
//
//   bench_kernels [--nodes N] [--edges M] [--reps R] [--seed S]

#include <chrono>
#include <cstdint>
#include <functional>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "simphom/enumerate.hpp"
#include "simphom/linkpred.hpp"
#include "simphom/ssbm.hpp"

using namespace simphom;

namespace {

double seconds(const std::function<void()>& f, int reps) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
    best = std::min(best, dt.count());
  }
  return best;
}

void row(const char* name, double serial, double parallel) {
  fmt::print("{:<28} {:>10.3f} {:>10.3f} {:>8.2f}x\n", name, serial, parallel, serial / parallel);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kernel timings: serial reference vs OpenMP"};
  std::size_t nodes = 50000, edges = 1200000;
  int reps = 3;
  std::uint64_t seed = 1;
  app.add_option("--nodes", nodes);
  app.add_option("--edges", edges);
  app.add_option("--reps", reps)->check(CLI::PositiveNumber);
  app.add_option("--seed", seed);
  CLI11_PARSE(app, argc, argv);

  const auto t0 = std::chrono::steady_clock::now();
  const SimplicialComplex g = random_gnm_graph(nodes, edges, seed);
  const std::chrono::duration<double> gen = std::chrono::steady_clock::now() - t0;
  fmt::print("G(n={}, m={}) built in {:.2f} s, {} threads available\n\n", nodes, edges, gen.count(), max_threads());
  fmt::print("{:<28} {:>10} {:>10} {:>9}\n", "kernel", "serial s", "omp s", "speedup");

  std::uint64_t a = 0, b = 0;
  row("count closed triangles", seconds([&] { a = count_closed_triangles_serial(g); }, reps),
      seconds([&] { b = count_closed_triangles(g); }, reps));
  if (a != b) fmt::print("MISMATCH {} vs {}\n", a, b);
  fmt::print("  ({} closed triangles)\n", a);

  row("list closed triangles", seconds([&] { a = closed_triangles_serial(g).size(); }, reps),
      seconds([&] { b = closed_triangles(g).size(); }, reps));

  std::vector<ClassId> labels(nodes);
  for (std::size_t v = 0; v < nodes; ++v) labels[v] = static_cast<ClassId>(v % 3);
  const ClassLabeling l(labels, 3);
  row("tally potential 2-simplices", seconds([&] { (void)tally_potential_k_simplices_serial(g, l, 2); }, reps),
      seconds([&] { (void)tally_potential_k_simplices(g, l, 2); }, reps));

  // Feature extraction on the candidate triangles of a smaller window.
  std::vector<TimestampedSimplex> stream;
  const GroupView e = g.simplices(1);
  for (std::size_t i = 0; i < std::min<std::size_t>(e.size(), 200000); ++i) {
    stream.push_back({Simplex(std::vector<NodeId>(e[i].begin(), e[i].end())), static_cast<double>(i)});
  }
  const TrainingWindow window(stream, nodes);
  const auto candidates = generate_candidates(window, {});
  const double fserial = seconds(
      [&] {
        for (const auto& c : candidates) (void)extract_features(c, window, &l);
      },
      reps);
  row("feature extraction", fserial, seconds([&] { (void)extract_feature_matrix(candidates, window, &l); }, reps));
  fmt::print("  ({} candidates)\n", candidates.size());
  return 0;
}
