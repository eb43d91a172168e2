#ifndef SEPSYS_CORPUS_HPP
#define SEPSYS_CORPUS_HPP

#include <cstdint>
#include <random>
#include <vector>

namespace sepsys {

// Seeded generator wrapper: mt19937_64 has a standard-specified stream, and
// the helpers below avoid the implementation-defined standard distributions,
// so outputs are identical across platforms for a given seed.
class Rng {
public:
    explicit Rng(uint64_t seed) : s_(seed) {}
    uint64_t next() { return s_(); }
    int below(int n);      // uniform in [0, n)
    double unit();         // uniform in [0, 1)

private:
    std::mt19937_64 s_;
};

std::vector<std::pair<int, int>> gen_complete(int n);
std::vector<std::pair<int, int>> gen_gnp(int n, double p, uint64_t seed);
std::vector<std::pair<int, int>> gen_hypercube(int dim);
std::vector<std::pair<int, int>> gen_tree(int n, uint64_t seed);
std::vector<std::pair<int, int>> gen_grid(int rows, int cols);
// The 18-cycle with the eight difference-4 chords starting at
// 2,3,4,5,10,11,12,13 (0-based vertices 0..17).
std::vector<std::pair<int, int>> gen_fig1();

}  // namespace sepsys

#endif
