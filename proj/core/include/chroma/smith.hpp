#pragma once

#include <cstdint>
#include <vector>

namespace chroma {

using IntMatrix = std::vector<std::vector<long long>>;

// Smith normal form over the integers: U * A * V = D with U, V unimodular and
// D diagonal with d_1 | d_2 | ... (nonnegative entries).
struct SmithForm {
    IntMatrix D, U, V;
    std::vector<long long> diagonal;  // min(rows, cols) entries
};

SmithForm smith_normal_form(const IntMatrix& a);

// Kernel of A (rows x cols) over Z/N, as a generating set of the solution
// subgroup of (Z/N)^cols together with the order of each generator; the
// kernel is the internal direct sum of the cyclic groups they generate.
struct ModKernel {
    std::vector<std::vector<long long>> generators;
    std::vector<long long> orders;
    long long size() const;  // saturates at INT64_MAX
};

ModKernel kernel_mod(const IntMatrix& a, std::size_t cols, long long n);

}  // namespace chroma
