#ifndef PLUMB_MATRIX_HPP
#define PLUMB_MATRIX_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "plumb/numeric.hpp"

namespace plumb {

// Dense square matrix of exact integers. Small: everything in this library
// is desk scale (tens of rows), so no effort is spent on sparsity.
class IntMatrix {
public:
    IntMatrix() = default;
    explicit IntMatrix(std::size_t n) : n_(n), entries_(n * n) {}
    IntMatrix(std::size_t n, std::vector<BigInt> entries);

    // Rows listed top to bottom, e.g. {{-2, 1}, {1, -2}}.
    IntMatrix(std::initializer_list<std::initializer_list<BigInt>> rows);

    static IntMatrix identity(std::size_t n);

    std::size_t size() const { return n_; }
    const BigInt& at(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
    BigInt& at(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }

    bool is_symmetric() const;

    IntMatrix operator*(const IntMatrix& rhs) const;
    bool operator==(const IntMatrix& rhs) const = default;

    // Rows of integers, one row per line; the debugging format.
    std::string to_string() const;

private:
    std::size_t n_ = 0;
    std::vector<BigInt> entries_;
};

} // namespace plumb

#endif
