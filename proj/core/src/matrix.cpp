#include "plumb/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace plumb {

IntMatrix::IntMatrix(std::size_t n, std::vector<BigInt> entries) : n_(n), entries_(std::move(entries)) {
    if (entries_.size() != n_ * n_) {
        throw std::invalid_argument("IntMatrix: entry count does not match dimension");
    }
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<BigInt>> rows) : n_(rows.size()) {
    entries_.reserve(n_ * n_);
    for (const auto& row : rows) {
        if (row.size() != n_) {
            throw std::invalid_argument("IntMatrix: ragged initializer");
        }
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool IntMatrix::is_symmetric() const {
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = i + 1; j < n_; ++j) {
            if (at(i, j) != at(j, i)) return false;
        }
    }
    return true;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (n_ != rhs.n_) throw std::invalid_argument("IntMatrix: dimension mismatch");
    IntMatrix out(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t k = 0; k < n_; ++k) {
            const BigInt& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < n_; ++j) {
                out.at(i, j) += a * rhs.at(k, j);
            }
        }
    }
    return out;
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            if (j) os << ' ';
            os << at(i, j);
        }
        os << '\n';
    }
    return os.str();
}

} // namespace plumb
