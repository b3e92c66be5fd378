#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pft/matrix.hpp"

namespace pft {

// Finite group given by its multiplication table. Elements are indices
// 0..n-1 with 0 the identity after normalization.
class FiniteGroup {
public:
    using Elem = std::size_t;

    // table[a][b] = a*b. Validated: latin square, two-sided identity,
    // inverses; associativity is checked exhaustively for small tables.
    static FiniteGroup from_table(const std::vector<std::vector<std::size_t>>& table);
    static FiniteGroup cyclic(std::size_t n);
    static FiniteGroup symmetric(unsigned n);  // n <= 5
    // Closure of integer matrix generators under multiplication; throws if
    // the generated group exceeds order_bound or a generator is singular.
    static FiniteGroup from_matrix_generators(const std::vector<IntMat>& gens,
                                              std::size_t order_bound = 10000);

    std::size_t order() const { return n_; }
    Elem identity() const { return 0; }
    Elem mul(Elem a, Elem b) const { return table_[a * n_ + b]; }
    Elem inverse(Elem a) const { return inv_[a]; }
    Elem power(Elem g, Integer e) const;
    std::size_t element_order(Elem g) const;

    std::size_t class_count() const { return class_reps_.size(); }
    std::size_t class_of(Elem g) const { return class_index_[g]; }
    Elem class_rep(std::size_t c) const { return class_reps_[c]; }
    const std::vector<Elem>& class_members(std::size_t c) const { return class_members_[c]; }

    bool operator==(const FiniteGroup& o) const { return n_ == o.n_ && table_ == o.table_; }

    std::vector<std::vector<std::size_t>> table() const;

private:
    FiniteGroup() = default;
    void finish_init();

    std::size_t n_ = 1;
    std::vector<Elem> table_;  // n*n
    std::vector<Elem> inv_;
    std::vector<std::size_t> class_index_;
    std::vector<Elem> class_reps_;
    std::vector<std::vector<Elem>> class_members_;
};

}  // namespace pft
