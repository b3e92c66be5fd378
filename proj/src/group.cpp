#include "pft/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace pft {

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<std::size_t>>& table) {
    std::size_t n = table.size();
    if (n == 0) throw std::invalid_argument("group table: empty");
    for (auto& row : table)
        if (row.size() != n) throw std::invalid_argument("group table: not square");

    // Locate a two-sided identity.
    std::size_t id = n;
    for (std::size_t e = 0; e < n; ++e) {
        bool ok = true;
        for (std::size_t a = 0; a < n && ok; ++a) ok = table[e][a] == a && table[a][e] == a;
        if (ok) {
            id = e;
            break;
        }
    }
    if (id == n) throw std::invalid_argument("group table: no identity");

    // Renumber so the identity is 0.
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::swap(perm[0], perm[id]);
    std::vector<std::size_t> inv_perm(n);
    for (std::size_t i = 0; i < n; ++i) inv_perm[perm[i]] = i;

    FiniteGroup g;
    g.n_ = n;
    g.table_.assign(n * n, 0);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            std::size_t v = table[perm[a]][perm[b]];
            if (v >= n) throw std::invalid_argument("group table: entry out of range");
            g.table_[a * n + b] = inv_perm[v];
        }
    g.finish_init();
    return g;
}

void FiniteGroup::finish_init() {
    std::size_t n = n_;
    // Latin square check.
    for (std::size_t a = 0; a < n; ++a) {
        std::vector<bool> seen_row(n, false), seen_col(n, false);
        for (std::size_t b = 0; b < n; ++b) {
            seen_row[table_[a * n + b]] = true;
            seen_col[table_[b * n + a]] = true;
        }
        for (std::size_t b = 0; b < n; ++b)
            if (!seen_row[b] || !seen_col[b])
                throw std::invalid_argument("group table: not a latin square");
    }
    // Inverses.
    inv_.assign(n, 0);
    for (std::size_t a = 0; a < n; ++a) {
        bool found = false;
        for (std::size_t b = 0; b < n; ++b)
            if (mul(a, b) == 0 && mul(b, a) == 0) {
                inv_[a] = b;
                found = true;
                break;
            }
        if (!found) throw std::invalid_argument("group table: missing inverse");
    }
    // Associativity, exhaustive for small tables.
    if (n <= 128) {
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t c = 0; c < n; ++c)
                    if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                        throw std::invalid_argument("group table: not associative");
    }
    // Conjugacy classes.
    class_index_.assign(n, n);
    for (std::size_t g = 0; g < n; ++g) {
        if (class_index_[g] != n) continue;
        std::size_t c = class_reps_.size();
        class_reps_.push_back(g);
        class_members_.emplace_back();
        for (std::size_t h = 0; h < n; ++h) {
            Elem conj = mul(mul(h, g), inv_[h]);
            if (class_index_[conj] == n) {
                class_index_[conj] = c;
                class_members_[c].push_back(conj);
            }
        }
        std::sort(class_members_[c].begin(), class_members_[c].end());
    }
}

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
    if (n == 0) throw std::invalid_argument("cyclic: order must be positive");
    FiniteGroup g;
    g.n_ = n;
    g.table_.assign(n * n, 0);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) g.table_[a * n + b] = (a + b) % n;
    g.finish_init();
    return g;
}

namespace {

void permutations(unsigned n, std::vector<std::vector<unsigned>>& out) {
    std::vector<unsigned> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
}

}  // namespace

FiniteGroup FiniteGroup::symmetric(unsigned n) {
    if (n == 0 || n > 5) throw std::invalid_argument("symmetric: supported for 1 <= n <= 5");
    std::vector<std::vector<unsigned>> perms;
    permutations(n, perms);
    std::size_t order = perms.size();
    std::map<std::vector<unsigned>, std::size_t> index;
    for (std::size_t i = 0; i < order; ++i) index[perms[i]] = i;
    std::vector<std::vector<std::size_t>> table(order, std::vector<std::size_t>(order));
    for (std::size_t a = 0; a < order; ++a)
        for (std::size_t b = 0; b < order; ++b) {
            std::vector<unsigned> comp(n);
            for (unsigned i = 0; i < n; ++i) comp[i] = perms[a][perms[b][i]];
            table[a][b] = index[comp];
        }
    return from_table(table);
}

FiniteGroup FiniteGroup::from_matrix_generators(const std::vector<IntMat>& gens,
                                                std::size_t order_bound) {
    if (gens.empty()) return cyclic(1);
    std::size_t k = gens[0].rows();
    for (auto& g : gens) {
        if (g.rows() != k || g.cols() != k)
            throw std::invalid_argument("matrix generators: shape mismatch");
        Integer d = det(g);
        if (d != 1 && d != -1)
            throw std::invalid_argument("matrix generators: not invertible over Z");
    }
    auto key = [k](const IntMat& m) {
        std::string s;
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) {
                s += m(i, j).str();
                s += ',';
            }
        return s;
    };
    std::vector<IntMat> elems{IntMat::identity(k)};
    std::map<std::string, std::size_t> index{{key(elems[0]), 0}};
    for (std::size_t cur = 0; cur < elems.size(); ++cur) {
        for (auto& g : gens) {
            IntMat next = elems[cur] * g;
            auto s = key(next);
            if (index.count(s)) continue;
            if (elems.size() >= order_bound)
                throw std::domain_error("matrix generators: order bound exceeded");
            index[s] = elems.size();
            elems.push_back(next);
        }
    }
    std::size_t n = elems.size();
    std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            auto s = key(elems[a] * elems[b]);
            auto it = index.find(s);
            if (it == index.end())
                throw std::logic_error("matrix generators: closure not closed");
            table[a][b] = it->second;
        }
    return from_table(table);
}

FiniteGroup::Elem FiniteGroup::power(Elem g, Integer e) const {
    std::size_t og = element_order(g);
    Integer r = mod_reduce(e, Integer(og));
    Elem acc = identity();
    Elem base = g;
    unsigned long long n = r.convert_to<unsigned long long>();
    while (n > 0) {
        if (n & 1ULL) acc = mul(acc, base);
        base = mul(base, base);
        n >>= 1;
    }
    return acc;
}

std::size_t FiniteGroup::element_order(Elem g) const {
    std::size_t ord = 1;
    Elem cur = g;
    while (cur != identity()) {
        cur = mul(cur, g);
        ++ord;
        if (ord > n_) throw std::logic_error("element_order: exceeded group order");
    }
    return ord;
}

std::vector<std::vector<std::size_t>> FiniteGroup::table() const {
    std::vector<std::vector<std::size_t>> t(n_, std::vector<std::size_t>(n_));
    for (std::size_t a = 0; a < n_; ++a)
        for (std::size_t b = 0; b < n_; ++b) t[a][b] = table_[a * n_ + b];
    return t;
}

}  // namespace pft
