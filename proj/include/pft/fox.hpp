#pragma once

#include <map>
#include <vector>

#include "pft/integer.hpp"

namespace pft {

// Reduced word in a free group; letters are nonzero ints, +i for the
// (i-1)-th generator and -i for its inverse.
class FreeWord {
public:
    FreeWord() = default;

    static FreeWord generator(unsigned idx) { return FreeWord({static_cast<int>(idx) + 1}); }
    static FreeWord from_letters(const std::vector<int>& letters);

    bool is_identity() const { return letters_.empty(); }
    const std::vector<int>& letters() const { return letters_; }

    FreeWord inverse() const;
    FreeWord operator*(const FreeWord& o) const;

    bool operator==(const FreeWord& o) const { return letters_ == o.letters_; }
    bool operator<(const FreeWord& o) const { return letters_ < o.letters_; }

private:
    explicit FreeWord(std::vector<int> raw);
    std::vector<int> letters_;
};

// Element of the integral group ring of a free group.
class GroupRingElem {
public:
    GroupRingElem() = default;
    GroupRingElem(int c) {  // 0 and 1 literals for generic matrix code
        if (c != 0) terms_[FreeWord()] = c;
    }
    static GroupRingElem of_word(const FreeWord& w) {
        GroupRingElem e;
        e.terms_[w] = 1;
        return e;
    }

    bool is_zero() const { return terms_.empty(); }
    const std::map<FreeWord, Integer>& terms() const { return terms_; }

    GroupRingElem operator+(const GroupRingElem& o) const;
    GroupRingElem operator-(const GroupRingElem& o) const;
    GroupRingElem operator-() const;
    GroupRingElem operator*(const GroupRingElem& o) const;

    bool operator==(const GroupRingElem& o) const { return terms_ == o.terms_; }

    // Image under the augmentation w -> 1.
    Integer augmentation() const;

    void add_term(const FreeWord& w, const Integer& c);

private:
    std::map<FreeWord, Integer> terms_;
};

// Fox derivative d(w)/d(x_gen) in the group ring: d(uv) = du + u dv,
// d(x)/dx = 1, d(x^-1)/dx = -x^-1.
GroupRingElem fox_derivative(const FreeWord& w, unsigned gen);

// [a_1,b_1]...[a_g,b_g] with a_i = generator(2i), b_i = generator(2i+1).
FreeWord surface_relator(unsigned genus);

}  // namespace pft
