#include "pft/fox.hpp"

#include <stdexcept>

namespace pft {

FreeWord::FreeWord(std::vector<int> raw) {
    for (int l : raw) {
        if (l == 0) throw std::invalid_argument("FreeWord: zero letter");
        if (!letters_.empty() && letters_.back() == -l)
            letters_.pop_back();
        else
            letters_.push_back(l);
    }
}

FreeWord FreeWord::from_letters(const std::vector<int>& letters) { return FreeWord(letters); }

FreeWord FreeWord::inverse() const {
    std::vector<int> rev;
    rev.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) rev.push_back(-*it);
    return FreeWord(std::move(rev));
}

FreeWord FreeWord::operator*(const FreeWord& o) const {
    std::vector<int> cat = letters_;
    cat.insert(cat.end(), o.letters_.begin(), o.letters_.end());
    return FreeWord(std::move(cat));
}

void GroupRingElem::add_term(const FreeWord& w, const Integer& c) {
    if (c == 0) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_[w] = c;
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

GroupRingElem GroupRingElem::operator+(const GroupRingElem& o) const {
    GroupRingElem r = *this;
    for (auto& [w, c] : o.terms_) r.add_term(w, c);
    return r;
}

GroupRingElem GroupRingElem::operator-(const GroupRingElem& o) const {
    GroupRingElem r = *this;
    for (auto& [w, c] : o.terms_) r.add_term(w, -c);
    return r;
}

GroupRingElem GroupRingElem::operator-() const {
    GroupRingElem r;
    for (auto& [w, c] : terms_) r.terms_[w] = -c;
    return r;
}

GroupRingElem GroupRingElem::operator*(const GroupRingElem& o) const {
    GroupRingElem r;
    for (auto& [w1, c1] : terms_)
        for (auto& [w2, c2] : o.terms_) r.add_term(w1 * w2, c1 * c2);
    return r;
}

Integer GroupRingElem::augmentation() const {
    Integer s = 0;
    for (auto& [w, c] : terms_) s += c;
    return s;
}

GroupRingElem fox_derivative(const FreeWord& w, unsigned gen) {
    GroupRingElem out;
    FreeWord prefix;
    int pos = static_cast<int>(gen) + 1;
    for (int l : w.letters()) {
        if (l == pos) {
            out.add_term(prefix, 1);
        } else if (l == -pos) {
            // d(x^-1) = -x^-1
            out.add_term(prefix * FreeWord::from_letters({-pos}), -1);
        }
        prefix = prefix * FreeWord::from_letters({l});
    }
    return out;
}

FreeWord surface_relator(unsigned genus) {
    FreeWord w;
    for (unsigned i = 0; i < genus; ++i) {
        FreeWord a = FreeWord::generator(2 * i);
        FreeWord b = FreeWord::generator(2 * i + 1);
        w = w * a * b * a.inverse() * b.inverse();
    }
    return w;
}

}  // namespace pft
