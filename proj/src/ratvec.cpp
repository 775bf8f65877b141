#include "pcoh/ratvec.hpp"

#include <algorithm>

namespace pcoh {

RatVec::RatVec(const std::vector<Rat>& dense) {
    for (int i = 0; i < static_cast<int>(dense.size()); ++i)
        if (dense[i] != 0) entries_.emplace_back(i, dense[i]);
}

Rat RatVec::at(int index) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                               [](const auto& e, int i) { return e.first < i; });
    if (it != entries_.end() && it->first == index) return it->second;
    return Rat(0);
}

void RatVec::set(int index, const Rat& value) {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                               [](const auto& e, int i) { return e.first < i; });
    if (it != entries_.end() && it->first == index) {
        if (value == 0)
            entries_.erase(it);
        else
            it->second = value;
    } else if (value != 0) {
        entries_.insert(it, {index, value});
    }
}

bool RatVec::is_nonnegative() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const auto& e) { return e.second >= 0; });
}

RatVec RatVec::operator+(const RatVec& other) const {
    std::vector<std::pair<int, Rat>> out;
    out.reserve(entries_.size() + other.entries_.size());
    auto a = entries_.begin(), b = other.entries_.begin();
    while (a != entries_.end() || b != other.entries_.end()) {
        if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
            out.push_back(*a++);
        } else if (a == entries_.end() || b->first < a->first) {
            out.push_back(*b++);
        } else {
            Rat v = a->second + b->second;
            if (v != 0) out.emplace_back(a->first, v);
            ++a, ++b;
        }
    }
    return RatVec(std::move(out), Sorted{});
}

RatVec RatVec::operator-(const RatVec& other) const {
    return *this + other.scaled(rat(-1));
}

RatVec RatVec::scaled(const Rat& factor) const {
    if (factor == 0) return RatVec();
    std::vector<std::pair<int, Rat>> out;
    out.reserve(entries_.size());
    for (const auto& [i, v] : entries_) out.emplace_back(i, v * factor);
    return RatVec(std::move(out), Sorted{});
}

Rat RatVec::dot(const RatVec& other) const {
    Rat acc(0);
    auto a = entries_.begin(), b = other.entries_.begin();
    while (a != entries_.end() && b != other.entries_.end()) {
        if (a->first < b->first)
            ++a;
        else if (b->first < a->first)
            ++b;
        else
            acc += a->second * b->second, ++a, ++b;
    }
    return acc;
}

Rat RatVec::sum() const {
    Rat acc(0);
    for (const auto& [i, v] : entries_) acc += v;
    return acc;
}

bool RatVec::leq(const RatVec& other) const {
    auto a = entries_.begin(), b = other.entries_.begin();
    while (a != entries_.end() || b != other.entries_.end()) {
        if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
            if (a->second > 0) return false;
            ++a;
        } else if (a == entries_.end() || b->first < a->first) {
            if (b->second < 0) return false;
            ++b;
        } else {
            if (a->second > b->second) return false;
            ++a, ++b;
        }
    }
    return true;
}

RatVec RatVec::max_with(const RatVec& other) const {
    std::vector<std::pair<int, Rat>> out;
    auto a = entries_.begin(), b = other.entries_.begin();
    auto push = [&out](int i, const Rat& v) {
        if (v != 0) out.emplace_back(i, v);
    };
    while (a != entries_.end() || b != other.entries_.end()) {
        if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
            push(a->first, std::max(a->second, Rat(0)));
            ++a;
        } else if (a == entries_.end() || b->first < a->first) {
            push(b->first, std::max(b->second, Rat(0)));
            ++b;
        } else {
            push(a->first, std::max(a->second, b->second));
            ++a, ++b;
        }
    }
    return RatVec(std::move(out), Sorted{});
}

bool RatVec::lex_less(const RatVec& a, const RatVec& b) {
    auto ia = a.entries_.begin(), ib = b.entries_.begin();
    // Walk coordinates in increasing index; a missing entry is 0.
    while (ia != a.entries_.end() || ib != b.entries_.end()) {
        int pa = ia == a.entries_.end() ? -1 : ia->first;
        int pb = ib == b.entries_.end() ? -1 : ib->first;
        if (pa == pb) {
            if (ia->second != ib->second) return ia->second < ib->second;
            ++ia, ++ib;
        } else if (pb == -1 || (pa != -1 && pa < pb)) {
            // a has a nonzero where b has 0 at index pa
            return ia->second < 0;
        } else {
            return ib->second > 0;
        }
    }
    return false;
}

std::vector<Rat> RatVec::to_dense(int dim) const {
    std::vector<Rat> out(dim, Rat(0));
    for (const auto& [i, v] : entries_) out[i] = v;
    return out;
}

}  // namespace pcoh
